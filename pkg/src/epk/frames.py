"""Frame-property checks: reflexivity, symmetry, seriality, transitivity,
Euclideanness, reported per agent either over the whole state space or over
the agent's subjective domain (the closure of its local states under its
own edges).

These are reports, never enforcement: transformations are free to produce
globally non-serial relations, and frequently do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Tuple

from .model import Agent, Edge, KripkeModel, ModelError, StateId, reachable_from

PROPERTIES = ("reflexive", "symmetric", "serial", "transitive", "euclidean")


@dataclass(frozen=True)
class FramePropertyReport:
    agent: Agent
    domain: FrozenSet[StateId]
    reflexive: bool
    symmetric: bool
    serial: bool
    transitive: bool
    euclidean: bool
    # one counterexample tuple per failed property
    witnesses: Dict[str, Tuple[StateId, ...]] = field(default_factory=dict)


def check_properties(relation: FrozenSet[Edge], domain: FrozenSet[StateId],
                     agent: Agent = "") -> FramePropertyReport:
    relation = frozenset(relation)
    domain = frozenset(domain)
    for (s, t) in relation:
        if s not in domain or t not in domain:
            raise ModelError(f"relation endpoint {s if s not in domain else t} outside domain")

    succ: Dict[StateId, set] = {}
    for (s, t) in relation:
        succ.setdefault(s, set()).add(t)

    witnesses: Dict[str, Tuple[StateId, ...]] = {}

    for s in sorted(domain):
        if (s, s) not in relation:
            witnesses["reflexive"] = (s,)
            break
    for s in sorted(domain):
        if not succ.get(s):
            witnesses["serial"] = (s,)
            break
    for (s, t) in sorted(relation):
        if (t, s) not in relation:
            witnesses["symmetric"] = (s, t)
            break
    done = False
    for (s, t) in sorted(relation):
        for u in sorted(succ.get(t, ())):
            if (s, u) not in relation:
                witnesses["transitive"] = (s, t, u)
                done = True
                break
        if done:
            break
    done = False
    for (s, t) in sorted(relation):
        for u in sorted(succ.get(s, ())):
            if (t, u) not in relation:
                witnesses["euclidean"] = (s, t, u)
                done = True
                break
        if done:
            break

    flags = {p: p not in witnesses for p in PROPERTIES}
    return FramePropertyReport(agent=agent, domain=domain, witnesses=witnesses, **flags)


def classify_model(model: KripkeModel, mode: str = "global") -> Dict[Agent, FramePropertyReport]:
    """Per-agent frame report.  Global mode checks R(i) over all states;
    local mode checks R(i) restricted to the i-reachable closure of I(i)."""
    if mode not in ("global", "local"):
        raise ModelError(f"unknown validation mode: {mode}")
    reports = {}
    for a in sorted(model.agents):
        if mode == "global":
            domain = model.states
            relation = model.relations[a]
        else:
            domain = reachable_from(model, model.locals[a], {a})
            relation = frozenset((s, t) for (s, t) in model.relations[a]
                                 if s in domain and t in domain)
        reports[a] = check_properties(relation, domain, agent=a)
    return reports


def is_kd45(report: FramePropertyReport) -> bool:
    return report.serial and report.transitive and report.euclidean


def is_s5(report: FramePropertyReport) -> bool:
    return report.reflexive and report.symmetric and report.transitive
