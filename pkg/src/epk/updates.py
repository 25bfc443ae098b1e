"""The four ontological update operators, as pure model-to-model functions.

Truthful updates announce a real departure (offline) or arrival (online) to
everyone.  Untruthful updates split the model into an "act" region that only
the informed agents can see and a "shift" region housing the misinformed
agents' picture of the world, wired together by one-way cross edges.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional

from .formulas import CertainAgent
from .model import (Agent, KripkeModel, ModelError, StateId, prune_unreachable,
                    replicate_with_lineage)
from .semantics import holds_for_agent

UPDATE_KINDS = ("offline", "online", "lie_offline", "lie_online")


@dataclass(frozen=True)
class UpdateSpec:
    """Parameters of one ontological update."""

    kind: str
    target: Agent
    liar: Optional[Agent] = None
    new_locals: Optional[FrozenSet[StateId]] = None

    def __post_init__(self):
        if self.kind not in UPDATE_KINDS:
            raise ModelError(f"unknown update kind: {self.kind}")
        needs_liar = self.kind in ("lie_offline", "lie_online")
        if needs_liar != (self.liar is not None):
            raise ModelError(f"update {self.kind}: liar {'required' if needs_liar else 'not allowed'}")
        needs_locals = self.kind in ("online", "lie_online")
        if needs_locals != (self.new_locals is not None):
            raise ModelError(f"update {self.kind}: new_locals {'required' if needs_locals else 'not allowed'}")


@dataclass(frozen=True)
class UpdateResult:
    """An updated model plus an audit diff against the input."""

    model: KripkeModel
    discarded_states: FrozenSet[StateId]
    added_edges: Dict[Agent, int]
    removed_edges: Dict[Agent, int]


def _edge_diff(before: KripkeModel, after: KripkeModel):
    added, removed = {}, {}
    for a in sorted(before.agents | after.agents):
        old = before.relations.get(a, frozenset())
        new = after.relations.get(a, frozenset())
        added[a] = len(new - old)
        removed[a] = len(old - new)
    return added, removed


def _finish(before: KripkeModel, after: KripkeModel,
            discarded: Iterable[StateId]) -> UpdateResult:
    added, removed = _edge_diff(before, after)
    return UpdateResult(model=after, discarded_states=frozenset(discarded),
                        added_edges=added, removed_edges=removed)


def apply_update(model: KripkeModel, spec: UpdateSpec) -> UpdateResult:
    if spec.kind == "offline":
        return update_offline(model, spec.target)
    if spec.kind == "online":
        return update_online(model, spec.target, spec.new_locals)
    if spec.kind == "lie_offline":
        return lie_offline(model, spec.liar, spec.target)
    return lie_online(model, spec.liar, spec.target, spec.new_locals)


def update_offline(model: KripkeModel, j: Agent) -> UpdateResult:
    """Announce truthfully that agent j has gone offline.

    Drops j (and its whole relation) and prunes states no longer reachable
    from the remaining agents' local states.
    """
    model.require_agent(j)
    agents = model.agents - {j}
    interim = KripkeModel(
        states=model.states,
        agents=agents,
        props=model.props,
        relations={a: model.relations[a] for a in agents},
        valuation=model.valuation,
        locals={a: model.locals[a] for a in agents},
        meta=dict(model.meta),
    )
    seeds = frozenset().union(*(interim.locals[a] for a in agents)) if agents else frozenset()
    pruned = prune_unreachable(interim, seeds)
    return _finish(model, pruned, model.states - pruned.states)


def update_online(model: KripkeModel, j: Agent,
                  new_locals: Iterable[StateId]) -> UpdateResult:
    """Announce truthfully that agent j has come online with the given local
    states.  j gets the universal (hence equivalence) relation over all
    states; nothing else changes and no state is removed."""
    if j in model.agents:
        raise ModelError(f"agent already present: {j}")
    new_locals = frozenset(new_locals)
    if not new_locals:
        raise ModelError(f"new agent {j} needs a non-empty set of local states")
    for s in new_locals:
        model.require_state(s)
    relations = dict(model.relations)
    relations[j] = frozenset((s, t) for s in model.states for t in model.states)
    locals_ = dict(model.locals)
    locals_[j] = new_locals
    after = KripkeModel(
        states=model.states,
        agents=model.agents | {j},
        props=model.props,
        relations=relations,
        valuation=model.valuation,
        locals=locals_,
        meta=dict(model.meta),
    )
    return _finish(model, after, ())


def _prune_from_all_locals(before: KripkeModel, merged: KripkeModel) -> UpdateResult:
    seeds = frozenset().union(*merged.locals.values())
    pruned = prune_unreachable(merged, seeds)
    return _finish(before, pruned, merged.states - pruned.states)


def lie_offline(model: KripkeModel, i: Agent, j: Agent) -> UpdateResult:
    """Agent i falsely announces that agent j has gone offline.

    Everyone except i and j is shifted into a replica where j has no edges;
    i and j stay in the act replica, from which the misinformed agents'
    edges lead one way into the shifted region.
    """
    model.require_agent(i)
    model.require_agent(j)
    if i == j:
        raise ModelError("liar and target must differ")
    for k in (i, j):
        if not holds_for_agent(model, k, CertainAgent(k, j)):
            warnings.warn(
                f"lie_offline: C[{k},{j}] does not hold before the lie; "
                "the informed agents' certainty of the target is not preserved",
                stacklevel=2)

    act = replicate_with_lineage(model, "act")
    shift = replicate_with_lineage(model, "shift")
    misinformed = model.agents - {i, j}

    relations = {}
    for k in model.agents:
        act_part = frozenset() if k in misinformed else act.relations[k]
        shift_part = frozenset() if k == j else shift.relations[k]
        cross = frozenset()
        if k in misinformed:
            cross = frozenset((s.tagged("act"), t.tagged("shift"))
                              for (s, t) in model.relations[k])
        relations[k] = act_part | shift_part | cross

    locals_ = {}
    for k in model.agents:
        tag = "shift" if k in misinformed else "act"
        locals_[k] = frozenset(s.tagged(tag) for s in model.locals[k])

    merged = KripkeModel(
        states=act.states | shift.states,
        agents=model.agents,
        props=model.props,
        relations=relations,
        valuation={p: act.valuation[p] | shift.valuation[p] for p in model.props},
        locals=locals_,
        meta=dict(model.meta),
    )
    return _prune_from_all_locals(model, merged)


def lie_online(model: KripkeModel, i: Agent, j: Agent,
               new_locals: Iterable[StateId]) -> UpdateResult:
    """Agent i falsely announces that a (fictional) agent j has come online.

    Everyone except i is shifted into a replica where j exists with the
    universal relation; i stays in the act replica, which j never touches.
    `new_locals` name states of the input model and are mapped into the
    shifted replica.
    """
    model.require_agent(i)
    if j in model.agents:
        raise ModelError(f"agent already present: {j}")
    new_locals = frozenset(new_locals)
    if not new_locals:
        raise ModelError(f"new agent {j} needs a non-empty set of local states")
    for s in new_locals:
        model.require_state(s)

    act = replicate_with_lineage(model, "act")
    shift = replicate_with_lineage(model, "shift")
    misinformed = model.agents - {i}

    relations = {}
    for k in model.agents:
        act_part = act.relations[k] if k == i else frozenset()
        cross = frozenset()
        if k in misinformed:
            cross = frozenset((s.tagged("act"), t.tagged("shift"))
                              for (s, t) in model.relations[k])
        relations[k] = act_part | shift.relations[k] | cross
    relations[j] = frozenset((s, t) for s in shift.states for t in shift.states)

    locals_ = {}
    for k in model.agents:
        tag = "act" if k == i else "shift"
        locals_[k] = frozenset(s.tagged(tag) for s in model.locals[k])
    locals_[j] = frozenset(s.tagged("shift") for s in new_locals)

    merged = KripkeModel(
        states=act.states | shift.states,
        agents=model.agents | {j},
        props=model.props,
        relations=relations,
        valuation={p: act.valuation[p] | shift.valuation[p] for p in model.props},
        locals=locals_,
        meta=dict(model.meta),
    )
    return _prune_from_all_locals(model, merged)
