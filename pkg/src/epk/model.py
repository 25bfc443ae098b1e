"""Kripke models with per-agent local states, plus the graph utilities
(successor lookup, reachability closure, pruning, tagged replication) that
the update operators are built from.

Models are immutable values: every operation returns a new model and never
mutates its input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Mapping, Tuple

Agent = str
Prop = str

LINEAGE_TAGS = ("act", "shift")


class ModelError(ValueError):
    """Raised when a model invariant is violated or an unknown entity is named."""


@dataclass(frozen=True, order=True)
class StateId:
    """A state name plus the sequence of replica tags that produced it.

    Original states have an empty lineage; each untruthful update appends
    one tag ("act" or "shift").
    """

    base: str
    lineage: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.base or "@" in self.base:
            raise ModelError(f"bad state base name: {self.base!r}")
        for tag in self.lineage:
            if tag not in LINEAGE_TAGS:
                raise ModelError(f"bad lineage tag: {tag!r}")

    def tagged(self, tag: str) -> "StateId":
        return StateId(self.base, self.lineage + (tag,))

    @property
    def name(self) -> str:
        return "@".join((self.base,) + self.lineage)

    @classmethod
    def parse(cls, name: str) -> "StateId":
        parts = name.split("@")
        return cls(parts[0], tuple(parts[1:]))

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"StateId({self.name!r})"


Edge = Tuple[StateId, StateId]


def _check_token(name: str, what: str) -> str:
    if not name or not all(c.isalnum() or c == "_" for c in name):
        raise ModelError(f"bad {what} name: {name!r}")
    return name


@dataclass(frozen=True)
class KripkeModel:
    """An immutable Kripke model: states, agents, propositions, per-agent
    accessibility relations, a valuation, and per-agent local states."""

    states: FrozenSet[StateId]
    agents: FrozenSet[Agent]
    props: FrozenSet[Prop]
    relations: Mapping[Agent, FrozenSet[Edge]]
    valuation: Mapping[Prop, FrozenSet[StateId]]
    locals: Mapping[Agent, FrozenSet[StateId]]
    meta: Mapping[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for a in self.agents:
            _check_token(a, "agent")
        for p in self.props:
            _check_token(p, "proposition")
        if set(self.relations) != set(self.agents):
            raise ModelError("relations must have exactly one entry per agent")
        if set(self.locals) != set(self.agents):
            raise ModelError("locals must have exactly one entry per agent")
        if set(self.valuation) != set(self.props):
            raise ModelError("valuation must have exactly one entry per proposition")
        for a, edges in self.relations.items():
            for (s, t) in edges:
                if s not in self.states or t not in self.states:
                    raise ModelError(f"relation for {a} uses undeclared state {s if s not in self.states else t}")
        for p, sts in self.valuation.items():
            for s in sts:
                if s not in self.states:
                    raise ModelError(f"valuation of {p} names undeclared state {s}")
        for a, sts in self.locals.items():
            if not sts:
                raise ModelError(f"local states of agent {a} must be non-empty")
            for s in sts:
                if s not in self.states:
                    raise ModelError(f"local state {s} of agent {a} is undeclared")

    @classmethod
    def build(cls, states, agents, props, relations, valuation, locals, meta=None):
        """Normalize plain iterables / string state names into a validated model."""
        def st(x):
            return x if isinstance(x, StateId) else StateId.parse(str(x))

        return cls(
            states=frozenset(st(s) for s in states),
            agents=frozenset(agents),
            props=frozenset(props),
            relations={a: frozenset((st(s), st(t)) for (s, t) in edges)
                       for a, edges in dict(relations).items()},
            valuation={p: frozenset(st(s) for s in sts)
                       for p, sts in dict(valuation).items()},
            locals={a: frozenset(st(s) for s in sts)
                    for a, sts in dict(locals).items()},
            meta=dict(meta or {}),
        )

    def require_agent(self, agent: Agent) -> None:
        if agent not in self.agents:
            raise ModelError(f"unknown agent: {agent}")

    def require_state(self, state: StateId) -> None:
        if state not in self.states:
            raise ModelError(f"unknown state: {state}")


def successors(model: KripkeModel, agent: Agent, state: StateId) -> FrozenSet[StateId]:
    """All states reachable from `state` by one edge of `agent`."""
    model.require_agent(agent)
    model.require_state(state)
    return frozenset(t for (s, t) in model.relations[agent] if s == state)


def subjective_relation(model: KripkeModel, agent: Agent) -> FrozenSet[Edge]:
    """The agent's relation with its domain restricted to the agent's local states."""
    model.require_agent(agent)
    loc = model.locals[agent]
    return frozenset((s, t) for (s, t) in model.relations[agent] if s in loc)


def reachable_from(model: KripkeModel, seeds: Iterable[StateId],
                   agents: Iterable[Agent]) -> FrozenSet[StateId]:
    """Smallest superset of `seeds` closed under the given agents' edges."""
    seeds = frozenset(seeds)
    agents = frozenset(agents)
    for s in seeds:
        model.require_state(s)
    for a in agents:
        model.require_agent(a)
    succ = {}
    for a in agents:
        for (s, t) in model.relations[a]:
            succ.setdefault(s, set()).add(t)
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        s = queue.popleft()
        for t in succ.get(s, ()):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return frozenset(seen)


def prune_unreachable(model: KripkeModel, seeds: Iterable[StateId]) -> KripkeModel:
    """Drop every state not reachable from `seeds` via any agent's edges.

    Fails if pruning would empty some agent's local-state set: that signals
    a mis-specified update, not a repairable condition.
    """
    kept = reachable_from(model, seeds, model.agents)
    for a in sorted(model.agents):
        if not (model.locals[a] & kept):
            raise ModelError(f"pruning would empty the local states of agent {a}")
    return KripkeModel(
        states=kept,
        agents=model.agents,
        props=model.props,
        relations={a: frozenset((s, t) for (s, t) in edges if s in kept and t in kept)
                   for a, edges in model.relations.items()},
        valuation={p: sts & kept for p, sts in model.valuation.items()},
        locals={a: sts & kept for a, sts in model.locals.items()},
        meta=dict(model.meta),
    )


def replicate_with_lineage(model: KripkeModel, tag: str) -> KripkeModel:
    """Isomorphic copy with `tag` appended to every state's lineage."""
    if tag not in LINEAGE_TAGS:
        raise ModelError(f"bad lineage tag: {tag!r}")

    def rn(s: StateId) -> StateId:
        return s.tagged(tag)

    return KripkeModel(
        states=frozenset(rn(s) for s in model.states),
        agents=model.agents,
        props=model.props,
        relations={a: frozenset((rn(s), rn(t)) for (s, t) in edges)
                   for a, edges in model.relations.items()},
        valuation={p: frozenset(rn(s) for s in sts)
                   for p, sts in model.valuation.items()},
        locals={a: frozenset(rn(s) for s in sts)
                for a, sts in model.locals.items()},
        meta=dict(model.meta),
    )
