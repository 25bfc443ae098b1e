"""Model checking: pointed satisfaction, agent-relative satisfaction, and
the presence atom underlying the agency modalities.

`CertainAgent(i, j)` is a box over the presence atom "t has at least one
j-edge": it holds vacuously when i has no successors.  `PossibleAgent(i, j)`
is its diamond dual and is false with no successors.  The right index j of
either modality may name an agent not in the model: such an agent is simply
absent everywhere, so formulas about departed agents remain evaluable.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .formulas import (And, Believes, CertainAgent, Formula, Implies, Not, Or,
                       PossibleAgent, Prop)
from .model import Agent, KripkeModel, ModelError, StateId


def presence_at(model: KripkeModel, j: Agent, state: StateId) -> bool:
    """True iff `state` has at least one j-edge; false for absent agents."""
    model.require_state(state)
    if j not in model.agents:
        return False
    return any(s == state for (s, _t) in model.relations[j])


def _check_symbols(model: KripkeModel, f: Formula) -> None:
    # The right index of C/P is deliberately exempt: see module docstring.
    if isinstance(f, Prop):
        if f.name not in model.props:
            raise ModelError(f"unknown proposition: {f.name}")
    elif isinstance(f, Not):
        _check_symbols(model, f.sub)
    elif isinstance(f, (And, Or, Implies)):
        _check_symbols(model, f.left)
        _check_symbols(model, f.right)
    elif isinstance(f, Believes):
        model.require_agent(f.agent)
        _check_symbols(model, f.sub)
    elif isinstance(f, (CertainAgent, PossibleAgent)):
        model.require_agent(f.agent)
    else:
        raise TypeError(f"not a formula: {f!r}")


class EvalContext:
    """One evaluation pass over a fixed model, memoized on (state, subformula).

    Nested-belief formulas revisit the same (state, subformula) pairs
    exponentially often without the cache.
    """

    def __init__(self, model: KripkeModel):
        self.model = model
        self.memo: Dict[Tuple[StateId, Formula], bool] = {}
        self._succ: Dict[Agent, Dict[StateId, frozenset]] = {}

    def successors(self, agent: Agent, state: StateId) -> frozenset:
        table = self._succ.get(agent)
        if table is None:
            table = {}
            for (s, t) in self.model.relations[agent]:
                table.setdefault(s, set()).add(t)
            table = {s: frozenset(ts) for s, ts in table.items()}
            self._succ[agent] = table
        return table.get(state, frozenset())

    def at(self, state: StateId, f: Formula) -> bool:
        key = (state, f)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        value = self._eval(state, f)
        self.memo[key] = value
        return value

    def _eval(self, state: StateId, f: Formula) -> bool:
        if isinstance(f, Prop):
            return state in self.model.valuation[f.name]
        if isinstance(f, Not):
            return not self.at(state, f.sub)
        if isinstance(f, And):
            return self.at(state, f.left) and self.at(state, f.right)
        if isinstance(f, Or):
            return self.at(state, f.left) or self.at(state, f.right)
        if isinstance(f, Implies):
            return (not self.at(state, f.left)) or self.at(state, f.right)
        if isinstance(f, Believes):
            return all(self.at(t, f.sub) for t in self.successors(f.agent, state))
        if isinstance(f, CertainAgent):
            return all(presence_at(self.model, f.about, t)
                       for t in self.successors(f.agent, state))
        if isinstance(f, PossibleAgent):
            return any(presence_at(self.model, f.about, t)
                       for t in self.successors(f.agent, state))
        raise TypeError(f"not a formula: {f!r}")


def holds_at(model: KripkeModel, state: StateId, f: Formula) -> bool:
    """Truth of `f` at the pointed model (model, state)."""
    model.require_state(state)
    _check_symbols(model, f)
    return EvalContext(model).at(state, f)


def holds_for_agent(model: KripkeModel, agent: Agent, f: Formula) -> bool:
    """Truth of `f` at every local state of `agent` (the agent-relative reading)."""
    model.require_agent(agent)
    _check_symbols(model, f)
    ctx = EvalContext(model)
    return all(ctx.at(s, f) for s in model.locals[agent])


def holds_globally(model: KripkeModel, f: Formula) -> bool:
    """Truth of `f` at every state of the model."""
    _check_symbols(model, f)
    ctx = EvalContext(model)
    return all(ctx.at(s, f) for s in model.states)
