"""
The dominating-set algorithm as a LOCAL protocol.

Round schedule (10 rounds, independent of the graph size):

    1-2   flood stars; after round 2 every node sees its 2-ball and
          decides D1 membership
    3     D1 nodes announce themselves and leave; neighbors become
          dominated and drop them from their live star
    4-5   flood live stars over the graph without D1
    5     every live node computes P(v) from its live 2-ball
    6-7   flood P-sets; every live node then computes its maximal
          sequences and nominates their last vertices
    8-9   flood nominations; a nominated node joins D2
    10    D2 nodes announce; neighbors become dominated and every node
          still undominated joins D3
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, replace
from typing import Optional

from graphs.services import Graph
from localsim.services import Inbox, Message, NodeFlag, NodeState, Protocol, Trace, merge_stars, run

from .covers import cover_with_budget, dominators_P
from .params import Params
from .sequences import enumerate_max_sequences

logger = logging.getLogger(__name__)

ROUNDS = 10


def _phase_of(round_number: int) -> int:
    if round_number <= 3:
        return 1
    if round_number <= 9:
        return 2
    return 3


class DominatingSetProtocol(Protocol):
    round_budget = ROUNDS

    def __init__(self, params: Params):
        self.params = params

    def start(self, vertex: int, neighbors: frozenset[int]) -> tuple[NodeState, Optional[Message]]:
        stars = {vertex: neighbors}
        return NodeState(id=vertex, stars=stars), {'stars': stars}

    def handle(self, state: NodeState, inbox: Inbox, round_number: int) -> tuple[NodeState, Optional[Message]]:
        state = replace(state, phase=_phase_of(round_number))
        handler = getattr(self, f'_round_{round_number}')
        if state.has(NodeFlag.REMOVED):
            return state, None
        return handler(state, inbox)

    # ------------------------------------------------------------------
    # Phase 1

    def _round_1(self, state, inbox):
        state = merge_stars(state, ((s, m['stars']) for s, m in inbox))
        return state, {'stars': dict(state.stars)}

    def _round_2(self, state, inbox):
        state = merge_stars(state, ((s, m['stars']) for s, m in inbox))
        local = state.known_subgraph
        if cover_with_budget(local, local.neighbors(state.id), state.id, self.params.k) is None:
            state = state.with_flags(NodeFlag.IN_D1, NodeFlag.DOMINATED)
            return state, {'in_D1': True}
        return state, None

    def _round_3(self, state, inbox):
        removed = frozenset(s for s, m in inbox if m.get('in_D1'))
        if state.has(NodeFlag.IN_D1):
            return state.with_flags(NodeFlag.REMOVED), None
        if removed:
            state = state.with_flags(NodeFlag.DOMINATED)
        live = {state.id: state.stars[state.id] - removed}
        return replace(state, stars=live), {'stars': dict(live)}

    # ------------------------------------------------------------------
    # Phase 2

    def _round_4(self, state, inbox):
        state = merge_stars(state, ((s, m['stars']) for s, m in inbox))
        return state, {'stars': dict(state.stars)}

    def _round_5(self, state, inbox):
        state = merge_stars(state, ((s, m['stars']) for s, m in inbox))
        local = state.known_subgraph
        dominators = {state.id: dominators_P(local, state.id, self.params)}
        state = replace(state, data={**state.data, 'P': dominators})
        return state, {'P': dominators}

    def _round_6(self, state, inbox):
        known = dict(state.data['P'])
        for _, message in inbox:
            known.update(message['P'])
        state = replace(state, data={**state.data, 'P': known})
        return state, {'P': known}

    def _round_7(self, state, inbox):
        known = dict(state.data['P'])
        for _, message in inbox:
            known.update(message['P'])
        local = state.known_subgraph
        sequences = enumerate_max_sequences(
            local, state.id, self.params, dominators=lambda u: known.get(u, frozenset()),
        )
        nominated = frozenset(s.last for s in sequences)
        state = replace(state, data={**state.data, 'P': known, 'nominated': nominated})
        return state, {'nominated': nominated}

    def _round_8(self, state, inbox):
        nominated = state.data['nominated'].union(*(m['nominated'] for _, m in inbox))
        state = replace(state, data={**state.data, 'nominated': nominated})
        return state, {'nominated': nominated}

    def _round_9(self, state, inbox):
        nominated = state.data['nominated'].union(*(m['nominated'] for _, m in inbox))
        state = replace(state, data={**state.data, 'nominated': nominated})
        if state.id in nominated:
            return state.with_flags(NodeFlag.IN_D2, NodeFlag.DOMINATED), {'in_D2': True}
        return state, None

    # ------------------------------------------------------------------
    # Phase 3

    def _round_10(self, state, inbox):
        if any(m.get('in_D2') for _, m in inbox):
            state = state.with_flags(NodeFlag.DOMINATED)
        if not state.has(NodeFlag.DOMINATED):
            state = state.with_flags(NodeFlag.IN_D3, NodeFlag.DOMINATED)
        return state, None


@dataclass(frozen=True)
class DistributedRun:
    D1: frozenset[int]
    D2: frozenset[int]
    D3: frozenset[int]
    rounds: int
    trace: Trace
    elapsed: float

    @property
    def sets(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return self.D1, self.D2, self.D3


def run_distributed(G: Graph, params: Params, workers: Optional[int] = None) -> DistributedRun:
    """Execute the protocol on the round engine and read the sets off the flags."""
    started = time.perf_counter()
    trace = run(G, DominatingSetProtocol(params), max_rounds=ROUNDS, workers=workers)

    def flagged(flag: NodeFlag) -> frozenset[int]:
        return frozenset(v for v, s in trace.final_states.items() if s.has(flag))

    result = DistributedRun(
        D1=flagged(NodeFlag.IN_D1),
        D2=flagged(NodeFlag.IN_D2),
        D3=flagged(NodeFlag.IN_D3),
        rounds=trace.rounds_executed,
        trace=trace,
        elapsed=time.perf_counter() - started,
    )
    logger.debug(
        f"distributed run: {result.rounds} rounds, {trace.total_messages} messages, "
        f"sizes {tuple(map(len, result.sets))}"
    )
    return result
