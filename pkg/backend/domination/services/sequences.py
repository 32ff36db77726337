"""
k-dominating-sequences.

B-sets are canonical: B_1 = N(v_1) and B_i = N(v_i) ∩ B_{i-1}. These are the
largest admissible choices, so a vertex sequence extends under some choice
of B-sets exactly when it extends under the canonical one.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from graphs.services import Graph

from .covers import DominatorIndex
from .params import Params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DomSequence:
    sequence: tuple[int, ...]
    b_sets: tuple[frozenset[int], ...]
    maximal: bool = True

    @property
    def base_vertex(self) -> int:
        return self.sequence[0]

    @property
    def last(self) -> int:
        return self.sequence[-1]

    def __len__(self):
        return len(self.sequence)


def enumerate_max_sequences(
    G: Graph,
    v: int,
    params: Params,
    dominators: Optional[Callable[[int], frozenset[int]]] = None,
) -> list[DomSequence]:
    """
    All maximal k-dominating-sequences starting at v.

    Successors of v_i are the vertices of P(v_i) not yet used whose
    neighborhood keeps |B_{i+1}| at or above the position threshold.

    Args:
        G: The (live) graph
        v: Start vertex
        params: Constants
        dominators: P lookup; defaults to a fresh DominatorIndex on G

    Returns:
        Maximal sequences in DFS order (ascending vertex IDs)
    """
    start = params.threshold(1)
    if start is None or len(G.neighbors(v)) < start:
        return []
    if dominators is None:
        dominators = DominatorIndex(G, params).dominators

    found: list[DomSequence] = []

    def extend(sequence: tuple[int, ...], b_sets: tuple[frozenset[int], ...]):
        needed = params.threshold(len(sequence) + 1)
        extended = False
        if needed is not None:
            for u in sorted(dominators(sequence[-1])):
                # a local view may know P(u) for vertices it cannot see
                if u in sequence or u not in G:
                    continue
                b_next = G.neighbors(u) & b_sets[-1]
                if len(b_next) >= needed:
                    extended = True
                    extend((*sequence, u), (*b_sets, b_next))
        if not extended:
            found.append(DomSequence(sequence, b_sets, maximal=True))

    extend((v,), (G.neighbors(v),))
    logger.debug(f"v={v}: maximal sequences {[s.sequence for s in found]}")
    return found


def plain_sequences(G: Graph, v: int, params: Params) -> list[tuple[int, ...]]:
    """
    Maximal sequences of the unrestricted procedure.

    v_1 = v with B_1 = N(v), needing |N(v)| >= k^(t-1)(2t-1); each next
    vertex is any unused u with |N[u] ∩ B_i| >= k^(t-i-1)(2t-i), and
    B_{i+1} = N(u) ∩ B_i. Exponential; meant for small instances.
    """
    if len(G.neighbors(v)) < params.plain_start_threshold:
        return []

    found: list[tuple[int, ...]] = []

    def extend(sequence: tuple[int, ...], b_current: frozenset[int]):
        needed = params.plain_threshold(len(sequence))
        candidates = sorted(
            u for u in G.closed_neighborhood_of(b_current)
            if u not in sequence and len(G.closed_neighbors(u) & b_current) >= needed
        )
        for u in candidates:
            extend((*sequence, u), G.neighbors(u) & b_current)
        if not candidates:
            found.append(sequence)

    extend((v,), G.neighbors(v))
    return found
