"""
Ground truth for dominating sets.

Exact and greedy minimum dominating sets, the domination check and the
set D' = D ∪ D̂ used to evaluate the proven bounds. None of this is part of
the distributed algorithm.
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations
from typing import Iterable, Optional

import networkx as nx
from django.conf import settings

from graphs.services import Graph, GraphDomainError, GuardExceeded

from .covers import cover_with_budget

logger = logging.getLogger(__name__)


class OracleMethod(StrEnum):
    EXACT = 'exact'
    GREEDY = 'greedy'
    EXHAUSTIVE = 'exhaustive'


@dataclass(frozen=True)
class DomSetCertificate:
    vertices: frozenset[int]
    optimal: bool
    method: OracleMethod

    @property
    def size(self) -> int:
        return len(self.vertices)


def verify_dominating(G: Graph, D: Iterable[int]) -> bool:
    """
    True iff N[D] = V(G).

    Raises:
        GraphDomainError: D contains vertices outside G
    """
    D = frozenset(D)
    unknown = [v for v in D if v not in G]
    if unknown:
        raise GraphDomainError(f"Dominating set mentions unknown vertices {sorted(unknown)}")
    return len(G.closed_neighborhood_of(D)) == G.order


def greedy_domset(G: Graph) -> DomSetCertificate:
    """
    Repeatedly take the vertex dominating the most new vertices (ties: lowest ID).

    Gains only shrink, so stale heap entries are re-scored lazily.
    """
    undominated = set(G.vertices)
    heap = [(-(G.degree(v) + 1), v) for v in G.vertices]
    heapq.heapify(heap)
    chosen: list[int] = []
    while undominated:
        stored, v = heapq.heappop(heap)
        gain = len(G.closed_neighbors(v) & undominated)
        if gain == 0:
            continue
        if gain < -stored:
            heapq.heappush(heap, (-gain, v))
            continue
        chosen.append(v)
        undominated -= G.closed_neighbors(v)
    return DomSetCertificate(frozenset(chosen), optimal=False, method=OracleMethod.GREEDY)


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _exact_component(G: Graph, component: list[int]) -> list[int]:
    """Branch and bound over one connected component using bitmasks."""
    index = {v: i for i, v in enumerate(component)}
    masks = [0] * len(component)
    for v in component:
        mask = 1 << index[v]
        for u in G.neighbors(v):
            mask |= 1 << index[u]
        masks[index[v]] = mask

    sub = G.induced_subgraph(component)
    best = [index[v] for v in greedy_domset(sub).vertices]

    def lower_bound(undominated: int) -> int:
        # vertices with disjoint closed neighborhoods need distinct dominators
        packed, blocked = 0, 0
        for u in _bits(undominated):
            if not masks[u] & blocked:
                packed += 1
                blocked |= masks[u]
        best_gain = max(_popcount(m & undominated) for m in masks)
        by_gain = -(-_popcount(undominated) // best_gain)
        return max(packed, by_gain)

    def search(undominated: int, chosen: list[int]):
        nonlocal best
        if not undominated:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + lower_bound(undominated) >= len(best):
            return
        # branch on the undominated vertex with the fewest dominators
        u = min(_bits(undominated), key=lambda x: (_popcount(masks[x]), x))
        options = sorted(_bits(masks[u]), key=lambda z: (-_popcount(masks[z] & undominated), z))
        for z in options:
            chosen.append(z)
            search(undominated & ~masks[z], chosen)
            chosen.pop()

    search((1 << len(component)) - 1, [])
    return [component[i] for i in best]


def exact_min_domset(G: Graph, guard: Optional[int] = None) -> DomSetCertificate:
    """
    Minimum dominating set by branch and bound, per connected component.

    The bound combines a disjoint-neighborhood packing with
    ceil(undominated / best single gain); the incumbent starts from greedy.

    Raises:
        GuardExceeded: G has more vertices than the guard; use greedy_domset
    """
    limit = settings.DOMSET_EXACT_GUARD if guard is None else guard
    if G.order > limit:
        raise GuardExceeded(
            f"exact_min_domset is limited to {limit} vertices, graph has {G.order}; use greedy_domset"
        )
    result: list[int] = []
    for component in nx.connected_components(G.nx):
        result.extend(_exact_component(G, sorted(component)))
    logger.debug(f"exact_min_domset: gamma={len(result)} on {G.order} vertices")
    return DomSetCertificate(frozenset(result), optimal=True, method=OracleMethod.EXACT)


def exhaustive_min_domset(G: Graph, guard: Optional[int] = None) -> DomSetCertificate:
    """Smallest dominating set by trying every subset in size order."""
    limit = settings.DOMSET_EXHAUSTIVE_GUARD if guard is None else guard
    if G.order > limit:
        raise GuardExceeded(f"exhaustive_min_domset is limited to {limit} vertices, graph has {G.order}")
    for size in range(G.order + 1):
        for candidate in combinations(G.vertices, size):
            if len(G.closed_neighborhood_of(candidate)) == G.order:
                return DomSetCertificate(frozenset(candidate), optimal=True, method=OracleMethod.EXHAUSTIVE)
    raise AssertionError("V(G) always dominates G")


def compute_Dhat(G: Graph, D: Iterable[int], k: int) -> frozenset[int]:
    """Vertices v whose N(v) cannot be covered by k vertices of D other than v."""
    D = frozenset(D)
    return frozenset(
        v for v in G.vertices
        if cover_with_budget(G, G.neighbors(v), v, k, candidate_pool=D - {v}) is None
    )


def compute_Dprime(G: Graph, D: Iterable[int], k: int) -> frozenset[int]:
    """D ∪ D̂ for a dominating set D."""
    D = frozenset(D)
    return D | compute_Dhat(G, D, k)
