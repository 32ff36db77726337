"""
Sparsity measures that parameterize the dominating-set algorithm.

Provides degeneracy, the exact maximum subgraph density (nabla_0), a
brute-force nabla_1 oracle over 1-shallow minors and the minimal t
for which the graph has no K_{t,t} subgraph.
"""
from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

import networkx as nx
from django.conf import settings

from .graph import Density, Graph

logger = logging.getLogger(__name__)


class GuardExceeded(RuntimeError):
    """Raised when an exponential oracle is asked to run on a graph above its guard."""


def _guard(name: str, explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    return getattr(settings, name)


# =============================================================================
# Degeneracy
# =============================================================================

def degeneracy(G: Graph) -> int:
    """
    Degeneracy of G: the largest minimum degree over all subgraphs.

    Computed from networkx core numbers (repeated minimum-degree removal).
    The empty graph has degeneracy 0.
    """
    if G.order == 0:
        return 0
    return max(nx.core_number(G.nx).values())


# =============================================================================
# Maximum subgraph density (nabla_0)
# =============================================================================

def _denser_subgraph(G: Graph, current: Density) -> frozenset[int]:
    """
    Return a vertex set maximizing q|E(S)| - p|V(S)| for current = p/q.

    Goldberg's construction with integer capacities scaled by q: a set with
    density above p/q exists iff the minimum s-t cut is below q*m*n.
    """
    p, q = current.edges, current.vertices
    m = G.size

    flow = nx.DiGraph()
    for v in G.vertices:
        flow.add_edge('source', v, capacity=m * q)
        flow.add_edge(v, 'sink', capacity=m * q + 2 * p - G.degree(v) * q)
    for u, v in G.edges:
        flow.add_edge(u, v, capacity=q)
        flow.add_edge(v, u, capacity=q)

    _, (reachable, _) = nx.minimum_cut(flow, 'source', 'sink', capacity='capacity')
    return frozenset(reachable - {'source'})


def densest_subgraph(G: Graph) -> tuple[frozenset[int], Density]:
    """
    Exact maximum-density subgraph.

    Starts from the whole graph and repeatedly replaces the current set by
    a strictly denser one found with a minimum cut, until none exists.

    Returns:
        Tuple of (vertex set, Density of the induced subgraph)
    """
    if G.order == 0:
        return frozenset(), Density(0, 1)

    best_set = frozenset(G.vertices)
    best = G.density()
    if best.edges == 0:
        return best_set, best

    iterations = 0
    while True:
        iterations += 1
        candidate = _denser_subgraph(G, best)
        if not candidate:
            break
        found = G.induced_subgraph(candidate).density()
        if found <= best:
            break
        best_set, best = candidate, found

    logger.debug(f"Densest subgraph {best} found after {iterations} cut(s)")
    return best_set, best


def nabla0_exact(G: Graph) -> Density:
    """Maximum of |E(H)|/|V(H)| over all subgraphs H of G, exact."""
    return densest_subgraph(G)[1]


def nabla0_bruteforce(G: Graph, guard: Optional[int] = None) -> Density:
    """
    Maximum subgraph density by enumerating every vertex subset.

    Cross-check for nabla0_exact on graphs up to the exhaustive guard.
    """
    limit = _guard('DOMSET_EXHAUSTIVE_GUARD', guard)
    if G.order > limit:
        raise GuardExceeded(f"nabla0_bruteforce is limited to {limit} vertices, graph has {G.order}")

    index = {v: i for i, v in enumerate(G.vertices)}
    masks = [0] * G.order
    for u, v in G.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]

    best = Density(0, 1)
    for subset in range(1, 1 << G.order):
        members = [i for i in range(G.order) if subset >> i & 1]
        twice_edges = sum(bin(masks[i] & subset).count('1') for i in members)
        candidate = Density(twice_edges // 2, len(members))
        if candidate > best:
            best = candidate
    return best


# =============================================================================
# 1-shallow minors (nabla_1)
# =============================================================================

def _star_blocks(G: Graph, u: int, available: frozenset[int]) -> list[frozenset[int]]:
    """
    Every radius-1 branch set that contains u and uses only available vertices.

    A radius-1 connected set has a center c with the whole set inside N[c].
    """
    blocks: set[frozenset[int]] = set()
    for center in sorted(G.closed_neighbors(u) & available):
        others = sorted((G.closed_neighbors(center) & available) - {center, u})
        for size in range(len(others) + 1):
            for extra in combinations(others, size):
                blocks.add(frozenset((u, center, *extra)))
    return sorted(blocks, key=lambda block: (len(block), sorted(block)))


def _star_partitions(G: Graph, available: frozenset[int]) -> Iterator[list[frozenset[int]]]:
    """Partitions of the available vertices into radius-1 branch sets."""
    if not available:
        yield []
        return
    u = min(available)
    for block in _star_blocks(G, u, available):
        for rest in _star_partitions(G, available - block):
            yield [block, *rest]


def contract(G: Graph, blocks: list[frozenset[int]]) -> Graph:
    """
    Contract each block to one vertex; vertex i of the result is blocks[i].

    Two blocks are adjacent when some edge of G joins them.
    """
    owner = {v: i for i, block in enumerate(blocks) for v in block}
    edges = {
        (min(owner[u], owner[v]), max(owner[u], owner[v]))
        for u, v in G.edges
        if owner[u] != owner[v]
    }
    return Graph.from_edges(edges, range(len(blocks)))


def nabla1_bruteforce(G: Graph, guard: Optional[int] = None) -> Density:
    """
    Maximum edge density over all 1-shallow minors of G.

    Enumerates partitions of V(G) into radius-1 branch sets (single
    vertices included), contracts each and takes the densest subgraph of
    the contraction, which covers minors that drop branch sets.

    Raises:
        GuardExceeded: G has more vertices than the guard; callers must use
            the nabla_1 bound supplied with the input instead.
    """
    limit = _guard('DOMSET_NABLA1_GUARD', guard)
    if G.order > limit:
        raise GuardExceeded(
            f"nabla1_bruteforce is limited to {limit} vertices, graph has {G.order}; "
            f"supply nabla1 with the input instead"
        )

    best = nabla0_exact(G)
    seen: set[tuple[tuple[int, int], ...]] = set()
    partitions = 0
    for blocks in _star_partitions(G, frozenset(G.vertices)):
        partitions += 1
        minor = contract(G, blocks)
        if minor.edges in seen:
            continue
        seen.add(minor.edges)
        # every subgraph of the minor has at most max_degree/2 edges per vertex
        if Fraction(minor.max_degree, 2) <= best.value:
            continue
        candidate = nabla0_exact(minor)
        if candidate > best:
            best = candidate

    logger.debug(f"nabla1_bruteforce checked {partitions} branch-set partitions, best {best}")
    return best


# =============================================================================
# Bicliques
# =============================================================================

def find_biclique(G: Graph, t: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """
    Find a K_{t,t} subgraph by backtracking.

    Side A is grown in increasing vertex order; the common neighborhood of
    A must keep at least t vertices, and each next vertex of A must be
    adjacent to at least t of them.

    Returns:
        (A, B) with |A| = |B| = t and every a-b pair adjacent, or None
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")

    def extend(side: tuple[int, ...], common: frozenset[int]):
        if len(side) == t:
            return side, tuple(sorted(common)[:t])
        hits = Counter(x for c in common for x in G.neighbors(c) if x > side[-1])
        for x in sorted(x for x, count in hits.items() if count >= t):
            found = extend((*side, x), common & G.neighbors(x))
            if found:
                return found
        return None

    for v in G.vertices:
        if G.degree(v) >= t:
            found = extend((v,), G.neighbors(v))
            if found:
                return found
    return None


def min_t_no_biclique(G: Graph, verify: bool = True) -> int:
    """
    Smallest t >= 1 such that G has no K_{t,t} subgraph.

    With verify, asserts t <= floor(2 * nabla0_exact(G)) + 1, which holds
    because K_{t,t} has density t/2.
    """
    t = 1
    while find_biclique(G, t) is not None:
        t += 1

    if verify:
        bound = (2 * nabla0_exact(G).value).__floor__() + 1
        assert t <= bound, f"min_t_no_biclique={t} exceeds 2*nabla0+1={bound}"
    return t
