"""
Covers, alpha-strong vertices and pseudo-covers.

A cover of W is a set Z with W ⊆ N[Z]. A pseudo-cover of W is a sequence
(z_1..z_m), m <= k, where every z_i is alpha-strong for the residual
W_{i-1} = W minus N[z_1..z_{i-1}], covers at least ell of it, and the final
residual has at most q elements.
"""
from __future__ import annotations

import logging
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from graphs.services import Graph

from .params import Params

logger = logging.getLogger(__name__)


class CoverDomainError(ValueError):
    """Raised for empty targets and violated cover preconditions."""


# =============================================================================
# Budgeted covers
# =============================================================================

def _greedy_cover(W: frozenset[int], coverage: dict[int, frozenset[int]], budget: int) -> Optional[tuple[int, ...]]:
    uncovered = W
    chosen: list[int] = []
    while uncovered and len(chosen) < budget:
        z = min(coverage, key=lambda c: (-len(coverage[c] & uncovered), c))
        if not coverage[z] & uncovered:
            return None
        chosen.append(z)
        uncovered = uncovered - coverage[z]
    return tuple(chosen) if not uncovered else None


def _branch(
    uncovered: frozenset[int],
    coverage: dict[int, frozenset[int]],
    budget: int,
    chosen: tuple[int, ...],
) -> Optional[tuple[int, ...]]:
    if not uncovered:
        return chosen
    if budget == 0:
        return None
    best_gain = max(len(c & uncovered) for c in coverage.values())
    if len(uncovered) > budget * best_gain:
        return None

    w = min(uncovered)
    options = sorted(
        (z for z, covered in coverage.items() if w in covered),
        key=lambda z: (-len(coverage[z] & uncovered), z),
    )
    for z in options:
        found = _branch(uncovered - coverage[z], coverage, budget - 1, (*chosen, z))
        if found is not None:
            return found
    return None


def cover_with_budget(
    G: Graph,
    W: Iterable[int],
    excluded: Optional[int],
    budget: int,
    candidate_pool: Optional[Iterable[int]] = None,
) -> Optional[frozenset[int]]:
    """
    Decide exactly whether W can be covered by at most budget vertices.

    Branches on the dominators of the lowest uncovered vertex, pruning when
    the uncovered count exceeds budget times the best single coverage. A
    greedy pass runs first and may only confirm feasibility.

    Args:
        G: The graph
        W: Target set
        excluded: Vertex that may not be used (or None)
        budget: Maximum cover size
        candidate_pool: Allowed cover vertices; defaults to N[W]

    Returns:
        A cover Z with |Z| <= budget and excluded not in Z, or None
    """
    W = frozenset(W)
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    if not W:
        return frozenset()

    pool = G.closed_neighborhood_of(W) if candidate_pool is None else frozenset(candidate_pool)
    pool = pool - {excluded}
    coverage = {}
    for z in pool:
        covered = G.closed_neighbors(z) & W
        if covered:
            coverage[z] = covered
    if not coverage or not W <= frozenset().union(*coverage.values()):
        return None

    found = _greedy_cover(W, coverage, budget)
    if found is None:
        found = _branch(W, coverage, budget, ())
    return frozenset(found) if found is not None else None


# =============================================================================
# Alpha-strong vertices
# =============================================================================

def _closed_hits(G: Graph, W: frozenset[int]) -> Counter:
    """|N[z] ∩ W| for every z with a nonzero count."""
    hits: Counter = Counter()
    for w in W:
        hits.update(G.closed_neighbors(w))
    return hits


def alpha_strong(G: Graph, W: Iterable[int], alpha: Fraction) -> frozenset[int]:
    """
    All z with |N[z] ∩ W| >= alpha * |W|, compared exactly.

    Raises:
        CoverDomainError: W is empty
    """
    W = frozenset(W)
    if not W:
        raise CoverDomainError("alpha_strong needs a nonempty target set")
    alpha = Fraction(alpha)
    if alpha <= 0:
        return frozenset(G.vertices)
    needed = alpha * len(W)
    return frozenset(z for z, count in _closed_hits(G, W).items() if count >= needed)


# =============================================================================
# Pseudo-covers
# =============================================================================

@dataclass(frozen=True)
class PseudoCover:
    """A pseudo-cover with its residual trace W_0 ⊇ W_1 ⊇ ... ⊇ W_m."""
    base_vertex: Optional[int]
    sequence: tuple[int, ...]
    residuals: tuple[frozenset[int], ...]

    @property
    def residual(self) -> frozenset[int]:
        return self.residuals[-1]

    def __len__(self):
        return len(self.sequence)


def is_pseudocover(G: Graph, W: Iterable[int], sequence: Iterable[int], params: Params) -> bool:
    """Check the four pseudo-cover conditions for sequence against W."""
    residual = frozenset(W)
    sequence = tuple(sequence)
    if len(sequence) > params.k:
        return False
    for z in sequence:
        if not residual:
            return False
        gain = len(G.closed_neighbors(z) & residual)
        if gain < params.ell or gain < params.alpha * len(residual):
            return False
        residual = residual - G.closed_neighbors(z)
    return len(residual) <= params.q


def pseudocovers_of(G: Graph, W: Iterable[int], params: Params, base_vertex: Optional[int] = None) -> list[PseudoCover]:
    """
    Every pseudo-cover of W, by depth-first search in ascending vertex order.

    Each level extends with the alpha-strong vertices of the current
    residual that cover at least ell of it; every prefix whose residual is
    at most q is emitted and still extended.
    """
    found: list[PseudoCover] = []

    def extend(sequence: tuple[int, ...], residuals: tuple[frozenset[int], ...]):
        residual = residuals[-1]
        if len(residual) <= params.q:
            found.append(PseudoCover(base_vertex, sequence, residuals))
        if len(sequence) == params.k or not residual:
            return
        needed = max(params.alpha * len(residual), params.ell)
        hits = _closed_hits(G, residual)
        for z in sorted(z for z, count in hits.items() if count >= needed):
            extend((*sequence, z), (*residuals, residual - G.closed_neighbors(z)))

    extend((), (frozenset(W),))
    return found


def enumerate_pseudocovers(G: Graph, v: int, params: Params) -> list[PseudoCover]:
    """
    All pseudo-covers of N(v); empty when |N(v)| <= ell.
    """
    W = G.neighbors(v)
    if len(W) <= params.ell:
        return []
    covers = pseudocovers_of(G, W, params, base_vertex=v)
    logger.debug(f"v={v}: {len(covers)} pseudo-cover(s) of |N(v)|={len(W)}")
    return covers


def pseudocover_from_cover(G: Graph, W: Iterable[int], Z: Iterable[int], params: Params) -> PseudoCover:
    """
    Turn a cover Z of W (|Z| <= k, |W| >= q) into a pseudo-cover.

    Orders Z greedily by coverage of what is still uncovered (ties: lowest
    ID) and keeps the longest prefix in which every vertex is alpha-strong
    for, and covers at least ell of, the residual it sees.

    Raises:
        CoverDomainError: preconditions fail, or the prefix left more than
            q uncovered. With the derived constants the residual is only
            guaranteed below q + k, since ell = q / k + 1, so this can fire
            on genuine runs too
    """
    W, Z = frozenset(W), frozenset(Z)
    if len(W) < params.q:
        raise CoverDomainError(f"|W|={len(W)} is below q={params.q}")
    if len(Z) > params.k:
        raise CoverDomainError(f"|Z|={len(Z)} exceeds k={params.k}")
    if not W <= G.closed_neighborhood_of(Z):
        raise CoverDomainError("Z does not cover W")

    order: list[int] = []
    remaining = set(Z)
    residual = W
    while remaining:
        z = min(remaining, key=lambda c: (-len(G.closed_neighbors(c) & residual), c))
        order.append(z)
        remaining.remove(z)
        residual = residual - G.closed_neighbors(z)

    residuals = [W]
    sequence: list[int] = []
    for z in order:
        current = residuals[-1]
        gain = len(G.closed_neighbors(z) & current)
        if not current or gain < params.ell or gain < params.alpha * len(current):
            break
        sequence.append(z)
        residuals.append(current - G.closed_neighbors(z))

    if len(residuals[-1]) > params.q:
        raise CoverDomainError(
            f"prefix {sequence} leaves {len(residuals[-1])} > q={params.q} uncovered"
        )
    return PseudoCover(None, tuple(sequence), tuple(residuals))


# =============================================================================
# Dominators P(v)
# =============================================================================

def dominators_P(G: Graph, v: int, params: Params) -> frozenset[int]:
    """Vertices appearing in some pseudo-cover of N(v)."""
    return frozenset(z for cover in enumerate_pseudocovers(G, v, params) for z in cover.sequence)


def closure_P(G: Graph, W: Iterable[int], params: Params, depth: int) -> frozenset[int]:
    """P(W) ∪ P(P(W)) ∪ ... up to depth applications."""
    return DominatorIndex(G, params).closure(W, depth)


class DominatorIndex:
    """
    Thread-safe per-graph cache of pseudo-covers and P(v).

    One index belongs to one (graph, params) pair.
    """

    def __init__(self, G: Graph, params: Params):
        self.graph = G
        self.params = params
        self._covers: dict[int, list[PseudoCover]] = {}
        self._lock = threading.Lock()

    def pseudocovers(self, v: int) -> list[PseudoCover]:
        with self._lock:
            cached = self._covers.get(v)
        if cached is not None:
            return cached
        covers = enumerate_pseudocovers(self.graph, v, self.params)
        with self._lock:
            self._covers.setdefault(v, covers)
            return self._covers[v]

    def dominators(self, v: int) -> frozenset[int]:
        return frozenset(z for cover in self.pseudocovers(v) for z in cover.sequence)

    def dominators_of(self, W: Iterable[int]) -> frozenset[int]:
        result: set[int] = set()
        for w in W:
            result |= self.dominators(w)
        return frozenset(result)

    def closure(self, W: Iterable[int], depth: int) -> frozenset[int]:
        if depth < 1:
            raise ValueError(f"depth must be at least 1, got {depth}")
        W = frozenset(W)
        total = self.dominators_of(W)
        for _ in range(depth - 1):
            grown = self.dominators_of(W | total)
            if grown == total:
                break
            total = grown
        return total

    @property
    def cached(self) -> dict[int, list[PseudoCover]]:
        with self._lock:
            return dict(self._covers)
