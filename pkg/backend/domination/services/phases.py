"""
The three phases of the dominating-set approximation, as pure functions.

Phase 1 takes every v whose N(v) cannot be covered by k vertices other than
v. Phase 2 runs on the graph without D1 and takes the last vertex of every
maximal k-dominating-sequence. Phase 3 takes whatever is still undominated.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Callable, Iterable, Optional, TypeVar

from django.conf import settings

from graphs.services import Graph

from .covers import DominatorIndex, cover_with_budget
from .params import Params, make_params
from .protocol import run_distributed
from .sequences import DomSequence, enumerate_max_sequences

logger = logging.getLogger(__name__)

T = TypeVar('T')


class Mode(StrEnum):
    REFERENCE = 'reference'
    DISTRIBUTED = 'distributed'
    BOTH = 'both'


class ModeDisagreement(AssertionError):
    """Reference and distributed executions produced different sets."""


@dataclass
class PhaseStats:
    budget_searches: int = 0
    high_degree_vertices: int = 0
    pseudocovers_enumerated: int = 0
    max_pseudocovers: int = 0
    max_dominators: int = 0
    maximal_sequences: int = 0
    sequence_lengths: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class PhaseResult:
    D1: frozenset[int]
    D2: frozenset[int]
    D3: frozenset[int]
    dominated: frozenset[int]
    stats: PhaseStats = field(default_factory=PhaseStats, compare=False)
    sequences: tuple[DomSequence, ...] = field(default=(), compare=False)
    mode: Mode = field(default=Mode.REFERENCE, compare=False)
    rounds: Optional[int] = field(default=None, compare=False)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def solution(self) -> frozenset[int]:
        return self.D1 | self.D2 | self.D3

    @property
    def sets(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return self.D1, self.D2, self.D3


def _map(func: Callable[[int], T], items: Iterable[int], workers: int) -> list[T]:
    items = list(items)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(func, items))
    return [func(v) for v in items]


# =============================================================================
# Phases
# =============================================================================

def in_D1(G: Graph, v: int, params: Params) -> bool:
    """True when N(v) has no cover of size <= k avoiding v."""
    return cover_with_budget(G, G.neighbors(v), v, params.k) is None


def phase1(G: Graph, params: Params, workers: Optional[int] = None) -> tuple[frozenset[int], frozenset[int]]:
    """
    D1 and the vertices it dominates.

    Returns:
        (D1, N[D1])
    """
    workers = workers or settings.DOMSET_WORKERS
    flags = _map(lambda v: in_D1(G, v, params), G.vertices, workers)
    D1 = frozenset(v for v, flag in zip(G.vertices, flags) if flag)
    logger.debug(f"phase1: |D1|={len(D1)}")
    return D1, G.closed_neighborhood_of(D1)


def _phase2_sequences(
    G_live: Graph,
    params: Params,
    index: DominatorIndex,
    workers: int,
) -> list[DomSequence]:
    per_vertex = _map(
        lambda v: enumerate_max_sequences(G_live, v, params, dominators=index.dominators),
        G_live.vertices,
        workers,
    )
    return [sequence for found in per_vertex for sequence in found]


def phase2(
    G_live: Graph,
    params: Params,
    index: Optional[DominatorIndex] = None,
    workers: Optional[int] = None,
) -> tuple[frozenset[int], frozenset[int]]:
    """
    D2 on the graph with D1 removed, and the vertices it dominates.

    Returns:
        (D2, N[D2] in G_live)
    """
    workers = workers or settings.DOMSET_WORKERS
    index = index or DominatorIndex(G_live, params)
    sequences = _phase2_sequences(G_live, params, index, workers)
    D2 = frozenset(s.last for s in sequences)
    logger.debug(f"phase2: {len(sequences)} maximal sequence(s), |D2|={len(D2)}")
    return D2, G_live.closed_neighborhood_of(D2)


def phase3(G: Graph, dominated: Iterable[int]) -> frozenset[int]:
    """Vertices not yet dominated."""
    return frozenset(G.vertices) - frozenset(dominated)


# =============================================================================
# Full runs
# =============================================================================

def run_reference(G: Graph, params: Params, workers: Optional[int] = None) -> PhaseResult:
    """Run the three phases centrally and collect statistics."""
    workers = workers or settings.DOMSET_WORKERS
    started = time.perf_counter()
    stats = PhaseStats(budget_searches=G.order)

    D1, dominated = phase1(G, params, workers)
    G_live = G.without(D1)

    index = DominatorIndex(G_live, params)
    sequences = _phase2_sequences(G_live, params, index, workers)
    D2 = frozenset(s.last for s in sequences)
    dominated = dominated | G_live.closed_neighborhood_of(D2)
    D3 = phase3(G, dominated)

    high = [v for v in G_live.vertices if G_live.degree(v) > params.ell]
    covers = {v: index.pseudocovers(v) for v in high}
    stats.high_degree_vertices = len(high)
    stats.pseudocovers_enumerated = sum(len(c) for c in covers.values())
    stats.max_pseudocovers = max((len(c) for c in covers.values()), default=0)
    stats.max_dominators = max((len(index.dominators(v)) for v in high), default=0)
    stats.maximal_sequences = len(sequences)
    stats.sequence_lengths = dict(sorted(Counter(len(s) for s in sequences).items()))

    return PhaseResult(
        D1=D1,
        D2=D2,
        D3=D3,
        dominated=dominated | D3,
        stats=stats,
        sequences=tuple(sequences),
        mode=Mode.REFERENCE,
        elapsed=time.perf_counter() - started,
    )


def run_full(
    G: Graph,
    nabla1=None,
    mode: Mode | str = Mode.REFERENCE,
    params: Optional[Params] = None,
    workers: Optional[int] = None,
) -> PhaseResult:
    """
    Run the algorithm on G.

    Distributed (and both) mode also executes the round protocol on the
    simulator and checks that it produced the same (D1, D2, D3).

    Args:
        G: The instance
        nabla1: Assumed bound on nabla_1; ignored when params is given
        mode: reference, distributed or both
        params: Precomputed constants
        workers: Threads for per-vertex work

    Raises:
        ModeDisagreement: the two executions differ
    """
    mode = Mode(mode)
    if params is None:
        if nabla1 is None:
            raise ValueError("run_full needs nabla1 or params")
        params = make_params(nabla1, G)

    reference = run_reference(G, params, workers)
    if mode == Mode.REFERENCE:
        return reference

    distributed = run_distributed(G, params, workers)
    if distributed.sets != reference.sets:
        raise ModeDisagreement(
            f"reference (|D1|,|D2|,|D3|)={tuple(map(len, reference.sets))} "
            f"but distributed={tuple(map(len, distributed.sets))}"
        )
    return PhaseResult(
        D1=reference.D1,
        D2=reference.D2,
        D3=reference.D3,
        dominated=reference.dominated,
        stats=reference.stats,
        sequences=reference.sequences,
        mode=mode,
        rounds=distributed.rounds,
        elapsed=reference.elapsed + distributed.elapsed,
    )
