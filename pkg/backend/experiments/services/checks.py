"""
Named bound checks evaluated on every experiment run.

Each check maps a finished run to pass, fail or not-applicable. Checks that
only hold for the derived constants are not-applicable when the run used
overrides; checks that need gamma(G) are not-applicable without an exact
oracle.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cached_property, wraps
from typing import Callable, Optional, Union

from graphs.services import Graph
from domination.services import (
    ROUNDS,
    CoverDomainError,
    DominatorIndex,
    DomSetCertificate,
    Mode,
    Params,
    PhaseResult,
    alpha_strong,
    compute_Dhat,
    cover_with_budget,
    is_pseudocover,
    plain_sequences,
    pseudocover_from_cover,
    verify_dominating,
)

logger = logging.getLogger(__name__)


class Verdict(StrEnum):
    PASS = 'pass'
    FAIL = 'fail'
    NOT_APPLICABLE = 'not-applicable'


@dataclass
class CheckContext:
    """Everything a check may look at; derived sets are computed on first use."""
    graph: Graph
    params: Params
    result: PhaseResult
    oracle: DomSetCertificate
    mode: Mode = Mode.REFERENCE
    rounds: Optional[int] = None
    #: None when only the reference execution ran
    agreement: Optional[bool] = None

    @property
    def exact(self) -> bool:
        return self.oracle.optimal

    @property
    def gamma(self) -> int:
        return self.oracle.size

    @cached_property
    def live(self) -> Graph:
        return self.graph.without(self.result.D1)

    @cached_property
    def index(self) -> DominatorIndex:
        return DominatorIndex(self.live, self.params)

    @cached_property
    def dhat(self) -> frozenset[int]:
        return compute_Dhat(self.graph, self.oracle.vertices, self.params.k)

    @cached_property
    def dprime(self) -> frozenset[int]:
        return self.oracle.vertices | self.dhat

    @cached_property
    def dominated_before_cleanup(self) -> frozenset[int]:
        return self.result.dominated - self.result.D3


Outcome = Union[bool, Verdict]
Check = Callable[[CheckContext], Verdict]

CHECKS: dict[str, Check] = {}


def check(name: str, genuine_only: bool = False, needs_exact: bool = False):
    """Register a check under name; the wrapped function returns a bool or a Verdict."""
    def register(func: Callable[[CheckContext], Outcome]) -> Check:
        @wraps(func)
        def run(ctx: CheckContext) -> Verdict:
            if genuine_only and not ctx.params.genuine:
                return Verdict.NOT_APPLICABLE
            if needs_exact and not ctx.exact:
                return Verdict.NOT_APPLICABLE
            outcome = func(ctx)
            if isinstance(outcome, Verdict):
                return outcome
            return Verdict.PASS if outcome else Verdict.FAIL

        CHECKS[name] = run
        return run
    return register


# =============================================================================
# Always applicable
# =============================================================================

@check('dominating')
def dominating(ctx: CheckContext) -> Outcome:
    return verify_dominating(ctx.graph, ctx.result.solution)


@check('phases_disjoint')
def phases_disjoint(ctx: CheckContext) -> Outcome:
    D1, D2, D3 = ctx.result.sets
    return not (D1 & D2 or D1 & D3 or D2 & D3)


@check('reference_distributed_agree')
def reference_distributed_agree(ctx: CheckContext) -> Outcome:
    if ctx.agreement is None:
        return Verdict.NOT_APPLICABLE
    return ctx.agreement


@check('round_budget')
def round_budget(ctx: CheckContext) -> Outcome:
    if ctx.rounds is None:
        return Verdict.NOT_APPLICABLE
    return ctx.rounds <= ROUNDS


@check('strong_vertex_bound')
def strong_vertex_bound(ctx: CheckContext) -> Outcome:
    """Large neighborhoods have at most 4 * nabla1 / alpha strong vertices."""
    params = ctx.params
    large = [v for v in ctx.graph.vertices if ctx.graph.degree(v) >= params.strong_vertex_min_size]
    if not large:
        return Verdict.NOT_APPLICABLE
    return all(
        len(alpha_strong(ctx.graph, ctx.graph.neighbors(v), params.alpha)) <= params.strong_vertex_limit
        for v in large
    )


# =============================================================================
# Oracle-relative bounds
# =============================================================================

@check('d1_le_2gamma', needs_exact=True)
def d1_le_2gamma(ctx: CheckContext) -> Outcome:
    return len(ctx.result.D1) <= 2 * ctx.gamma


@check('dprime_le_3gamma', needs_exact=True)
def dprime_le_3gamma(ctx: CheckContext) -> Outcome:
    return len(ctx.dprime) <= 3 * ctx.gamma


@check('dhat_minus_d_le_2gamma', needs_exact=True)
def dhat_minus_d_le_2gamma(ctx: CheckContext) -> Outcome:
    return len(ctx.dhat - ctx.oracle.vertices) <= 2 * ctx.gamma


@check('plain_sequences_meet_dprime', needs_exact=True)
def plain_sequences_meet_dprime(ctx: CheckContext) -> Outcome:
    """Unrestricted maximal sequences are shorter than t and meet D'."""
    params = ctx.params
    starts = [v for v in ctx.graph.vertices if ctx.graph.degree(v) >= params.plain_start_threshold]
    if not starts:
        return Verdict.NOT_APPLICABLE
    for v in starts:
        for sequence in plain_sequences(ctx.graph, v, params):
            if len(sequence) >= params.t or not set(sequence) & ctx.dprime:
                logger.info(f"plain sequence {sequence} violates the length or D' property")
                return False
    return True


# =============================================================================
# Derived-constant bounds
# =============================================================================

@check('pseudocover_count_bound', genuine_only=True)
def pseudocover_count_bound(ctx: CheckContext) -> Outcome:
    return ctx.result.stats.max_pseudocovers <= ctx.params.pseudocover_count_bound


@check('dominator_count_bound', genuine_only=True)
def dominator_count_bound(ctx: CheckContext) -> Outcome:
    return ctx.result.stats.max_dominators <= ctx.params.dominator_bound


@check('cover_to_pseudocover', genuine_only=True, needs_exact=True)
def cover_to_pseudocover(ctx: CheckContext) -> Outcome:
    """Covers drawn from D' turn into pseudo-covers made of D' vertices."""
    G, params, dprime = ctx.graph, ctx.params, ctx.dprime
    tried = 0
    for v in G.vertices:
        W = G.neighbors(v)
        if len(W) < params.q:
            continue
        Z = cover_with_budget(G, W, v, params.k, candidate_pool=dprime - {v})
        if Z is None:
            continue
        tried += 1
        try:
            cover = pseudocover_from_cover(G, W, Z, params)
        except CoverDomainError as exc:
            logger.info(f"v={v}: cover {sorted(Z)} did not convert: {exc}")
            return False
        if not is_pseudocover(G, W, cover.sequence, params) or not set(cover.sequence) <= dprime:
            return False
    return True if tried else Verdict.NOT_APPLICABLE


@check('sequence_length_lt_t', genuine_only=True)
def sequence_length_lt_t(ctx: CheckContext) -> Outcome:
    return all(len(s) < ctx.params.t for s in ctx.result.sequences)


@check('sequence_meets_dprime', genuine_only=True, needs_exact=True)
def sequence_meets_dprime(ctx: CheckContext) -> Outcome:
    if not ctx.result.sequences:
        return Verdict.NOT_APPLICABLE
    return all(set(s.sequence) & ctx.dprime for s in ctx.result.sequences)


@check('d2_within_closure', genuine_only=True, needs_exact=True)
def d2_within_closure(ctx: CheckContext) -> Outcome:
    if not ctx.result.D2:
        return True
    anchors = ctx.dprime & frozenset(ctx.live.vertices)
    return ctx.result.D2 <= ctx.index.closure(anchors, ctx.params.t)


@check('d2_size_bound', genuine_only=True, needs_exact=True)
def d2_size_bound(ctx: CheckContext) -> Outcome:
    return len(ctx.result.D2) <= ctx.params.closure_factor(ctx.params.t) * len(ctx.dprime)


@check('cleanup_undominated_neighbors', genuine_only=True)
def cleanup_undominated_neighbors(ctx: CheckContext) -> Outcome:
    """After phase 2 no live vertex keeps cleanup_bound undominated neighbors."""
    bound = ctx.params.cleanup_bound
    dominated = ctx.dominated_before_cleanup
    return all(len(ctx.graph.neighbors(v) - dominated) < bound for v in ctx.live.vertices)


@check('d3_size_bound', genuine_only=True, needs_exact=True)
def d3_size_bound(ctx: CheckContext) -> Outcome:
    return len(ctx.result.D3) <= ctx.params.cleanup_bound * ctx.gamma


def gamma_lower_bound(G: Graph, greedy: DomSetCertificate) -> int:
    """ceil(|greedy| / H(max degree + 1)), a lower bound on gamma(G)."""
    if G.order == 0:
        return 0
    harmonic = sum(Fraction(1, i) for i in range(1, G.max_degree + 2))
    return max(1, math.ceil(Fraction(greedy.size) / harmonic))


@check('approximation_factor', genuine_only=True)
def approximation_factor(ctx: CheckContext) -> Outcome:
    gamma = ctx.gamma if ctx.exact else gamma_lower_bound(ctx.graph, ctx.oracle)
    return len(ctx.result.solution) <= ctx.params.factor * gamma


def evaluate_checks(ctx: CheckContext) -> dict[str, Verdict]:
    """Run every registered check, in registration order."""
    verdicts = {name: run(ctx) for name, run in CHECKS.items()}
    failed = [name for name, verdict in verdicts.items() if verdict == Verdict.FAIL]
    if failed:
        logger.warning(f"Failed checks on {ctx.graph!r}: {', '.join(failed)}")
    return verdicts
