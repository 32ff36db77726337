"""
The constant bundle that drives every threshold of the algorithm.

From an assumed upper bound nabla1 on the 1-shallow-minor density:
k = 2 * ceil(nabla1), alpha = 1/k, ell = 4k^3 + 1, q = 4k^4. t is the
smallest t with no K_{t,t} subgraph (exact mode), k + 1 (bound mode) or
a supplied value.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Optional, Sequence, Union

from graphs.services import Graph, min_t_no_biclique

logger = logging.getLogger(__name__)


class TMode(StrEnum):
    EXACT = 'exact'
    BOUND = 'bound'
    VALUE = 'value'


@dataclass(frozen=True)
class Params:
    nabla1: Fraction
    k: int
    alpha: Fraction
    ell: int
    q: int
    t: int
    t_mode: TMode = TMode.EXACT
    #: per-position B-set thresholds replacing the derived ones; a sequence
    #: cannot grow past the last given position
    thresholds: Optional[tuple[int, ...]] = None
    nonconforming: bool = field(default=False)

    @property
    def genuine(self) -> bool:
        return not self.nonconforming

    def threshold(self, i: int) -> Optional[Fraction]:
        """
        Minimum |B_i| for position i of a dominating sequence.

        k^(t-i) * (2t - i + (t-i) * q), exact and never below 1 so that every
        B_i is nonempty; None when override thresholds leave position i
        undefined.
        """
        if i < 1:
            raise ValueError(f"Sequence positions start at 1, got {i}")
        if self.thresholds is not None:
            return Fraction(self.thresholds[i - 1]) if i <= len(self.thresholds) else None
        t = self.t
        return max(Fraction(self.k) ** (t - i) * (2 * t - i + (t - i) * self.q), Fraction(1))

    @property
    def sequence_threshold(self) -> Fraction:
        """Neighborhood size needed to start a sequence; also the cleanup bound."""
        return self.threshold(1)

    def plain_threshold(self, i: int) -> Fraction:
        """Minimum |N[u] ∩ B_i| for the next vertex of an unrestricted sequence."""
        return max(Fraction(self.k) ** (self.t - i - 1) * (2 * self.t - i), Fraction(1))

    @property
    def plain_start_threshold(self) -> Fraction:
        return Fraction(self.k) ** (self.t - 1) * (2 * self.t - 1)

    # ------------------------------------------------------------------
    # Proven bounds

    @property
    def pseudocover_count_bound(self) -> int:
        return 2 * (2 * self.k ** 2) ** self.k

    @property
    def dominator_bound(self) -> int:
        return (2 * self.k) ** (2 * self.k + 1)

    def closure_factor(self, depth: int) -> int:
        return (2 * self.k) ** (depth * (2 * self.k + 1))

    @property
    def strong_vertex_limit(self) -> Fraction:
        """At most 4 * nabla1 / alpha vertices are alpha-strong for a large W."""
        return 4 * self.nabla1 / self.alpha

    @property
    def strong_vertex_min_size(self) -> Fraction:
        return 8 * self.nabla1 / self.alpha ** 2

    @property
    def cleanup_bound(self) -> Fraction:
        """k^(t-1) * (2t - 1 + (t-1) * q)."""
        return Fraction(self.k) ** (self.t - 1) * (2 * self.t - 1 + (self.t - 1) * self.q)

    @property
    def factor(self) -> int:
        """Approximation factor 2 + 3(2k)^(t(2k+1)) + k^(t-1)(2t-1+(t-1)q)."""
        return 2 + 3 * self.closure_factor(self.t) + int(self.cleanup_bound)

    def as_dict(self) -> dict:
        return {
            'nabla1': self.nabla1,
            'k': self.k,
            'alpha': self.alpha,
            'ell': self.ell,
            'q': self.q,
            't': self.t,
            't_mode': str(self.t_mode),
            'thresholds': list(self.thresholds) if self.thresholds is not None else None,
            'nonconforming': self.nonconforming,
        }


def make_params(
    nabla1,
    G: Optional[Graph] = None,
    t: Union[str, int] = TMode.EXACT,
    ell: Optional[int] = None,
    q: Optional[int] = None,
    thresholds: Optional[Sequence[int]] = None,
) -> Params:
    """
    Derive Params from the nabla1 bound.

    Args:
        nabla1: Assumed upper bound on the 1-shallow-minor density (> 0)
        G: The instance; required when t is 'exact'
        t: 'exact', 'bound' or an explicit integer >= 2
        ell, q, thresholds: Overrides; any of them marks the result
            nonconforming

    Returns:
        Params
    """
    nabla1 = Fraction(nabla1)
    if nabla1 <= 0:
        raise ValueError(f"nabla1 must be positive, got {nabla1}")
    k = 2 * math.ceil(nabla1)

    if isinstance(t, str) and t == TMode.EXACT:
        if G is None:
            raise ValueError("t='exact' needs the graph")
        # t >= 2 keeps every threshold formula meaningful
        t_value, t_mode = max(2, min_t_no_biclique(G)), TMode.EXACT
    elif isinstance(t, str) and t == TMode.BOUND:
        t_value, t_mode = k + 1, TMode.BOUND
    else:
        t_value, t_mode = int(t), TMode.VALUE
        if t_value < 2:
            raise ValueError(f"t must be at least 2, got {t_value}")

    overridden = ell is not None or q is not None or thresholds is not None
    if thresholds is not None and any(b < 1 for b in thresholds):
        raise ValueError("thresholds must be positive")
    if ell is not None and ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if q is not None and q < 0:
        raise ValueError(f"q must be non-negative, got {q}")

    params = Params(
        nabla1=nabla1,
        k=k,
        alpha=Fraction(1, k),
        ell=4 * k ** 3 + 1 if ell is None else int(ell),
        q=4 * k ** 4 if q is None else int(q),
        t=t_value,
        t_mode=t_mode,
        thresholds=tuple(int(b) for b in thresholds) if thresholds is not None else None,
        nonconforming=overridden,
    )
    logger.debug(f"Params k={params.k} ell={params.ell} q={params.q} t={params.t} nonconforming={overridden}")
    return params
