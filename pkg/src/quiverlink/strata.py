"""Graded-dimension shadows of the rank stratification.

The representation space of a quiver with a distinguished 2-cycle breaks
into strata by the rank of the matrix at the arrow d.  Each stratum is,
up to homotopy, the representation space of the unlinked quiver at a
unique dimension vector, so a stratum's shifted Poincare series is just a
motivic coefficient of the unlinked quiver.  Summing the strata recovers
the unlinking identity; cutting the sum at a rank threshold gives the
graded dimensions of the ideal filtration.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Literal

from .mutations import MutationResult, fibre_u, unlink
from .qcoef import QHalfRational
from .quiver import DimVector, Quiver, TwoCyclePointer, VertexId
from .series import (
    MotivicSeries,
    TruncationPolicy,
    Verdict,
    coefficient_A,
    series_A,
    series_eq,
    substitute_vertex,
)


class StratumIndex:
    """A dimension vector with a rank level at the distinguished pair."""

    __slots__ = ("d", "ell", "v0", "v1")

    def __init__(self, d: DimVector, ell: int, v0: VertexId, v1: VertexId):
        if ell < 0:
            raise ValueError("stratum level must be non-negative")
        if ell > min(d[v0], d[v1]):
            raise ValueError(
                f"stratum level {ell} exceeds min(d_v0, d_v1) = {min(d[v0], d[v1])}"
            )
        self.d = d
        self.ell = ell
        self.v0 = v0
        self.v1 = v1

    def __repr__(self):
        return f"StratumIndex(d={self.d!r}, ell={self.ell})"


def stratum_codim(idx: StratumIndex) -> int:
    """Codimension of the rank-ell stratum inside the representation moduli."""
    d0 = idx.d[idx.v0]
    d1 = idx.d[idx.v1]
    return d0 * d1 - (d0 + d1 - idx.ell) * idx.ell


@lru_cache(maxsize=None)
def _unlink_cached(quiver: Quiver, tc: TwoCyclePointer) -> MutationResult:
    return unlink(quiver, tc)


def stratum_series(quiver: Quiver, tc: TwoCyclePointer, idx: StratumIndex) -> QHalfRational:
    """Shifted Poincare series of a stratum, read off on the unlinked side."""
    if (idx.v0, idx.v1) != (tc.v0, tc.v1):
        raise ValueError("stratum index and two-cycle pointer disagree on the pair")
    res = _unlink_cached(quiver, tc)
    e = fibre_u(res, idx.d)[idx.ell]
    return coefficient_A(res.quiver, e)


def unlink_policy(res: MutationResult, policy: TruncationPolicy) -> TruncationPolicy:
    """Extend a policy to the unlinked quiver; the new vertex weighs as much
    as the pair it stands for, so the substitution is coverage-exact."""
    tc = res.pointer
    w = policy.weight(tc.v0) + policy.weight(tc.v1)
    return policy.extended(res.quiver, {res.new_vertex: w})


def unlinking_sides(
    quiver: Quiver, tc: TwoCyclePointer, policy: TruncationPolicy
) -> tuple[MotivicSeries, MotivicSeries]:
    """The substituted unlinked series and the plain series, ready to compare."""
    res = _unlink_cached(quiver, tc)
    lifted = unlink_policy(res, policy)
    image = DimVector(quiver, {tc.v0: 1, tc.v1: 1})
    substituted = substitute_vertex(
        series_A(res.quiver, lifted), res.new_vertex, image, 0, quiver, policy
    )
    return substituted, series_A(quiver, policy)


def check_unlinking_identity(
    quiver: Quiver, tc: TwoCyclePointer, policy: TruncationPolicy
) -> Verdict:
    """The unlinked series with x_star -> x_{v0} x_{v1} equals the series of Q."""
    lhs, rhs = unlinking_sides(quiver, tc, policy)
    return series_eq(lhs, rhs)


def ideal_filtration_series(
    quiver: Quiver,
    tc: TwoCyclePointer,
    d: DimVector,
    p: int,
    side: Literal["right", "left"],
) -> QHalfRational:
    """Graded dimension of the p-th filtration ideal at x^d.

    The right-ideal filtration keeps the strata of rank at most d_{v1} - p;
    the left one uses d_{v0} - p.  An empty range gives zero.
    """
    if p < 0:
        raise ValueError("filtration index must be non-negative")
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    cap = min(d[tc.v0], d[tc.v1])
    top = (d[tc.v1] if side == "right" else d[tc.v0]) - p
    total = QHalfRational(0)
    for ell in range(min(cap, top) + 1):
        total = total + stratum_series(quiver, tc, StratumIndex(d, ell, tc.v0, tc.v1))
    return total


def iter_filtration_report(
    quiver: Quiver, tc: TwoCyclePointer, policy: TruncationPolicy
) -> Iterator[tuple[DimVector, str, int, bool]]:
    """Telescoping checks for every region point, filtration index and side."""
    for d in policy.region():
        for side in ("right", "left"):
            pivot = d[tc.v1] if side == "right" else d[tc.v0]
            cap = min(d[tc.v0], d[tc.v1])
            for p in range(pivot + 2):
                step = ideal_filtration_series(quiver, tc, d, p, side) - \
                    ideal_filtration_series(quiver, tc, d, p + 1, side)
                ell = pivot - p
                if 0 <= ell <= cap:
                    expected = stratum_series(quiver, tc, StratumIndex(d, ell, tc.v0, tc.v1))
                else:
                    expected = QHalfRational(0)
                yield d, side, p, step == expected
