"""Truncated generating series with rational-function coefficients.

A series is a total map from the dimension vectors inside a weighted
truncation region to coefficients in the s-field.  The motivic series of
a quiver assigns to x^d the coefficient (-s)^{chi(d,d)} over a product of
q-Pochhammer factors; the EKL-normalised series and the comparison
between the two live here as well, together with the monomial
substitution used by the linking/unlinking identities.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Iterator, Mapping

from .qcoef import QHalfRational, laurent_expand, neg_s_power, poch, s_power
from .quiver import (
    DimVector,
    InvalidDimVectorError,
    Quiver,
    VertexId,
    adjacency_matrix,
    euler_form,
    format_dim,
    is_symmetric,
)


class CoverageError(ValueError):
    """The source truncation region cannot determine a target coefficient."""


class IncomparableSeriesError(ValueError):
    """Two series do not share a quiver and truncation policy."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of an identity check: holds, or a first counterexample."""

    holds: bool
    witness: Any = None
    lhs: QHalfRational | None = None
    rhs: QHalfRational | None = None

    @classmethod
    def ok(cls) -> Verdict:
        return cls(True)

    @classmethod
    def counterexample(cls, witness, lhs, rhs) -> Verdict:
        return cls(False, witness, lhs, rhs)

    def __bool__(self) -> bool:
        return self.holds

    def describe(self) -> str:
        if self.holds:
            return "holds"
        w = format_dim(self.witness) if isinstance(self.witness, DimVector) else str(self.witness)
        return f"counterexample at {w}: lhs={self.lhs} rhs={self.rhs}"


class TruncationPolicy:
    """Per-vertex weights and a bound; keeps the formal series finite.

    A dimension vector d is inside the region iff sum_i w_i * d_i <= bound.
    """

    __slots__ = ("quiver", "weights", "bound")

    def __init__(
        self,
        quiver: Quiver,
        bound: int,
        weights: Mapping[VertexId, int] | None = None,
    ):
        if bound < 0:
            raise ValueError("truncation bound must be non-negative")
        ws = [1] * len(quiver.vertices)
        if weights:
            for v, w in weights.items():
                if not quiver.has_vertex(v):
                    raise ValueError(f"weight for unknown vertex {v!r}")
                if w < 1:
                    raise ValueError("weights must be positive")
                ws[quiver.index(v)] = w
        self.quiver = quiver
        self.weights = tuple(ws)
        self.bound = bound

    def weight(self, v: VertexId) -> int:
        return self.weights[self.quiver.index(v)]

    def weighted_degree(self, d: DimVector) -> int:
        return sum(w * c for w, c in zip(self.weights, d.counts))

    def contains(self, d: DimVector) -> bool:
        return d.quiver == self.quiver and self.weighted_degree(d) <= self.bound

    def region(self) -> Iterator[DimVector]:
        """All region points, lexicographic in the quiver's vertex order."""
        n = len(self.weights)

        def rec(i: int, remaining: int, prefix: list[int]) -> Iterator[DimVector]:
            if i == n:
                yield DimVector._from_counts(self.quiver, tuple(prefix))
                return
            w = self.weights[i]
            for c in range(remaining // w + 1):
                prefix.append(c)
                yield from rec(i + 1, remaining - c * w, prefix)
                prefix.pop()

        yield from rec(0, self.bound, [])

    def extended(self, quiver: Quiver, extra: Mapping[VertexId, int]) -> TruncationPolicy:
        """Carry these weights onto a larger quiver, adding new-vertex weights."""
        ws = dict(zip(self.quiver.vertices, self.weights))
        ws.update(extra)
        return TruncationPolicy(quiver, self.bound, ws)

    def __eq__(self, other):
        return (
            isinstance(other, TruncationPolicy)
            and self.quiver == other.quiver
            and self.weights == other.weights
            and self.bound == other.bound
        )

    def __hash__(self):
        return hash((self.quiver, self.weights, self.bound))

    def __repr__(self):
        return f"TruncationPolicy(bound={self.bound}, weights={self.weights})"


class MotivicSeries:
    """A total coefficient table over a truncation region."""

    __slots__ = ("quiver", "policy", "_coeffs", "_keys")

    def __init__(self, quiver: Quiver, policy: TruncationPolicy,
                 coefficients: Mapping[DimVector, QHalfRational]):
        if policy.quiver != quiver:
            raise ValueError("policy does not belong to this quiver")
        keys = tuple(policy.region())
        coeffs = dict(coefficients)
        if set(coeffs) != set(keys):
            raise ValueError("coefficient table must be total on the region")
        self.quiver = quiver
        self.policy = policy
        self._coeffs = coeffs
        self._keys = keys

    @classmethod
    def build(cls, quiver: Quiver, policy: TruncationPolicy,
              fn: Callable[[DimVector], QHalfRational]) -> MotivicSeries:
        keys = tuple(policy.region())
        return cls(quiver, policy, {d: fn(d) for d in keys})

    def coefficient(self, d: DimVector) -> QHalfRational:
        try:
            return self._coeffs[d]
        except KeyError:
            raise KeyError(f"{format_dim(d)} is outside the truncation region") from None

    def items(self) -> Iterator[tuple[DimVector, QHalfRational]]:
        for d in self._keys:
            yield d, self._coeffs[d]

    def dump(self) -> str:
        """Machine-readable rendering: one tab-separated line per region point."""
        return "".join(f"{format_dim(d)}\t{c.render()}\n" for d, c in self.items())

    def __len__(self):
        return len(self._keys)


@lru_cache(maxsize=None)
def _poch_product(counts: tuple[int, ...]) -> QHalfRational:
    out = poch(0)
    for c in sorted(counts, reverse=True):
        if c == 0:
            break
        out = out * poch(c)
    return out


@lru_cache(maxsize=None)
def coefficient_A(quiver: Quiver, d: DimVector) -> QHalfRational:
    """Motivic series coefficient at x^d: (-s)^{chi(d,d)} / prod_i (q;q)_{d_i}."""
    chi = euler_form(quiver, d, d)
    return neg_s_power(chi) / _poch_product(d.counts)


def series_A(quiver: Quiver, policy: TruncationPolicy) -> MotivicSeries:
    """The motivic generating series over the truncation region."""
    return MotivicSeries.build(quiver, policy, lambda d: coefficient_A(quiver, d))


@lru_cache(maxsize=None)
def coefficient_P_EKL(quiver: Quiver, d: DimVector) -> QHalfRational:
    """EKL-normalised coefficient: (-t)^{sum C_ij d_i d_j} over (t^2;t^2)-factors."""
    C = adjacency_matrix(quiver)
    n = len(quiver.vertices)
    e = sum(C[i][j] * d.counts[i] * d.counts[j] for i in range(n) for j in range(n))
    return neg_s_power(e) / _poch_product(d.counts)


def series_P_EKL(quiver: Quiver, policy: TruncationPolicy) -> MotivicSeries:
    """The EKL-style series; stated for symmetric quivers, warns otherwise."""
    if not is_symmetric(quiver):
        warnings.warn(
            f"quiver {quiver.name!r} is not symmetric; the exponent of the "
            "EKL series is convention-dependent",
            stacklevel=2,
        )
    return MotivicSeries.build(quiver, policy, lambda d: coefficient_P_EKL(quiver, d))


def check_lemma21(quiver: Quiver, policy: TruncationPolicy) -> Verdict:
    """Compare the motivic series with the EKL series after q -> q^{-1/2}.

    Coefficient-wise this asserts, for every d in the region, that the
    motivic coefficient equals s^{-|d|} times the EKL coefficient with
    s -> s^{-1} applied to the rational function.
    """
    if not is_symmetric(quiver):
        raise ValueError("the series comparison is only defined for symmetric quivers")
    for d, lhs, rhs in lemma21_sides(quiver, policy):
        if lhs != rhs:
            return Verdict.counterexample(d, lhs, rhs)
    return Verdict.ok()


def lemma21_sides(
    quiver: Quiver, policy: TruncationPolicy
) -> Iterator[tuple[DimVector, QHalfRational, QHalfRational]]:
    for d in policy.region():
        lhs = coefficient_A(quiver, d)
        rhs = s_power(-d.total()) * coefficient_P_EKL(quiver, d).invert_s()
        yield d, lhs, rhs


def substitute_vertex(
    series: MotivicSeries,
    v: VertexId,
    image: DimVector,
    s_shift: int,
    target: Quiver,
    policy: TruncationPolicy,
) -> MotivicSeries:
    """Substitute the monomial x_v -> s^{s_shift} * x^{image} into a series.

    A source term at dimension vector e with e_v = k lands on the target
    vector (e minus v) + k*image with an extra factor s^{k*s_shift};
    coefficients landing on the same point are added.  Every vertex of the
    source other than v must be a vertex of the target, and the source
    region must cover every fibre of every target-region point, otherwise
    a CoverageError is raised.
    """
    source = series.quiver
    if not source.has_vertex(v):
        raise ValueError(f"{v!r} is not a vertex of {source.name!r}")
    if image.quiver != target:
        raise InvalidDimVectorError("image must be a dimension vector on the target")
    if policy.quiver != target:
        raise ValueError("output policy must belong to the target quiver")
    kept = [u for u in source.vertices if u != v]
    for u in kept:
        if not target.has_vertex(u):
            raise ValueError(f"source vertex {u!r} does not embed into {target.name!r}")
    kept_set = set(kept)
    extra = [u for u in target.vertices if u not in kept_set]
    image_is_zero = image.total() == 0

    out: dict[DimVector, QHalfRational] = {}
    for dt in policy.region():
        if image_is_zero:
            if all(dt[u] == 0 for u in extra):
                raise CoverageError(
                    f"substitution image is zero; fibre over {format_dim(dt)} is infinite"
                )
            out[dt] = QHalfRational(0)
            continue
        kbound = min(dt[u] // image[u] for u in target.vertices if image[u] > 0)
        acc = QHalfRational(0)
        for k in range(kbound + 1):
            if any(dt[u] - k * image[u] != 0 for u in extra):
                continue
            e = DimVector(source, {**{u: dt[u] - k * image[u] for u in kept}, v: k})
            if not series.policy.contains(e):
                raise CoverageError(
                    f"source region misses {format_dim(e)} needed for "
                    f"target point {format_dim(dt)}"
                )
            acc = acc + s_power(k * s_shift) * series.coefficient(e)
        out[dt] = acc
    return MotivicSeries(target, policy, out)


def series_eq(a: MotivicSeries, b: MotivicSeries) -> Verdict:
    """Pointwise canonical equality; first mismatch in deterministic order."""
    if a.quiver != b.quiver or a.policy != b.policy:
        raise IncomparableSeriesError("series have different quivers or policies")
    for (d, ca), (_, cb) in zip(a.items(), b.items()):
        if ca != cb:
            return Verdict.counterexample(d, ca, cb)
    return Verdict.ok()


def expand_even_nonnegative(x: QHalfRational, order: int = 40) -> bool:
    """True iff the expansion up to ``order`` has only even exponents with
    non-negative coefficients."""
    return all(e % 2 == 0 and c >= 0 for e, c in laurent_expand(x, order))
