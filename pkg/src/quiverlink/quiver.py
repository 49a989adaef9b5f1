"""Quivers, dimension vectors and the Euler pairing.

A quiver is a finite directed multigraph; loops and parallel arrows are
allowed.  Vertices and arrow labels are opaque strings, and the order of
the vertex list fixes matrix row/column order and every serialization
order downstream.  All values here are immutable after construction.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

VertexId = str
ArrowLabel = str

IDENTIFIER_RE = re.compile(r"[A-Za-z0-9_^.*]+\Z")


class InvalidDimVectorError(ValueError):
    """A dimension vector does not live on the expected quiver."""


class PointerError(ValueError):
    """A two-cycle or vertex-pair pointer is invalid on its quiver."""


class Arrow:
    """A labelled arrow ``source -> target``."""

    __slots__ = ("label", "source", "target")

    def __init__(self, label: ArrowLabel, source: VertexId, target: VertexId):
        self.label = label
        self.source = source
        self.target = target

    def __eq__(self, other):
        return (
            isinstance(other, Arrow)
            and self.label == other.label
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self):
        return hash((self.label, self.source, self.target))

    def __repr__(self):
        return f"Arrow({self.label!r}, {self.source!r}, {self.target!r})"


def _check_identifier(kind: str, name: str) -> None:
    if not IDENTIFIER_RE.match(name):
        raise ValueError(f"invalid {kind} identifier {name!r}")


class Quiver:
    """A named quiver with an ordered vertex list and an arrow list."""

    __slots__ = ("name", "vertices", "arrows", "_index", "_arrows_by_label", "_hash")

    def __init__(
        self,
        name: str,
        vertices: Iterable[VertexId],
        arrows: Iterable[Arrow | tuple[ArrowLabel, VertexId, VertexId]],
    ):
        _check_identifier("quiver", name)
        self.name = name
        self.vertices = tuple(vertices)
        self.arrows = tuple(
            a if isinstance(a, Arrow) else Arrow(*a) for a in arrows
        )

        index: dict[VertexId, int] = {}
        for v in self.vertices:
            _check_identifier("vertex", v)
            if v in index:
                raise ValueError(f"duplicate vertex id {v!r}")
            index[v] = len(index)
        self._index = index

        by_label: dict[ArrowLabel, Arrow] = {}
        for a in self.arrows:
            _check_identifier("arrow", a.label)
            if a.label in by_label:
                raise ValueError(f"duplicate arrow label {a.label!r}")
            if a.source not in index:
                raise ValueError(f"arrow {a.label!r} has unknown source {a.source!r}")
            if a.target not in index:
                raise ValueError(f"arrow {a.label!r} has unknown target {a.target!r}")
            by_label[a.label] = a
        self._arrows_by_label = by_label
        self._hash = hash((self.name, self.vertices, self.arrows))

    def index(self, v: VertexId) -> int:
        return self._index[v]

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._index

    def arrow(self, label: ArrowLabel) -> Arrow | None:
        return self._arrows_by_label.get(label)

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.name == other.name
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Quiver({self.name!r}, |Q0|={len(self.vertices)}, |Q1|={len(self.arrows)})"


class DimVector:
    """Non-negative integer grades, total on the owning quiver's vertex set."""

    __slots__ = ("quiver", "counts", "_hash")

    def __init__(self, quiver: Quiver, entries: Mapping[VertexId, int] | None = None):
        counts = [0] * len(quiver.vertices)
        if entries:
            for v, c in entries.items():
                if not quiver.has_vertex(v):
                    raise InvalidDimVectorError(
                        f"vertex {v!r} is not in quiver {quiver.name!r}"
                    )
                if c < 0:
                    raise InvalidDimVectorError(f"negative entry {c} at vertex {v!r}")
                counts[quiver.index(v)] = c
        self.quiver = quiver
        self.counts = tuple(counts)
        self._hash = hash((quiver._hash, self.counts))

    @classmethod
    def _from_counts(cls, quiver: Quiver, counts: tuple[int, ...]) -> DimVector:
        d = object.__new__(cls)
        d.quiver = quiver
        d.counts = counts
        d._hash = hash((quiver._hash, counts))
        return d

    @classmethod
    def zero(cls, quiver: Quiver) -> DimVector:
        return cls._from_counts(quiver, (0,) * len(quiver.vertices))

    @classmethod
    def unit(cls, quiver: Quiver, v: VertexId) -> DimVector:
        return cls(quiver, {v: 1})

    def __getitem__(self, v: VertexId) -> int:
        return self.counts[self.quiver.index(v)]

    def as_dict(self) -> dict[VertexId, int]:
        return dict(zip(self.quiver.vertices, self.counts))

    def total(self) -> int:
        return sum(self.counts)

    def __add__(self, other: DimVector) -> DimVector:
        if other.quiver != self.quiver:
            raise InvalidDimVectorError("cannot add vectors on different quivers")
        return DimVector._from_counts(
            self.quiver, tuple(a + b for a, b in zip(self.counts, other.counts))
        )

    def scale(self, k: int) -> DimVector:
        if k < 0:
            raise InvalidDimVectorError("negative scalar for a dimension vector")
        return DimVector._from_counts(self.quiver, tuple(k * c for c in self.counts))

    def __eq__(self, other):
        return (
            isinstance(other, DimVector)
            and self.counts == other.counts
            and self.quiver == other.quiver
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"DimVector({self.as_dict()!r})"


def format_dim(d: DimVector) -> str:
    """Render a dimension vector as comma-joined ``vertex:count`` pairs."""
    if not d.quiver.vertices:
        return "-"
    return ",".join(f"{v}:{c}" for v, c in zip(d.quiver.vertices, d.counts))


class TwoCyclePointer:
    """A chosen pair of opposite arrows ``c: v0 -> v1`` and ``d: v1 -> v0``."""

    __slots__ = ("c", "d", "v0", "v1")

    def __init__(self, c: ArrowLabel, d: ArrowLabel, v0: VertexId, v1: VertexId):
        if v0 == v1:
            raise PointerError("two-cycle endpoints must be distinct")
        if c == d:
            raise PointerError("two-cycle arrows must be distinct")
        self.c = c
        self.d = d
        self.v0 = v0
        self.v1 = v1

    @classmethod
    def locate(cls, quiver: Quiver, c: ArrowLabel, d: ArrowLabel) -> TwoCyclePointer:
        """Build a pointer from two arrow labels, inferring the endpoints."""
        ca = quiver.arrow(c)
        da = quiver.arrow(d)
        if ca is None:
            raise PointerError(f"{c!r} is not an arrow of {quiver.name!r}")
        if da is None:
            raise PointerError(f"{d!r} is not an arrow of {quiver.name!r}")
        p = cls(c, d, ca.source, ca.target)
        p.validate(quiver)
        return p

    def validate(self, quiver: Quiver) -> None:
        ca = quiver.arrow(self.c)
        da = quiver.arrow(self.d)
        if ca is None or (ca.source, ca.target) != (self.v0, self.v1):
            raise PointerError(f"{self.c!r} is not an arrow {self.v0!r} -> {self.v1!r}")
        if da is None or (da.source, da.target) != (self.v1, self.v0):
            raise PointerError(f"{self.d!r} is not an arrow {self.v1!r} -> {self.v0!r}")

    def __eq__(self, other):
        return (
            isinstance(other, TwoCyclePointer)
            and (self.c, self.d, self.v0, self.v1) == (other.c, other.d, other.v0, other.v1)
        )

    def __hash__(self):
        return hash((self.c, self.d, self.v0, self.v1))

    def __repr__(self):
        return f"TwoCyclePointer(c={self.c!r}, d={self.d!r}, v0={self.v0!r}, v1={self.v1!r})"


class VertexPairPointer:
    """A distinguished ordered pair of distinct vertices."""

    __slots__ = ("v0", "v1")

    def __init__(self, v0: VertexId, v1: VertexId):
        if v0 == v1:
            raise PointerError("pair vertices must be distinct")
        self.v0 = v0
        self.v1 = v1

    def validate(self, quiver: Quiver) -> None:
        for v in (self.v0, self.v1):
            if not quiver.has_vertex(v):
                raise PointerError(f"vertex {v!r} is not in quiver {quiver.name!r}")

    def __eq__(self, other):
        return isinstance(other, VertexPairPointer) and (self.v0, self.v1) == (other.v0, other.v1)

    def __hash__(self):
        return hash((self.v0, self.v1))

    def __repr__(self):
        return f"VertexPairPointer({self.v0!r}, {self.v1!r})"


def _require_on(quiver: Quiver, d: DimVector) -> None:
    if d.quiver != quiver:
        raise InvalidDimVectorError(
            f"dimension vector lives on {d.quiver.name!r}, expected {quiver.name!r}"
        )


def euler_form(quiver: Quiver, d1: DimVector, d2: DimVector) -> int:
    """Euler pairing: sum_i d1_i d2_i minus, per arrow a: i -> j, d1_j d2_i."""
    _require_on(quiver, d1)
    _require_on(quiver, d2)
    total = sum(a * b for a, b in zip(d1.counts, d2.counts))
    idx = quiver._index
    c1 = d1.counts
    c2 = d2.counts
    for a in quiver.arrows:
        total -= c1[idx[a.target]] * c2[idx[a.source]]
    return total


def adjacency_matrix(quiver: Quiver) -> tuple[tuple[int, ...], ...]:
    """Entry (i, j) counts the arrows with source i and target j."""
    n = len(quiver.vertices)
    m = [[0] * n for _ in range(n)]
    idx = quiver._index
    for a in quiver.arrows:
        m[idx[a.source]][idx[a.target]] += 1
    return tuple(tuple(row) for row in m)


def is_symmetric(quiver: Quiver) -> bool:
    m = adjacency_matrix(quiver)
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def moduli_dim(quiver: Quiver, d: DimVector) -> int:
    """Dimension of the representation moduli stack, minus the Euler square."""
    return -euler_form(quiver, d, d)
