"""The three quiver constructions: unlinking, linking, and adding a 2-cycle.

Unlinking removes a chosen 2-cycle (c, d) and adds a fresh vertex (named
``star``, then ``star2``, ...) carrying decorated copies of the remaining
arrows; the arrow c survives only as a loop at the new vertex and d is
removed outright.  Linking adds a fresh 2-cycle between a chosen vertex
pair together with a fresh vertex (``square``, ...) and its decorated
copies.  Generated labels are mechanical suffix appends on the source
label: ``a_<v>`` redirects the target to the new vertex v, ``a^<v>`` the
source, ``a^<v>_<v>`` both, which keeps labels collision-free when the
constructions are iterated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .quiver import (
    Arrow,
    ArrowLabel,
    DimVector,
    InvalidDimVectorError,
    Quiver,
    TwoCyclePointer,
    VertexId,
    VertexPairPointer,
)


@dataclass(frozen=True, eq=False)
class MutationResult:
    """A constructed quiver plus the bookkeeping of where its arrows came from."""

    kind: str  # "unlink" | "link" | "twocycle"
    quiver: Quiver
    source: Quiver
    pointer: TwoCyclePointer | VertexPairPointer
    new_vertex: VertexId | None
    distinguished: TwoCyclePointer | None
    label_map: Mapping[ArrowLabel, tuple[ArrowLabel, ...]] = field(repr=False)

    def label_map_lines(self) -> str:
        """Serialize the label map, one ``src -> copies`` line per source arrow."""
        return "".join(
            f"{a.label} -> {','.join(self.label_map[a.label])}\n"
            for a in self.source.arrows
        )


def _fresh_vertex(base: str, taken) -> str:
    if base not in taken:
        return base
    n = 2
    while f"{base}{n}" in taken:
        n += 1
    return f"{base}{n}"


def _copies(a: Arrow, pair: set[VertexId], star: VertexId) -> list[Arrow]:
    """Decorated copies of an ordinary arrow under unlinking/linking."""
    i_in = a.source in pair
    j_in = a.target in pair
    out = [a]
    if i_in:
        out.append(Arrow(f"{a.label}^{star}", star, a.target))
    if j_in:
        out.append(Arrow(f"{a.label}_{star}", a.source, star))
    if i_in and j_in:
        out.append(Arrow(f"{a.label}^{star}_{star}", star, star))
    return out


def unlink(quiver: Quiver, tc: TwoCyclePointer) -> MutationResult:
    """Unlink a quiver at a chosen 2-cycle, creating the vertex ``star``."""
    tc.validate(quiver)
    star = _fresh_vertex("star", quiver._index)
    pair = {tc.v0, tc.v1}
    arrows: list[Arrow] = []
    label_map: dict[ArrowLabel, tuple[ArrowLabel, ...]] = {}
    for a in quiver.arrows:
        if a.label == tc.c:
            loop = Arrow(f"{a.label}^{star}_{star}", star, star)
            arrows.append(loop)
            label_map[a.label] = (loop.label,)
        elif a.label == tc.d:
            label_map[a.label] = ()
        else:
            copies = _copies(a, pair, star)
            arrows.extend(copies)
            label_map[a.label] = tuple(c.label for c in copies)
    out = Quiver(f"{quiver.name}^U", quiver.vertices + (star,), arrows)
    return MutationResult(
        kind="unlink",
        quiver=out,
        source=quiver,
        pointer=tc,
        new_vertex=star,
        distinguished=None,
        label_map=label_map,
    )


def link(quiver: Quiver, p: VertexPairPointer) -> MutationResult:
    """Link a quiver at a vertex pair, creating the vertex ``square``.

    The fresh 2-cycle is alpha: v0 -> v1, beta: v1 -> v0.  The returned
    distinguished pointer is oriented as (c, d) = (beta, alpha), so that
    unlinking the result at it leaves the loop named from beta, matching
    the labelling of the combined construction.
    """
    p.validate(quiver)
    square = _fresh_vertex("square", quiver._index)
    alpha = Arrow(f"alpha_{square}", p.v0, p.v1)
    beta = Arrow(f"beta_{square}", p.v1, p.v0)
    pair = {p.v0, p.v1}
    arrows: list[Arrow] = [alpha, beta]
    label_map: dict[ArrowLabel, tuple[ArrowLabel, ...]] = {}
    for a in quiver.arrows:
        copies = _copies(a, pair, square)
        arrows.extend(copies)
        label_map[a.label] = tuple(c.label for c in copies)
    out = Quiver(f"{quiver.name}^L", quiver.vertices + (square,), arrows)
    return MutationResult(
        kind="link",
        quiver=out,
        source=quiver,
        pointer=p,
        new_vertex=square,
        distinguished=TwoCyclePointer(c=beta.label, d=alpha.label, v0=p.v1, v1=p.v0),
        label_map=label_map,
    )


def add_twocycle(quiver: Quiver, p: VertexPairPointer) -> MutationResult:
    """Append a fresh 2-cycle c: v0 -> v1, d: v1 -> v0; no new vertex."""
    p.validate(quiver)
    taken = quiver._arrows_by_label
    n = 1
    while True:
        c_label = "c" if n == 1 else f"c{n}"
        d_label = "d" if n == 1 else f"d{n}"
        if c_label not in taken and d_label not in taken:
            break
        n += 1
    arrows = list(quiver.arrows)
    arrows.append(Arrow(c_label, p.v0, p.v1))
    arrows.append(Arrow(d_label, p.v1, p.v0))
    out = Quiver(f"{quiver.name}^T", quiver.vertices, arrows)
    return MutationResult(
        kind="twocycle",
        quiver=out,
        source=quiver,
        pointer=p,
        new_vertex=None,
        distinguished=TwoCyclePointer(c=c_label, d=d_label, v0=p.v0, v1=p.v1),
        label_map={a.label: (a.label,) for a in quiver.arrows},
    )


def _require_unlink(res: MutationResult) -> None:
    if res.kind != "unlink":
        raise ValueError(f"expected an unlink result, got {res.kind!r}")


def dim_map_u(res: MutationResult, e: DimVector) -> DimVector:
    """Collapse a dimension vector on the unlinked quiver back to the source.

    The new-vertex entry is added onto both distinguished endpoints; other
    entries are copied.
    """
    _require_unlink(res)
    if e.quiver != res.quiver:
        raise InvalidDimVectorError("vector does not live on the unlinked quiver")
    tc = res.pointer
    ell = e[res.new_vertex]
    entries = {v: e[v] for v in res.source.vertices}
    entries[tc.v0] += ell
    entries[tc.v1] += ell
    return DimVector(res.source, entries)


def fibre_u(res: MutationResult, d: DimVector) -> list[DimVector]:
    """All unlinked-quiver vectors mapping to d, ascending in the new-vertex entry."""
    _require_unlink(res)
    if d.quiver != res.source:
        raise InvalidDimVectorError("vector does not live on the source quiver")
    tc = res.pointer
    out = []
    for ell in range(min(d[tc.v0], d[tc.v1]) + 1):
        entries = {v: d[v] for v in res.source.vertices}
        entries[tc.v0] -= ell
        entries[tc.v1] -= ell
        entries[res.new_vertex] = ell
        out.append(DimVector(res.quiver, entries))
    return out
