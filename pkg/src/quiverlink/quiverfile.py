"""Plain-text quiver documents.

Grammar, one declaration per line:

    # comment
    quiver <name>
    vertex <id>
    arrow <label> <src> <tgt>
    twocycle <c-label> <d-label>
    pair <v0> <v1>

Identifiers match ``[A-Za-z0-9_^.*]+``.  Exactly one ``quiver`` line is
required and must come first; vertices must be declared before the arrows
that use them.  The optional pointer lines name a distinguished 2-cycle or
vertex pair and may appear at most once each.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .quiver import (
    IDENTIFIER_RE,
    Arrow,
    PointerError,
    Quiver,
    TwoCyclePointer,
    VertexPairPointer,
)


class QuiverParseError(ValueError):
    """A syntax or semantic error in a quiver document, with its position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class QuiverDocument:
    quiver: Quiver
    twocycle: TwoCyclePointer | None = None
    pair: VertexPairPointer | None = None


def _fields(raw: str, lineno: int) -> list[tuple[str, int]]:
    """Split a line into (token, 1-based column) pairs, dropping comments."""
    if "#" in raw:
        raw = raw[: raw.index("#")]
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", raw)]


def _ident(tok: str, col: int, lineno: int, kind: str) -> str:
    if not IDENTIFIER_RE.match(tok):
        raise QuiverParseError(lineno, col, f"invalid {kind} identifier {tok!r}")
    return tok


def parse_quiver(text: str) -> QuiverDocument:
    """Parse a document, rejecting malformed lines with positions."""
    name: str | None = None
    vertices: list[str] = []
    vertex_set: set[str] = set()
    arrows: list[Arrow] = []
    labels: dict[str, Arrow] = {}
    twocycle: TwoCyclePointer | None = None
    pair: VertexPairPointer | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = _fields(raw, lineno)
        if not fields:
            continue
        keyword, kcol = fields[0]
        args = fields[1:]

        if keyword == "quiver":
            if name is not None:
                raise QuiverParseError(lineno, kcol, "duplicate quiver line")
            if len(args) != 1:
                raise QuiverParseError(lineno, kcol, "expected: quiver <name>")
            name = _ident(*args[0], lineno, "quiver")
            continue
        if name is None:
            raise QuiverParseError(lineno, kcol, "the quiver line must come first")

        if keyword == "vertex":
            if len(args) != 1:
                raise QuiverParseError(lineno, kcol, "expected: vertex <id>")
            v = _ident(*args[0], lineno, "vertex")
            if v in vertex_set:
                raise QuiverParseError(lineno, args[0][1], f"duplicate vertex {v!r}")
            vertex_set.add(v)
            vertices.append(v)
        elif keyword == "arrow":
            if len(args) != 3:
                raise QuiverParseError(lineno, kcol, "expected: arrow <label> <src> <tgt>")
            label = _ident(*args[0], lineno, "arrow")
            src = _ident(*args[1], lineno, "vertex")
            tgt = _ident(*args[2], lineno, "vertex")
            if label in labels:
                raise QuiverParseError(lineno, args[0][1], f"duplicate arrow label {label!r}")
            if src not in vertex_set:
                raise QuiverParseError(lineno, args[1][1], f"unknown vertex {src!r}")
            if tgt not in vertex_set:
                raise QuiverParseError(lineno, args[2][1], f"unknown vertex {tgt!r}")
            a = Arrow(label, src, tgt)
            labels[label] = a
            arrows.append(a)
        elif keyword == "twocycle":
            if len(args) != 2:
                raise QuiverParseError(lineno, kcol, "expected: twocycle <c> <d>")
            if twocycle is not None:
                raise QuiverParseError(lineno, kcol, "duplicate twocycle line")
            c, ccol = args[0]
            d, dcol = args[1]
            ca = labels.get(c)
            da = labels.get(d)
            if ca is None:
                raise QuiverParseError(lineno, ccol, f"unknown arrow {c!r}")
            if da is None:
                raise QuiverParseError(lineno, dcol, f"unknown arrow {d!r}")
            try:
                twocycle = TwoCyclePointer(c, d, ca.source, ca.target)
                if (da.source, da.target) != (ca.target, ca.source):
                    raise PointerError(f"{c!r} and {d!r} do not form a 2-cycle")
            except PointerError as exc:
                raise QuiverParseError(lineno, ccol, str(exc)) from None
        elif keyword == "pair":
            if len(args) != 2:
                raise QuiverParseError(lineno, kcol, "expected: pair <v0> <v1>")
            if pair is not None:
                raise QuiverParseError(lineno, kcol, "duplicate pair line")
            v0, c0 = args[0]
            v1, c1 = args[1]
            if v0 not in vertex_set:
                raise QuiverParseError(lineno, c0, f"unknown vertex {v0!r}")
            if v1 not in vertex_set:
                raise QuiverParseError(lineno, c1, f"unknown vertex {v1!r}")
            try:
                pair = VertexPairPointer(v0, v1)
            except PointerError as exc:
                raise QuiverParseError(lineno, c0, str(exc)) from None
        else:
            raise QuiverParseError(lineno, kcol, f"unknown declaration {keyword!r}")

    if name is None:
        raise QuiverParseError(1, 1, "missing quiver line")
    return QuiverDocument(Quiver(name, vertices, arrows), twocycle, pair)


def serialize_quiver(doc: QuiverDocument) -> str:
    """Canonical rendering; round-trips through parse_quiver."""
    q = doc.quiver
    lines = [f"quiver {q.name}"]
    lines.extend(f"vertex {v}" for v in q.vertices)
    lines.extend(f"arrow {a.label} {a.source} {a.target}" for a in q.arrows)
    if doc.twocycle is not None:
        lines.append(f"twocycle {doc.twocycle.c} {doc.twocycle.d}")
    if doc.pair is not None:
        lines.append(f"pair {doc.pair.v0} {doc.pair.v1}")
    return "\n".join(lines) + "\n"
