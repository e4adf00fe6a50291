"""The table ``f(i, j) = min{k : x1^i x2^j x3^k in I}`` and its triangle diagrams."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from .ideals import MonomialIdeal, minimalize

INF = math.inf
Value = Union[int, float]


class TableError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FTable:
    """Values of ``f`` on rows ``0..max_row`` (row ``n`` holds ``i + j = n``).

    Past ``max_row`` a value is the minimum over the cells of row ``max_row``
    that divide ``x1^i x2^j``; for a table read off a monomial ideal whose
    generators sit in rows ``<= max_row`` this is exact.  Diagrams drawn with
    the "everything below the picture is in the ideal" convention end in an
    all-zero row, so the extension is zero there.
    """

    max_row: int
    entries: Dict[Tuple[int, int], Value]

    def __post_init__(self):
        for n in range(self.max_row + 1):
            for i in range(n + 1):
                if (i, n - i) not in self.entries:
                    raise TableError(f"missing entry f({i},{n - i})")
                v = self.entries[(i, n - i)]
                if v != INF and (v < 0 or v != int(v)):
                    raise TableError(f"f({i},{n - i}) = {v} is not in N or infinity")

    def __call__(self, i: int, j: int) -> Value:
        if i < 0 or j < 0:
            raise IndexError("negative position")
        if i + j <= self.max_row:
            return self.entries[(i, j)]
        d = self.max_row
        return min(self.entries[(a, d - a)] for a in range(max(0, d - j), min(i, d) + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FTable):
            return NotImplemented
        top = max(self.max_row, other.max_row) + 1
        return all(self(i, n - i) == other(i, n - i) for n in range(top + 1) for i in range(n + 1))

    def __hash__(self):
        return hash(tuple(self.row(n) for n in range(self.max_row + 1)))

    def row(self, n: int) -> List[Value]:
        """Row ``n`` left to right: positions ``(n, 0), (n-1, 1), ..., (0, n)``."""
        return [self(n - c, c) for c in range(n + 1)]

    def positions(self) -> Iterator[Tuple[int, int]]:
        for n in range(self.max_row + 1):
            for c in range(n + 1):
                yield n - c, c

    def finite_values(self) -> List[int]:
        return [int(v) for v in self.entries.values() if v != INF]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Value]]) -> "FTable":
        """Build from explicit rows, row ``n`` listed left to right as in a diagram."""
        entries = {}
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise TableError(f"row {n} has {len(row)} cells, expected {n + 1}")
            for c, v in enumerate(row):
                entries[(n - c, c)] = INF if v in (None, "o", INF) else (0 if v == "X" else int(v))
        return cls(len(rows) - 1, entries)

    @classmethod
    def from_diagram(cls, rows: Sequence[Sequence[Value]]) -> "FTable":
        """Like :meth:`from_rows`, with everything below the drawing in the ideal."""
        rows = list(rows) + [[0] * (len(rows) + 1)]
        return cls.from_rows(rows)

    def monotonicity_violations(self) -> List[Tuple[int, int]]:
        """Positions where ``f(i, j+1) <= f(i, j)`` or ``f(i+1, j) <= f(i, j)`` fails."""
        bad = []
        for i, j in self.positions():
            v = self(i, j)
            if self(i, j + 1) > v or self(i + 1, j) > v:
                bad.append((i, j))
        return bad

    def to_ideal(self) -> MonomialIdeal:
        gens = [(i, j, int(self(i, j))) for i, j in self.positions() if self(i, j) != INF]
        return minimalize(gens, 3)

    def colon(self, a: int) -> "FTable":
        """Table of ``(I : x3^a)``: every finite value drops by ``a``, floored at zero."""
        if a < 0:
            raise ValueError("colon exponent must be non-negative")
        return FTable(self.max_row, {p: (v if v == INF else max(int(v) - a, 0))
                                     for p, v in self.entries.items()})

    def to_json(self) -> dict:
        return {
            "max_row": self.max_row,
            "rows": [[None if v == INF else int(v) for v in self.row(n)]
                     for n in range(self.max_row + 1)],
        }


def f_table(ideal: MonomialIdeal, max_row: int | None = None) -> FTable:
    if ideal.num_vars != 3:
        raise TableError(f"f-tables need 3 variables, got {ideal.num_vars}")
    if max_row is None:
        # generators never sit below row max(i + j), so the extension is exact
        max_row = max((a + b for a, b, _ in ideal.gens), default=0)
    entries = {}
    for n in range(max_row + 1):
        for i in range(n + 1):
            j = n - i
            best = INF
            for a, b, c in ideal.gens:
                if a <= i and b <= j and c < best:
                    best = c
            entries[(i, j)] = best
    return FTable(max_row, entries)


def cell_glyph(v: Value) -> str:
    if v == INF:
        return "o"
    if v == 0:
        return "X"
    return str(int(v))


def render_ascii(table: FTable, n0: int | None = None) -> str:
    """Rows ``0..n0``, apex first, each row centred under the apex."""
    if n0 is None:
        n0 = table.max_row
    if n0 < 0:
        raise ValueError("n0 must be non-negative")
    glyphs = [[cell_glyph(v) for v in table.row(n)] for n in range(n0 + 1)]
    width = max(len(g) for row in glyphs for g in row)
    lines = []
    for n, row in enumerate(glyphs):
        indent = (n0 - n) * (width + 1) // 2
        lines.append(" " * indent + " ".join(g.rjust(width) for g in row))
    return "\n".join(lines) + "\n"


# fixed lattice geometry so SVG output diffs cleanly
SVG_DX = 30
SVG_DY = 26
SVG_R = 12


def render_svg(table: FTable, n0: int | None = None) -> str:
    if n0 is None:
        n0 = table.max_row
    if n0 < 0:
        raise ValueError("n0 must be non-negative")
    width = (n0 + 2) * SVG_DX
    height = (n0 + 2) * SVG_DY
    apex_x = width / 2
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        '<g font-family="monospace" font-size="14" text-anchor="middle" '
        'dominant-baseline="central" fill="none" stroke="black">',
    ]
    for n in range(n0 + 1):
        y = SVG_DY * (n + 1)
        for c, v in enumerate(table.row(n)):
            x = apex_x + SVG_DX * (c - n / 2)
            i, j = n - c, c
            if v == 0:
                out.append(f'<text x="{x:g}" y="{y:g}" stroke="none" fill="black" '
                           f'data-i="{i}" data-j="{j}">X</text>')
                continue
            out.append(f'<circle cx="{x:g}" cy="{y:g}" r="{SVG_R}" data-i="{i}" data-j="{j}"/>')
            if v != INF:
                out.append(f'<text x="{x:g}" y="{y:g}" stroke="none" fill="black">{int(v)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_diagram(table: FTable, n0: int | None = None, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(table, n0)
    if fmt == "svg":
        return render_svg(table, n0)
    raise ValueError(f"unknown diagram format {fmt!r}")
