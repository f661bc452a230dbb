"""Tableaux, the four insertion procedures, their inverses, transpose and evacuation.

Rows are stored as tuples of symbol codes (see :mod:`schurweyl.symbols`);
cells are addressed 1-based.

Every insertion is described by a *variant* naming which symbols bump
strictly (leftmost entry ``> x``) and which bump weakly (leftmost ``>= x``):

=============  ===========================  ==================================
variant        row symbols ``i``            column symbols ``j*``
=============  ===========================  ==================================
``row``        strict (ordinary RSK)        not allowed
``dual``       weak (RSK*)                  not allowed
``mixed``      strict                       weak
``mixed_dual`` weak                         strict
=============  ===========================  ==================================
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import diagrams as dg
from .diagrams import Cell, Diagram
from .errors import (InvalidCornerError, InvalidSymbolError, ParseError, ShapeError,
                     TableauKindError)
from .symbols import alphabet, format_symbol, index, is_starred, parse_symbol

VARIANTS = ("row", "dual", "mixed", "mixed_dual")
EMPTY_TEXT = "∅"


@dataclass(frozen=True, slots=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if any(len(r) == 0 for r in rows):
            raise ShapeError("tableau rows must be nonempty")
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise ShapeError(f"row lengths not weakly decreasing: {[len(r) for r in rows]}")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Diagram:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, cell: tuple[int, int]) -> int:
        r, c = cell
        if r < 1 or c < 1:
            raise IndexError(cell)
        return self.rows[r - 1][c - 1]

    def __iter__(self) -> Iterator[tuple[Cell, int]]:
        for i, row in enumerate(self.rows, 1):
            for j, x in enumerate(row, 1):
                yield Cell(i, j), x

    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def transpose(self) -> "Tableau":
        return transpose(self)

    def to_text(self) -> str:
        return to_text(self)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Tableau({to_text(self)!r})"


EMPTY = Tableau()


def tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows))


# -- serialisation -----------------------------------------------------------

def to_text(t: Tableau) -> str:
    if not t.rows:
        return EMPTY_TEXT
    return "/".join(",".join(format_symbol(x) for x in row) for row in t.rows)


def from_text(text: str) -> Tableau:
    s = text.strip()
    if s in ("", EMPTY_TEXT):
        return EMPTY
    try:
        return tableau([parse_symbol(x) for x in row.split(",")] for row in s.split("/"))
    except ShapeError as exc:
        raise ParseError(f"bad tableau {text!r}: {exc}") from exc


# -- kind predicates ---------------------------------------------------------

def _columns(t: Tableau) -> list[tuple[int, ...]]:
    heights = dg.conjugate(t.shape)
    return [tuple(row[j] for row in t.rows[:h]) for j, h in enumerate(heights)]


def is_standard(t: Tableau) -> bool:
    n = t.size
    if sorted(t.entries()) != list(range(1, n + 1)):
        return False
    return all(r[i] < r[i + 1] for r in t.rows for i in range(len(r) - 1)) and \
        all(c[i] < c[i + 1] for c in _columns(t) for i in range(len(c) - 1))


def is_semistandard(t: Tableau, k: int | None = None) -> bool:
    ents = t.entries()
    if any(is_starred(x) or x < 1 or (k is not None and x > k) for x in ents):
        return False
    return all(r[i] <= r[i + 1] for r in t.rows for i in range(len(r) - 1)) and \
        all(c[i] < c[i + 1] for c in _columns(t) for i in range(len(c) - 1))


def is_dual_semistandard(t: Tableau, k: int | None = None) -> bool:
    return is_semistandard(transpose(t), k)


def _weak_ok(a: int, b: int, repeat_starred: bool) -> bool:
    # a precedes b along a line; equal entries are allowed only for the
    # symbol family that may repeat along that line
    if a < b:
        return True
    if a > b:
        return False
    return is_starred(a) == repeat_starred


def is_hook_semistandard(t: Tableau, k: int | None = None, l: int | None = None) -> bool:
    """(k, l)-semistandard: rows and columns weakly increase, row symbols
    strictly down columns, column symbols strictly along rows."""
    for x in t.entries():
        if is_starred(x):
            if l is not None and index(x) > l:
                return False
        elif x < 1 or (k is not None and x > k):
            return False
    rows_ok = all(_weak_ok(r[i], r[i + 1], repeat_starred=False) for r in t.rows for i in range(len(r) - 1))
    cols_ok = all(_weak_ok(c[i], c[i + 1], repeat_starred=True) for c in _columns(t) for i in range(len(c) - 1))
    return rows_ok and cols_ok


def is_hook_dual(t: Tableau, k: int | None = None, l: int | None = None) -> bool:
    """Transpose of a (k, l)-semistandard tableau; the P tableau of the mixed dual RSK."""
    return is_hook_semistandard(transpose(t), k, l)


# -- insertion ---------------------------------------------------------------

def _strict(x: int, variant: str) -> bool:
    if variant == "row":
        return True
    if variant == "dual":
        return False
    if variant == "mixed":
        return not is_starred(x)
    if variant == "mixed_dual":
        return is_starred(x)
    raise ValueError(f"unknown insertion variant {variant!r}")


def _check_variant_symbol(x: int, variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"unknown insertion variant {variant!r}")
    if variant in ("row", "dual") and is_starred(x):
        raise InvalidSymbolError(f"{variant} insertion accepts row symbols only, got {format_symbol(x)}")
    if x < 1:
        raise InvalidSymbolError(f"not a symbol: {x}")


def bump_rows(rows: list[list[int]], x: int, variant: str) -> Cell:
    """Insert ``x`` into mutable ``rows`` in place; return the new cell."""
    r = 0
    while r < len(rows):
        row = rows[r]
        j = bisect_right(row, x) if _strict(x, variant) else bisect_left(row, x)
        if j == len(row):
            row.append(x)
            return Cell(r + 1, len(row))
        row[j], x = x, row[j]
        r += 1
    rows.append([x])
    return Cell(len(rows), 1)


def unbump_rows(rows: list[list[int]], cell: tuple[int, int], variant: str) -> int:
    """Reverse bumping from corner ``cell`` in place; return the ejected symbol."""
    r, c = cell
    if not dg.is_corner(tuple(len(x) for x in rows), (r, c)):
        raise InvalidCornerError(f"{tuple(cell)} is not a corner of shape {tuple(len(x) for x in rows)}")
    x = rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop()
    for i in range(r - 2, -1, -1):
        row = rows[i]
        # the entry that bumped x: rightmost < x (strict) or rightmost <= x (weak)
        j = (bisect_left(row, x) if _strict(x, variant) else bisect_right(row, x)) - 1
        if j < 0:
            raise TableauKindError(f"reverse {variant} insertion failed: tableau has the wrong kind")
        row[j], x = x, row[j]
    return x


def insert(t: Tableau, x: int, variant: str = "row") -> tuple[Tableau, Cell]:
    _check_variant_symbol(x, variant)
    rows = [list(r) for r in t.rows]
    cell = bump_rows(rows, x, variant)
    return tableau(rows), cell


def reverse_insert(t: Tableau, cell: tuple[int, int], variant: str = "row") -> tuple[Tableau, int]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown insertion variant {variant!r}")
    rows = [list(r) for r in t.rows]
    x = unbump_rows(rows, cell, variant)
    return tableau(rows), x


def insert_row(t: Tableau, x: int) -> tuple[Tableau, Cell]:
    """Schensted row insertion: ``x`` bumps the leftmost entry strictly greater."""
    return insert(t, x, "row")


def insert_dual(t: Tableau, x: int) -> tuple[Tableau, Cell]:
    """Dual insertion: ``x`` bumps the leftmost entry greater than or equal to it."""
    return insert(t, x, "dual")


def insert_mixed(t: Tableau, x: int) -> tuple[Tableau, Cell]:
    return insert(t, x, "mixed")


def reverse_insert_row(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    return reverse_insert(t, cell, "row")


def reverse_insert_dual(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    return reverse_insert(t, cell, "dual")


def reverse_insert_mixed(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    return reverse_insert(t, cell, "mixed")


# -- transpose and evacuation --------------------------------------------------

def transpose(t: Tableau) -> Tableau:
    return tableau(_columns(t))


def _slide_out(grid: list[list[int | None]], shape: list[int]) -> Cell:
    """Jeu de taquin: push the hole at (1, 1) to an outer corner and drop it."""
    r, c = 0, 0
    while True:
        right = grid[r][c + 1] if c + 1 < shape[r] else None
        below = grid[r + 1][c] if r + 1 < len(shape) and c < shape[r + 1] else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[r][c] = right
            c += 1
        else:
            grid[r][c] = below
            r += 1
    grid[r].pop()
    shape[r] -= 1
    if shape[r] == 0:
        grid.pop()
        shape.pop()
    return Cell(r + 1, c + 1)


def evacuation(q: Tableau) -> Tableau:
    """Schutzenberger involution on standard tableaux."""
    if not is_standard(q):
        raise TableauKindError("evacuation needs a standard tableau")
    n = q.size
    grid: list[list[int | None]] = [list(r) for r in q.rows]
    shape = list(q.shape)
    out = [[0] * len(r) for r in q.rows]
    for step in range(n):
        r, c = _slide_out(grid, shape)
        out[r - 1][c - 1] = n - step
    return tableau(out)


# -- exhaustive generators used by tests and oracles ---------------------------

def standard_tableaux(lam: Sequence[int]) -> Iterator[Tableau]:
    lam = dg.diagram(lam)
    n = sum(lam)
    grid = [[0] * r for r in lam]

    def fill(v: int, filled: list[int]) -> Iterator[Tableau]:
        if v > n:
            yield tableau(grid)
            return
        for i in range(len(lam)):
            j = filled[i]
            if j < lam[i] and (i == 0 or filled[i - 1] > j):
                grid[i][j] = v
                filled[i] += 1
                yield from fill(v + 1, filled)
                filled[i] -= 1

    yield from fill(1, [0] * len(lam))


def semistandard_tableaux(lam: Sequence[int], k: int) -> Iterator[Tableau]:
    """All SSYT of shape ``lam`` with entries in ``1..k``, row-major backtracking."""
    yield from hook_semistandard_tableaux(lam, k, 0)


def hook_semistandard_tableaux(lam: Sequence[int], k: int, l: int) -> Iterator[Tableau]:
    """All (k, l)-semistandard tableaux of shape ``lam``."""
    lam = dg.diagram(lam)
    symbols = alphabet(k, l)
    grid = [[0] * r for r in lam]
    order = list(dg.cells(lam))

    def fill(pos: int) -> Iterator[Tableau]:
        if pos == len(order):
            yield tableau(grid)
            return
        r, c = order[pos]
        left = grid[r - 1][c - 2] if c > 1 else None
        up = grid[r - 2][c - 1] if r > 1 else None
        for s in symbols:
            if left is not None and not _weak_ok(left, s, repeat_starred=False):
                continue
            if up is not None and not _weak_ok(up, s, repeat_starred=True):
                continue
            grid[r - 1][c - 1] = s
            yield from fill(pos + 1)
        grid[r - 1][c - 1] = 0

    yield from fill(0)
