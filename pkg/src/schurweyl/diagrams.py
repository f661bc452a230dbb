"""Young diagrams as normalised tuples of row lengths, plus Frobenius coordinates."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import ShapeError

Diagram = tuple[int, ...]


class Cell(NamedTuple):
    """A 1-based (row, column) position."""

    row: int
    col: int


class FrobeniusCoords(NamedTuple):
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.arms)


def diagram(rows: Sequence[int]) -> Diagram:
    """Validate and normalise a partition (trailing zeros stripped)."""
    out = tuple(int(r) for r in rows)
    if any(r < 0 for r in out):
        raise ShapeError(f"negative row length in {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ShapeError(f"rows not weakly decreasing: {out}")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def is_diagram(rows: Sequence[int]) -> bool:
    return all(r >= 0 for r in rows) and all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Diagram:
    out = []
    h = len(lam)
    for j in range(lam[0] if lam else 0):
        while lam[h - 1] <= j:
            h -= 1
        out.append(h)
    return tuple(out)


def cells(lam: Sequence[int]) -> Iterator[Cell]:
    for i, r in enumerate(lam, 1):
        for j in range(1, r + 1):
            yield Cell(i, j)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


def is_corner(lam: Sequence[int], cell: tuple[int, int]) -> bool:
    """True iff removing ``cell`` from ``lam`` leaves a valid diagram."""
    r, c = cell
    if not 1 <= r <= len(lam) or lam[r - 1] != c:
        return False
    return r == len(lam) or lam[r] < c


def corners(lam: Sequence[int]) -> list[Cell]:
    return [Cell(i, lam[i - 1]) for i in range(1, len(lam) + 1)
            if i == len(lam) or lam[i] < lam[i - 1]]


def outer_corners(lam: Sequence[int]) -> list[Cell]:
    """Cells that can be added to ``lam``."""
    out = []
    for i in range(len(lam) + 1):
        cur = lam[i] if i < len(lam) else 0
        if i == 0 or lam[i - 1] > cur:
            out.append(Cell(i + 1, cur + 1))
    return out


def remove_cell(lam: Sequence[int], row: int) -> Diagram | None:
    """Delete the last cell of ``row`` (1-based); None if that is not a corner."""
    if not 1 <= row <= len(lam):
        return None
    if row < len(lam) and lam[row] == lam[row - 1]:
        return None
    out = list(lam)
    out[row - 1] -= 1
    return diagram(out)


def add_cell(lam: Sequence[int], row: int) -> Diagram | None:
    if row < 1 or row > len(lam) + 1:
        return None
    out = list(lam) + [0]
    if row > 1 and out[row - 2] == out[row - 1]:
        return None
    out[row - 1] += 1
    return diagram(out)


def hook(lam: Sequence[int], cell: tuple[int, int], conj: Sequence[int] | None = None) -> int:
    r, c = cell
    conj = conjugate(lam) if conj is None else conj
    return lam[r - 1] - c + conj[c - 1] - r + 1


def content(cell: tuple[int, int]) -> int:
    return cell[1] - cell[0]


def durfee_rank(lam: Sequence[int]) -> int:
    return sum(1 for i, r in enumerate(lam, 1) if r >= i)


def frobenius(lam: Sequence[int]) -> FrobeniusCoords:
    conj = conjugate(lam)
    d = durfee_rank(lam)
    return FrobeniusCoords(tuple(lam[i] - i - 1 for i in range(d)),
                           tuple(conj[i] - i - 1 for i in range(d)))


def from_frobenius(coords: FrobeniusCoords | tuple[Sequence[int], Sequence[int]]) -> Diagram:
    arms, legs = (tuple(x) for x in coords)
    d = len(arms)
    if len(legs) != d:
        raise ShapeError("arm and leg sequences differ in length")
    for seq in (arms, legs):
        if any(x < 0 for x in seq) or any(seq[i] <= seq[i + 1] for i in range(d - 1)):
            raise ShapeError(f"Frobenius coordinates must be strictly decreasing and >= 0: {coords}")
    rows = [arms[i] + i + 1 for i in range(d)]
    # below the Durfee square row i has length #{j : legs[j] >= i - j}
    extra = legs[0] + 1 if d else 0
    for i in range(d, extra):
        rows.append(sum(1 for j in range(d) if legs[j] + j >= i))
    return diagram(rows)


@lru_cache(maxsize=None)
def partitions(n: int, max_rows: int | None = None, max_cols: int | None = None) -> tuple[Diagram, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    def gen(rem: int, cap: int, rows_left: int | None) -> Iterator[Diagram]:
        if rem == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for tail in gen(rem - first, first, None if rows_left is None else rows_left - 1):
                yield (first,) + tail

    cap = n if max_cols is None else min(n, max_cols)
    return tuple(gen(n, cap, max_rows))


def fits_hook(lam: Sequence[int], k: int, l: int) -> bool:
    """True iff ``lam`` lies in the (k, l)-hook, i.e. ``lam[k] <= l``."""
    return len(lam) <= k or lam[k] <= l


def hook_partitions(n: int, k: int, l: int) -> tuple[Diagram, ...]:
    return tuple(lam for lam in partitions(n) if fits_hook(lam, k, l))
