"""Whole-word RSK variants, the recovery maps Phi_T and Psi, and the exact
identities relating them to plactic classes.

Every formula-driven routine has a brute-force twin (``*_bruteforce`` or the
enumeration functions) guarded by :data:`ENUMERATION_LIMIT`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple, Sequence

from . import diagrams as dg
from .diagrams import Cell, Diagram
from .errors import EnumerationLimitError, InvalidSymbolError, ScheduleError
from .symbols import Word, alphabet, check_word, is_starred, rev, star
from .tableau import (Tableau, bump_rows, reverse_insert, tableau, transpose,
                      unbump_rows)

ENUMERATION_LIMIT = 10 ** 7


class RskPair(NamedTuple):
    p: Tableau
    q: Tableau

    @property
    def shape(self) -> Diagram:
        return self.p.shape


def _fold(w: Sequence[int], variant: str) -> RskPair:
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(w, 1):
        r, _ = bump_rows(p, int(x), variant)
        if r > len(q):
            q.append([])
        q[r - 1].append(step)
    return RskPair(tableau(p), tableau(q))


def _pure(w: Sequence[int], name: str) -> Word:
    w = check_word(w)
    if any(is_starred(x) for x in w):
        raise InvalidSymbolError(f"{name} takes words over row symbols only")
    return w


def rsk(w: Sequence[int]) -> RskPair:
    return _fold(_pure(w, "rsk"), "row")


def rsk_star(w: Sequence[int]) -> RskPair:
    return _fold(_pure(w, "rsk_star"), "dual")


def rsk_mixed(w: Sequence[int]) -> RskPair:
    return _fold(check_word(w), "mixed")


def rsk_mixed_star(w: Sequence[int]) -> RskPair:
    """Ordinary insertion for column symbols, dual insertion for row symbols."""
    return _fold(check_word(w), "mixed_dual")


def rsk_variant(w: Sequence[int], variant: str) -> RskPair:
    return {"row": rsk, "dual": rsk_star, "mixed": rsk_mixed, "mixed_dual": rsk_mixed_star}[variant](w)


def shape_of(w: Sequence[int]) -> Diagram:
    """sh(w) under the mixed insertion, which is plain RSK on row-symbol words."""
    return _fold(check_word(w), "mixed").shape


def rsk_inverse(p: Tableau, q: Tableau, variant: str = "row") -> Word:
    if p.shape != q.shape:
        raise ValueError("P and Q must have the same shape")
    rows = [list(r) for r in p.rows]
    where = {v: cell for cell, v in q}
    out = []
    for step in range(q.size, 0, -1):
        out.append(unbump_rows(rows, where[step], variant))
    return tuple(reversed(out))


# -- duality helpers -------------------------------------------------------------

def psi(u: Sequence[int], mixed: bool = False) -> Word:
    """Column of the cell added at each step of RSK*(u).

    With ``mixed=True`` the mixed dual RSK is used; a row symbol records the
    column ``c`` of its new cell and a column symbol records its row ``r`` as
    the column symbol ``r*``.
    """
    u = check_word(u) if mixed else _pure(u, "psi")
    variant = "mixed_dual" if mixed else "dual"
    p: list[list[int]] = []
    out = []
    for x in u:
        r, c = bump_rows(p, x, variant)
        out.append(star(r) if (mixed and is_starred(x)) else c)
    return tuple(out)


def is_lattice_word(w: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


# -- skew decreasing fillings ------------------------------------------------

@dataclass(frozen=True)
class SkewDecreasingFilling:
    """Element of S_m(nu): cells of nu/mu numbered 1..m, decreasing along rows
    and columns, so deleting cells 1, 2, ..., m in that order from nu keeps a
    diagram at every step."""

    outer: Diagram
    order: tuple[Cell, ...] = ()
    _inner: Diagram = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        outer = dg.diagram(self.outer)
        cur = outer
        order = tuple(Cell(*c) for c in self.order)
        for cell in order:
            if not dg.is_corner(cur, cell):
                raise ScheduleError(f"cell {tuple(cell)} is not removable from {cur}")
            cur = dg.remove_cell(cur, cell.row)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_inner", cur)

    @classmethod
    def from_cells(cls, outer: Sequence[int], cells: Mapping[tuple[int, int], int]) -> "SkewDecreasingFilling":
        m = len(cells)
        if sorted(cells.values()) != list(range(1, m + 1)):
            raise ScheduleError("entries must be 1..m each once")
        by_value = sorted(cells.items(), key=lambda kv: kv[1])
        return cls(tuple(outer), tuple(Cell(*c) for c, _ in by_value))

    @classmethod
    def from_rows(cls, outer: Sequence[int], rows: Sequence[int]) -> "SkewDecreasingFilling":
        """Build the schedule deleting successively from the given rows."""
        cur = dg.diagram(outer)
        order = []
        for r in rows:
            if not 1 <= r <= len(cur):
                raise ScheduleError(f"row {r} empty in {cur}")
            cell = Cell(r, cur[r - 1])
            order.append(cell)
            nxt = dg.remove_cell(cur, r)
            if nxt is None:
                raise ScheduleError(f"cannot delete from row {r} of {cur}")
            cur = nxt
        return cls(tuple(outer), tuple(order))

    @property
    def m(self) -> int:
        return len(self.order)

    @property
    def inner(self) -> Diagram:
        return self._inner

    @property
    def cells(self) -> dict[Cell, int]:
        return {c: i for i, c in enumerate(self.order, 1)}

    def cell_of(self, j: int) -> Cell:
        return self.order[j - 1]


def fillings(nu: Sequence[int], m: int) -> Iterator[SkewDecreasingFilling]:
    """Enumerate S_m(nu) by backtracking over removable corners."""
    nu = dg.diagram(nu)
    if m > sum(nu):
        return

    def rec(cur: Diagram, acc: list[Cell]) -> Iterator[tuple[Cell, ...]]:
        if len(acc) == m:
            yield tuple(acc)
            return
        for cell in dg.corners(cur):
            acc.append(cell)
            yield from rec(dg.remove_cell(cur, cell.row), acc)
            acc.pop()

    for order in rec(nu, []):
        yield SkewDecreasingFilling(nu, order)


def word_of_filling(s: SkewDecreasingFilling) -> Word:
    """w_S: the row of S containing 1, 2, ..., m."""
    return tuple(c.row for c in s.order)


def d_of_filling(s: SkewDecreasingFilling) -> int:
    from .young import dim

    return dim(s.inner)


def phi(t: Tableau, s: SkewDecreasingFilling, mixed: bool = False) -> Word:
    """Phi_T(S): u_j is the symbol ejected by reverse dual insertion on the
    transposed tableau at the transposed cell of S containing j.

    For (k, l)-semistandard ``t`` pass ``mixed=True``: row symbols are then
    recovered by the reverse dual rule and column symbols by the reverse
    ordinary rule.
    """
    if t.shape != s.outer:
        raise ScheduleError(f"filling outer shape {s.outer} differs from sh(T) = {t.shape}")
    variant = "mixed_dual" if mixed else "dual"
    cur = transpose(t)
    out = []
    for cell in s.order:
        cur, x = reverse_insert(cur, (cell.col, cell.row), variant)
        out.append(x)
    return tuple(out)


# -- c_a(T) ------------------------------------------------------------------------

def _size_guard(count: int, what: str) -> None:
    if count > ENUMERATION_LIMIT:
        raise EnumerationLimitError(f"{what}: {count} candidates exceeds limit {ENUMERATION_LIMIT}")


def c_a_terms(t: Tableau, m: int, mixed: bool = False) -> Iterator[tuple[Word, SkewDecreasingFilling]]:
    """Yield (Phi_T(S), S) for every S in S_m(sh T)."""
    variant = "mixed_dual" if mixed else "dual"
    tt = transpose(t)
    nu = t.shape

    def rec(cur_t: Tableau, cur_shape: Diagram, order: list[Cell], word: list[int]):
        if len(order) == m:
            yield tuple(word), SkewDecreasingFilling(nu, tuple(order))
            return
        for cell in dg.corners(cur_shape):
            nt, x = reverse_insert(cur_t, (cell.col, cell.row), variant)
            order.append(cell)
            word.append(x)
            yield from rec(nt, dg.remove_cell(cur_shape, cell.row), order, word)
            order.pop()
            word.pop()

    yield from rec(tt, nu, [], [])


def c_a_formula(t: Tableau, a: Sequence[int], mixed: bool = False) -> int:
    """sum of d(S) over S in S_m(sh T) with Phi_T(S) = a, pruning on prefix mismatch."""
    from .young import dim

    a = tuple(a)
    m = len(a)
    if m > t.size:
        return 0
    variant = "mixed_dual" if mixed else "dual"
    total = 0

    def rec(cur_t: Tableau, cur_shape: Diagram, j: int) -> None:
        nonlocal total
        if j == m:
            total += dim(cur_shape)
            return
        for cell in dg.corners(cur_shape):
            nt, x = reverse_insert(cur_t, (cell.col, cell.row), variant)
            if x == a[j]:
                rec(nt, dg.remove_cell(cur_shape, cell.row), j + 1)

    rec(transpose(t), t.shape, 0)
    return total


def c_a_bruteforce(t: Tableau, a: Sequence[int], k: int, l: int = 0) -> int:
    """#{y in A^n : P(y) = T, [y]_m = a} by enumerating every suffix."""
    a = tuple(a)
    n, m = t.size, len(a)
    if m > n:
        return 0
    syms = alphabet(k, l)
    _size_guard(len(syms) ** n, "c_a_bruteforce")
    fold = rsk_mixed if l else rsk
    return sum(1 for b in itertools.product(syms, repeat=n - m) if fold(a + b).p == t)


# -- plactic / coplactic classes ----------------------------------------------

def _multiset_permutations(items: Sequence[int]) -> Iterator[Word]:
    """Distinct permutations in lexicographic order."""
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(items)
    buf: list[int] = []

    def rec() -> Iterator[Word]:
        if len(buf) == n:
            yield tuple(buf)
            return
        for x in keys:
            if counts[x]:
                counts[x] -= 1
                buf.append(x)
                yield from rec()
                buf.pop()
                counts[x] += 1

    yield from rec()


def _multinomial(items: Sequence[int]) -> int:
    from math import factorial

    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    out = factorial(len(items))
    for c in counts.values():
        out //= factorial(c)
    return out


def plactic_class(t: Tableau, mixed: bool = False) -> list[Word]:
    """{u : P(u) = T} in lexicographic order."""
    ents = t.entries()
    _size_guard(_multinomial(ents), "plactic_class")
    fold = rsk_mixed if mixed else rsk
    return [u for u in _multiset_permutations(ents) if fold(u).p == t]


def coplactic_class(q: Tableau, k: int, l: int = 0) -> list[Word]:
    """{u in A^n : Q(u) = q} via inverse RSK over all P of shape sh(q)."""
    from .tableau import hook_semistandard_tableaux

    variant = "mixed" if l else "row"
    words = [rsk_inverse(p, q, variant) for p in hook_semistandard_tableaux(q.shape, k, l)]
    return sorted(words)


def words(k: int, n: int, l: int = 0) -> Iterator[Word]:
    syms = alphabet(k, l)
    _size_guard(len(syms) ** n, "words")
    return itertools.product(syms, repeat=n)


# -- Greene invariants -------------------------------------------------------------

def _nearrow(a: int, b: int) -> bool:
    return a < b or (a == b and not is_starred(a))


def _searrow(a: int, b: int) -> bool:
    return a > b or (a == b and is_starred(a))


def _longest_chain(w: Sequence[int], rel) -> int:
    best: list[int] = []
    for i, x in enumerate(w):
        best.append(1 + max((best[j] for j in range(i) if rel(w[j], x)), default=0))
    return max(best, default=0)


GREENE_LIMIT = 12


def greene_invariants(w: Sequence[int], depth: int, decreasing: bool = False) -> tuple[int, ...]:
    """Maximal size of a union of j disjoint increasing (or decreasing)
    subsequences, j = 1..depth, by exhaustive search over subsequences.

    A subsequence is a union of j increasing chains iff its longest
    decreasing subsequence has length <= j (Dilworth).
    """
    w = tuple(w)
    n = len(w)
    if n > GREENE_LIMIT:
        raise EnumerationLimitError(f"greene_invariants brute force limited to n <= {GREENE_LIMIT}")
    chain, anti = (_searrow, _nearrow) if decreasing else (_nearrow, _searrow)
    best = [0] * (depth + 1)
    for mask in range(1 << n):
        sub = [w[i] for i in range(n) if mask >> i & 1]
        width = _longest_chain(sub, anti)
        for j in range(max(width, 1), depth + 1):
            if len(sub) > best[j]:
                best[j] = len(sub)
    return tuple(best[1:])


def greene_from_shape(w: Sequence[int], depth: int, decreasing: bool = False) -> tuple[int, ...]:
    lam = shape_of(w)
    if decreasing:
        lam = dg.conjugate(lam)
    lam = tuple(lam) + (0,) * depth
    return tuple(itertools.accumulate(lam[:depth]))


__all__ = [
    "RskPair", "rsk", "rsk_star", "rsk_mixed", "rsk_mixed_star", "rsk_variant", "rsk_inverse",
    "shape_of", "rev", "psi", "is_lattice_word", "SkewDecreasingFilling", "fillings",
    "word_of_filling", "d_of_filling", "phi", "c_a_terms", "c_a_formula", "c_a_bruteforce",
    "plactic_class", "coplactic_class", "words", "greene_invariants", "greene_from_shape",
    "ENUMERATION_LIMIT",
]
