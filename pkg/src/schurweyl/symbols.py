"""Symbols of the mixed alphabet and words over it.

Symbols are plain ``int`` codes.  Row symbols ``1..k`` are encoded as
themselves; the column symbol ``j*`` is encoded as ``STAR_BASE - j``.  With
this encoding ordinary integer comparison realises the total order

    1 < 2 < ... < k < l* < ... < 2* < 1*

so every comparison in the package is a plain ``<`` on codes.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidSymbolError, ParseError

STAR_BASE = 1 << 20
MAX_INDEX = STAR_BASE // 2

Word = tuple[int, ...]


def star(j: int) -> int:
    if not 1 <= j < MAX_INDEX:
        raise InvalidSymbolError(f"column symbol index out of range: {j}")
    return STAR_BASE - j


def is_starred(s: int) -> bool:
    return s > MAX_INDEX


def index(s: int) -> int:
    """The integer label of a symbol: ``i`` for ``i`` and ``j`` for ``j*``."""
    return STAR_BASE - s if s > MAX_INDEX else s


def dagger_symbol(s: int) -> int:
    return index(s) if is_starred(s) else star(s)


def check_symbol(s: int, k: int | None = None, l: int | None = None) -> int:
    s = int(s)
    if is_starred(s):
        j = STAR_BASE - s
        if j < 1 or (l is not None and j > l):
            raise InvalidSymbolError(f"column symbol {j}* outside 1*..{l}*")
    elif s < 1 or (k is not None and s > k):
        raise InvalidSymbolError(f"row symbol {s} outside 1..{k}")
    return s


def check_word(w: Iterable[int], k: int | None = None, l: int | None = None) -> Word:
    return tuple(check_symbol(s, k, l) for s in w)


def format_symbol(s: int) -> str:
    return f"{STAR_BASE - s}*" if is_starred(s) else str(s)


def parse_symbol(text: str) -> int:
    t = text.strip()
    try:
        if t.endswith("*"):
            return star(int(t[:-1]))
        v = int(t)
    except (ValueError, InvalidSymbolError) as exc:
        raise ParseError(f"bad symbol {text!r}") from exc
    if v < 1 or v >= MAX_INDEX:
        raise ParseError(f"bad symbol {text!r}")
    return v


def format_word(w: Sequence[int]) -> str:
    return ",".join(format_symbol(int(s)) for s in w)


def parse_word(text: str) -> Word:
    t = text.strip()
    if t in ("", "∅"):
        return ()
    return tuple(parse_symbol(part) for part in t.split(","))


def rev(w: Sequence[int]) -> Word:
    return tuple(w[::-1])


def dagger(w: Sequence[int]) -> Word:
    """Swap row and column symbols: ``i -> i*`` and ``j* -> j``.

    A word over ``A_k + A*_l`` becomes a word over ``A_l + A*_k``.
    """
    return tuple(dagger_symbol(int(s)) for s in w)


def prefix(w: Sequence[int], n: int) -> Word:
    return tuple(w[:n])


def suffix(w: Sequence[int], m: int) -> Word:
    return tuple(w[len(w) - m:]) if m else ()


def alphabet(k: int, l: int = 0) -> Word:
    """All symbols of ``A_k + A*_l`` in increasing order."""
    return tuple(range(1, k + 1)) + tuple(star(j) for j in range(l, 0, -1))


def to_dense(w: Sequence[int] | np.ndarray, k: int, l: int = 0) -> np.ndarray:
    """Map symbol codes to dense indices ``0..k+l-1`` preserving the order."""
    arr = np.asarray(w, dtype=np.int64)
    out = np.where(arr > MAX_INDEX, k + l - (STAR_BASE - arr), arr - 1)
    if out.size and (out.min() < 0 or out.max() >= k + l):
        raise InvalidSymbolError(f"word leaves the alphabet A_{k} + A*_{l}")
    return out.astype(np.int64)


def from_dense(d: np.ndarray, k: int, l: int = 0) -> np.ndarray:
    d = np.asarray(d, dtype=np.int64)
    return np.where(d < k, d + 1, STAR_BASE - (k + l - d)).astype(np.int64)
