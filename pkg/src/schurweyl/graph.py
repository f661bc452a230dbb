"""The Schur-Weyl graph SW_k (and its mixed (k, l) analogue), level by level.

Vertices at level n are the tableaux with n cells over the alphabet; there is
an edge ``t -> insert(t, s)`` labelled ``s`` for every symbol.  Shapes give the
covering map onto the Young graph.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from . import diagrams as dg
from .diagrams import Diagram
from .errors import EnumerationLimitError, ShapeError, TableauKindError
from .symbols import Word, alphabet, check_word, format_symbol, is_starred, star
from .tableau import (EMPTY, Tableau, hook_semistandard_tableaux, insert, is_semistandard,
                      reverse_insert, semistandard_tableaux, tableau, to_text)

VERTEX_LIMIT = 2_000_000


class Edge(NamedTuple):
    src: int
    label: int
    tgt: int


@dataclass(frozen=True)
class GradedGraph:
    k: int
    l: int
    levels: tuple[tuple, ...]
    edges: tuple[tuple[Edge, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def index(self, level: int, vertex) -> int:
        return self._lookup(level)[vertex]

    def _lookup(self, level: int) -> dict:
        cache = self.__dict__.setdefault("_index_cache", {})
        if level not in cache:
            cache[level] = {v: i for i, v in enumerate(self.levels[level])}
        return cache[level]

    def out_degrees(self, level: int) -> list[int]:
        deg = [0] * len(self.levels[level])
        for e in self.edges[level] if level < len(self.edges) else ():
            deg[e.src] += 1
        return deg

    def path_counts(self) -> list[list[int]]:
        """Number of paths from the root to every vertex."""
        counts = [[1] * len(self.levels[0])]
        for n, level_edges in enumerate(self.edges):
            nxt = [0] * len(self.levels[n + 1])
            for e in level_edges:
                nxt[e.tgt] += counts[n][e.src]
            counts.append(nxt)
        return counts

    def vertex_text(self, v) -> str:
        return to_text(v) if isinstance(v, Tableau) else ",".join(map(str, v)) or "∅"

    def to_text(self) -> str:
        lines = [f"# k={self.k} l={self.l} depth={self.depth}"]
        for n, level in enumerate(self.levels):
            lines.extend(f"V {n} {i} {self.vertex_text(v)}" for i, v in enumerate(level))
        for n, level_edges in enumerate(self.edges):
            lines.extend(f"E {n} {e.src} {format_symbol(e.label)} {e.tgt}" for e in level_edges)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """JSON with one line per level, so diffs stay local."""
        def dump(x) -> str:
            return json.dumps(x, ensure_ascii=False)

        levels = [dump([self.vertex_text(v) for v in level]) for level in self.levels]
        edges = [dump([[e.src, format_symbol(e.label), e.tgt] for e in level]) for level in self.edges]
        return (f'{{"k": {self.k}, "l": {self.l}, "depth": {self.depth},\n'
                f' "levels": [\n  ' + ",\n  ".join(levels) + "\n ],\n"
                f' "edges": [' + ("\n  " + ",\n  ".join(edges) + "\n " if edges else "") + "]}\n")


def _variant(l: int) -> str:
    return "mixed" if l > 0 else "row"


def _sort_key(t: Tableau) -> tuple:
    return t.rows


def build(k: int, l: int = 0, depth: int = 3, limit: int = VERTEX_LIMIT, jobs: int = 1) -> GradedGraph:
    """SW_k (l = 0) or the mixed graph up to ``depth``."""
    if k < 0 or l < 0 or k + l == 0:
        raise ValueError("alphabet must be nonempty")
    letters = alphabet(k, l)
    variant = _variant(l)
    levels: list[tuple[Tableau, ...]] = [(EMPTY,)]
    edges: list[tuple[Edge, ...]] = []
    total = 1
    for _ in range(depth):
        src = levels[-1]
        total += len(src) * len(letters)
        if total > limit:
            raise EnumerationLimitError(f"graph exceeds {limit} vertices; lower depth")

        def grow(t: Tableau) -> list[tuple[int, Tableau]]:
            return [(s, insert(t, s, variant)[0]) for s in letters]

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                children = list(pool.map(grow, src))
        else:
            children = [grow(t) for t in src]
        nxt = sorted({t for ch in children for _, t in ch}, key=_sort_key)
        pos = {t: i for i, t in enumerate(nxt)}
        edges.append(tuple(Edge(i, s, pos[t]) for i, ch in enumerate(children) for s, t in ch))
        levels.append(tuple(nxt))
    return GradedGraph(k, l, tuple(levels), tuple(edges))


def build_young(k: int, depth: int, l: int = 0) -> GradedGraph:
    """Y_k (or the (k, l)-hook part of Y) with edges labelled by the added row."""
    levels = [((),)]
    edges = []
    for n in range(depth):
        nxt = tuple(sorted(dg.hook_partitions(n + 1, k, l), reverse=True)) if l else dg.partitions(n + 1, k)
        pos = {lam: i for i, lam in enumerate(nxt)}
        es = []
        for i, lam in enumerate(levels[-1]):
            for row in range(1, len(lam) + 2):
                mu = dg.add_cell(lam, row)
                if mu is not None and mu in pos:
                    es.append(Edge(i, row, pos[mu]))
        edges.append(tuple(es))
        levels.append(nxt)
    return GradedGraph(k, l, tuple(levels), tuple(edges))


def project(t: Tableau) -> Diagram:
    return t.shape


def fiber(lam: Sequence[int], k: int, l: int = 0) -> list[Tableau]:
    lam = dg.diagram(lam)
    if l:
        return sorted(hook_semistandard_tableaux(lam, k, l), key=_sort_key)
    return sorted(semistandard_tableaux(lam, k), key=_sort_key)


def project_graph(g: GradedGraph) -> GradedGraph:
    """Image of ``g`` under the covering t -> sh(t); duplicate edges merged."""
    levels = []
    for level in g.levels:
        levels.append(tuple(sorted({t.shape for t in level}, reverse=True)))
    edges = []
    for n, level_edges in enumerate(g.edges):
        a = {lam: i for i, lam in enumerate(levels[n])}
        b = {lam: i for i, lam in enumerate(levels[n + 1])}
        seen = set()
        for e in level_edges:
            lam, mu = g.levels[n][e.src].shape, g.levels[n + 1][e.tgt].shape
            row = next(i for i in range(len(mu)) if i >= len(lam) or mu[i] != lam[i]) + 1
            seen.add(Edge(a[lam], row, b[mu]))
        edges.append(tuple(sorted(seen)))
    return GradedGraph(g.k, g.l, tuple(levels), tuple(edges))


# -- k = 2 coordinates ----------------------------------------------------------

class Sw2Code(NamedTuple):
    shape: Diagram
    r: int

    @property
    def excess(self) -> int:
        lam = self.shape
        return (lam[0] if lam else 0) - (lam[1] if len(lam) > 1 else 0)


def encode_sw2(t: Tableau) -> Sw2Code:
    """(shape, number of 1s in row 1 beyond column lambda_2)."""
    if not is_semistandard(t, 2):
        raise TableauKindError("encode_sw2 needs a semistandard tableau over {1, 2}")
    lam = t.shape
    l2 = lam[1] if len(lam) > 1 else 0
    r = sum(1 for x in t.rows[0][l2:] if x == 1) if lam else 0
    return Sw2Code(lam, r)


def decode_sw2(code: Sw2Code | tuple) -> Tableau:
    lam, r = code
    lam = dg.diagram(lam)
    if len(lam) > 2:
        raise ShapeError(f"{lam} has more than two rows")
    l1 = lam[0] if lam else 0
    l2 = lam[1] if len(lam) > 1 else 0
    if not 0 <= r <= l1 - l2:
        raise ValueError(f"r = {r} outside 0..{l1 - l2}")
    rows = [[1] * (l2 + r) + [2] * (l1 - l2 - r)]
    if l2:
        rows.append([2] * l2)
    return tableau(rows) if l1 else EMPTY


def sw2_codes(n: int) -> list[Sw2Code]:
    return [Sw2Code(lam, r) for lam in dg.partitions(n, 2) for r in range(Sw2Code(lam, 0).excess + 1)]


def sw2_edge_allowed(code: Sw2Code, nxt: Sw2Code) -> bool:
    """The stated (lambda, r) -> (mu, s) condition: s in {r, r+1} when the
    excess grows, s = r when it shrinks."""
    if not dg.contains(nxt.shape, code.shape) or dg.size(nxt.shape) != dg.size(code.shape) + 1:
        return False
    if nxt.excess == code.excess + 1:
        return nxt.r in (code.r, code.r + 1)
    return nxt.r == code.r


def sw2_code_successors(code: Sw2Code) -> set[Sw2Code]:
    """Codes reached by inserting 1 and 2.

    Inserting 2 always gives (lambda + row 1, r).  Inserting 1 gives
    (lambda + row 2, r) while row 1 still has a free 2, else
    (lambda + row 1, r + 1).  So s = r + 1 happens only at r = k(lambda).
    """
    lam, r = code
    up = Sw2Code(dg.add_cell(lam, 1), r)
    if r < code.excess:
        return {up, Sw2Code(dg.add_cell(lam, 2), r)}
    return {up, Sw2Code(up.shape, r + 1)}


# -- maximal tableaux -------------------------------------------------------------

def maximal_tableau(lam: Sequence[int], k: int, l: int = 0) -> Tableau:
    """Top k rows: a column of height h gets k-h+1..k.  Rows below k (mixed
    case only): a row of length i gets i*, ..., 1*."""
    lam = dg.diagram(lam)
    if not dg.fits_hook(lam, k, l):
        raise ShapeError(f"{lam} does not fit the ({k}, {l}) hook")
    top = lam[:k]
    heights = dg.conjugate(top)
    rows = [[k - heights[c] + 1 + i for c in range(top[i])] for i in range(len(top))]
    rows.extend([star(r - c) for c in range(r)] for r in lam[k:])
    return tableau(rows)


# -- words and paths ------------------------------------------------------------

def word_to_path(w: Sequence[int]) -> list[Tableau]:
    """P([w]_0), P([w]_1), ..., P(w)."""
    w = check_word(w)
    variant = "mixed" if any(is_starred(x) for x in w) else "row"
    path = [EMPTY]
    for x in w:
        path.append(insert(path[-1], x, variant)[0])
    return path


def _new_cell(small: Diagram, big: Diagram) -> tuple[int, int]:
    if dg.size(big) != dg.size(small) + 1 or not dg.contains(big, small):
        raise ShapeError(f"{big} does not cover {small}")
    for i, b in enumerate(big):
        if i >= len(small) or small[i] != b:
            return (i + 1, b)
    raise ShapeError("unreachable")  # pragma: no cover


def path_to_word(path: Iterable[Tableau], mixed: bool | None = None) -> Word:
    path = list(path)
    if mixed is None:
        mixed = any(is_starred(x) for t in path for x in t.entries())
    variant = "mixed" if mixed else "row"
    out = []
    for prev, cur in zip(path, path[1:]):
        back, x = reverse_insert(cur, _new_cell(prev.shape, cur.shape), variant)
        if back != prev:
            raise ShapeError(f"{to_text(prev)} -> {to_text(cur)} is not an edge")
        out.append(x)
    return tuple(out)
