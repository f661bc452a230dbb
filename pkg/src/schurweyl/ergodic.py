"""Bernoulli sampling, youngization and ergodic-method estimates of central
measures on the Schur-Weyl graph.

The estimate of a cylinder ``C_a`` along a word ``x`` at level ``n`` is the
uniform measure on the tail class of ``[x]_n``::

    mu_x^(n)(C_a) = c_a(T_n) / dim(Lambda_n),     T_n = P([x]_n)

with ``c_a`` summed over deletion schedules ``S`` (see
:func:`schurweyl.rsk.c_a_terms`) and every ``d(S) / dim(Lambda_n)`` kept as an
exact rational.
"""
from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import diagrams as dg
from . import young
from ._kernels import bracket_kernel, youngize_kernel
from .diagrams import Diagram
from .errors import EnumerationLimitError, InvalidSymbolError
from .rsk import c_a_terms, shape_of, word_of_filling
from .symbols import STAR_BASE, Word, alphabet, format_word, from_dense, to_dense
from .tableau import Tableau, tableau

RNG_ALGORITHM = "numpy.random.PCG64(SeedSequence(seed)); symbols by inverse CDF of Generator.random()"
SCHEDULE_LIMIT = 200_000


def _to_fraction(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class BernoulliSpec:
    """i.i.d. letters: ``P(i) = p[i-1]`` and ``P(j*) = q[j-1]``."""

    k: int
    l: int = 0
    p: tuple = ()
    q: tuple = ()
    seed: int = 0

    def __post_init__(self) -> None:
        p = tuple(_to_fraction(x) for x in self.p)
        q = tuple(_to_fraction(x) for x in self.q)
        if len(p) != self.k or len(q) != self.l:
            raise ValueError(f"need {self.k} row and {self.l} column probabilities, got {len(p)} and {len(q)}")
        if any(x < 0 for x in p + q):
            raise ValueError("probabilities must be nonnegative")
        if sum(p) + sum(q) != 1:
            raise ValueError(f"probabilities sum to {sum(p) + sum(q)}, not 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def uniform(cls, k: int, seed: int = 0) -> "BernoulliSpec":
        return cls(k, 0, tuple(Fraction(1, k) for _ in range(k)), (), seed)

    def with_seed(self, seed: int) -> "BernoulliSpec":
        return BernoulliSpec(self.k, self.l, self.p, self.q, seed)

    @property
    def mixed(self) -> bool:
        return self.l > 0

    def probabilities(self) -> np.ndarray:
        """Probabilities in alphabet order 1..k, l*..1*."""
        return np.array([float(x) for x in self.p + self.q[::-1]])

    def thoma(self) -> young.ThomaParams:
        return young.ThomaParams.from_densities(self.p, self.q)

    def cylinder(self, a: Sequence[int]) -> Fraction:
        """Bernoulli measure of C_a."""
        out = Fraction(1)
        for x in a:
            x = int(x)
            out *= self.q[STAR_BASE - x - 1] if x > STAR_BASE // 2 else self.p[x - 1]
        return out


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def sample_dense(spec: BernoulliSpec, n: int) -> np.ndarray:
    cdf = np.cumsum(spec.probabilities())
    u = generator(spec.seed).random(n)
    idx = np.searchsorted(cdf, u, side="right")
    # guard against cdf[-1] rounding below 1
    last = int(np.flatnonzero(spec.probabilities() > 0)[-1])
    return np.minimum(idx, last).astype(np.int64)


def sample_word(spec: BernoulliSpec, n: int) -> np.ndarray:
    """n i.i.d. symbol codes; identical (seed, n) give identical words."""
    return from_dense(sample_dense(spec, n), spec.k, spec.l)


# -- youngization ----------------------------------------------------------------

@dataclass
class TrajectoryStats:
    n: int
    k: int
    l: int
    counts: np.ndarray
    new_rows: np.ndarray
    new_cols: np.ndarray
    log_steps: np.ndarray
    row_lengths: np.ndarray
    col_lengths: np.ndarray
    _state: tuple = field(repr=False, default=())

    @property
    def rows(self) -> np.ndarray:
        """Top k row lengths after the last step."""
        return self.row_lengths[-1] if len(self.log_steps) else np.zeros(self.k, dtype=np.int64)

    @property
    def cols(self) -> np.ndarray:
        return self.col_lengths[-1] if len(self.log_steps) else np.zeros(self.l, dtype=np.int64)

    def shape(self) -> Diagram:
        top_counts, top_mask, run_mask, run_mult = self._state
        rows = [int(top_counts[r].sum()) + _popcount(int(top_mask[r])) for r in range(self.k)]
        for mask, mult in zip(run_mask, run_mult):
            rows.extend([_popcount(int(mask))] * int(mult))
        return dg.diagram(rows)

    def p_tableau(self) -> Tableau:
        """P([w]_n) expanded from the compressed kernel state."""
        top_counts, top_mask, run_mask, run_mult = self._state
        k, l = self.k, self.l

        def starred(mask: int) -> list[int]:
            return [STAR_BASE - (l - b) for b in range(l) if mask >> b & 1]

        rows = []
        for r in range(k):
            row = [s + 1 for s in range(k) for _ in range(int(top_counts[r, s]))] + starred(int(top_mask[r]))
            if row:
                rows.append(row)
        for mask, mult in zip(run_mask, run_mult):
            rows.extend([starred(int(mask))] * int(mult))
        return tableau(rows)

    def q_tableau(self) -> Tableau:
        rows: list[list[int]] = []
        for t, r in enumerate(self.new_rows, 1):
            if r >= len(rows):
                rows.append([])
            rows[r].append(t)
        return tableau(rows)

    def shape_at(self, step: int) -> Diagram:
        """sh([w]_step) replayed from the recorded growth."""
        rows: list[int] = []
        for r in self.new_rows[:step]:
            if r >= len(rows):
                rows.append(0)
            rows[r] += 1
        return tuple(rows)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def youngize(w: Sequence[int] | np.ndarray, k: int, l: int = 0,
             log_steps: Iterable[int] | None = None) -> TrajectoryStats:
    """Insert the prefixes of ``w`` one letter at a time (mixed insertion)."""
    dense = to_dense(np.asarray(w, dtype=np.int64), k, l)
    n = len(dense)
    steps = sorted({int(s) for s in (log_steps or ()) if 1 <= int(s) <= n} | ({n} if n else set()))
    log = np.array(steps, dtype=np.int64)
    run_cap = 4 * (l + 2) ** 2 + 16
    new_row, new_col, rs, cs, tc, tm, rm, rmult = youngize_kernel(dense, k, l, log, run_cap)
    counts = np.bincount(dense, minlength=k + l)
    return TrajectoryStats(n, k, l, counts, new_row, new_col, log, rs, cs, (tc, tm, rm, rmult))


def p_tableau(w: Sequence[int] | np.ndarray, k: int, l: int = 0) -> Tableau:
    return youngize(w, k, l).p_tableau()


# -- free / paired coordinates ---------------------------------------------------

def free_paired(w: Sequence[int] | np.ndarray) -> tuple[list[int], list[tuple[int, int]]]:
    """Bracket ``21`` factors repeatedly; return 1-based free positions and
    paired (2-position, 1-position) pairs."""
    arr = np.asarray(w, dtype=np.int64)
    if arr.size and not np.isin(arr, (1, 2)).all():
        raise InvalidSymbolError("free_paired needs a word over {1, 2}")
    left, right, npairs = bracket_kernel(arr)
    paired = np.zeros(len(arr), dtype=bool)
    paired[left] = True
    paired[right] = True
    free = [int(i) + 1 for i in np.flatnonzero(~paired)]
    pairs = sorted((int(a) + 1, int(b) + 1) for a, b in zip(left, right))
    return free, pairs


def free_paired_bruteforce(w: Sequence[int]) -> tuple[list[int], list[tuple[int, int]]]:
    """Literal iterated bracketing: pair adjacent ``21`` in the unbracketed
    subword until none is left."""
    alive = list(range(len(w)))
    pairs = []
    while True:
        found = [(alive[i], alive[i + 1]) for i in range(len(alive) - 1)
                 if w[alive[i]] == 2 and w[alive[i + 1]] == 1]
        if not found:
            break
        used = {x for pr in found for x in pr}
        pairs.extend(found)
        alive = [i for i in alive if i not in used]
    return [i + 1 for i in alive], sorted((a + 1, b + 1) for a, b in pairs)


# -- reports -----------------------------------------------------------------------

@dataclass
class DensityCheck:
    seed: int
    row_lengths: list[float]
    col_lengths: list[float]
    row_targets: list[float]
    col_targets: list[float]
    row_deviation: float
    col_deviation: float


@dataclass
class DensityReport:
    spec: BernoulliSpec
    n: int
    tolerance: float
    checks: list[DensityCheck]

    @property
    def max_deviation(self) -> float:
        return max(max(c.row_deviation, c.col_deviation) for c in self.checks)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance

    def binomial_band(self) -> float:
        """Three binomial standard errors of the largest letter frequency."""
        probs = self.spec.probabilities()
        return 3 * math.sqrt(float(np.max(probs * (1 - probs))) / self.n)


def _map_seeds(fn: Callable[[int], object], seeds: Sequence[int], jobs: int) -> list:
    if jobs <= 1:
        return [fn(s) for s in seeds]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, seeds))


def check_density_theorem(spec: BernoulliSpec, n: int, seeds: Sequence[int],
                          tolerance: float = 0.015, jobs: int = 1) -> DensityReport:
    """Compare lambda_j / n with the sorted row densities, and column lengths
    with the sorted column densities in the mixed case."""
    th = spec.thoma()
    row_t = [float(x) for x in th.alpha]
    col_t = [float(x) for x in th.beta]

    def one(seed: int) -> DensityCheck:
        stats = youngize(sample_word(spec.with_seed(seed), n), spec.k, spec.l)
        rows = [int(x) / n for x in stats.rows]
        cols = [int(x) / n for x in stats.cols]
        rdev = max((abs(a - b) for a, b in zip(rows, row_t)), default=0.0)
        cdev = max((abs(a - b) for a, b in zip(cols, col_t)), default=0.0)
        return DensityCheck(seed, rows, cols, row_t, col_t, rdev, cdev)

    return DensityReport(spec, n, tolerance, _map_seeds(one, seeds, jobs))


@dataclass
class EstimateReport:
    """Ergodic-method estimates mu_x^(n)(C_a) for every a of length m."""

    n: int
    m: int
    k: int
    l: int
    shape: Diagram
    estimates: dict[Word, Fraction]
    schedule_shape_sums: dict[Diagram, Fraction]
    config: dict = field(default_factory=dict)

    def total(self) -> Fraction:
        return sum(self.estimates.values(), Fraction(0))

    def shape_sums(self) -> dict[Diagram, Fraction]:
        out: dict[Diagram, Fraction] = defaultdict(Fraction)
        for a, v in self.estimates.items():
            out[shape_of(a)] += v
        return {lam: out[lam] for lam in _shapes(self.m, self.k, self.l)}


def _shapes(m: int, k: int, l: int) -> tuple[Diagram, ...]:
    return dg.hook_partitions(m, k, l)


def tail_estimate_tableau(t: Tableau, m: int, k: int, l: int = 0) -> EstimateReport:
    """Estimates from T_n directly: sum of d(S)/dim(sh T) over schedules."""
    nu = t.shape
    if m > t.size:
        raise ValueError(f"m = {m} exceeds n = {t.size}")
    if len(dg.corners(nu)) ** m > SCHEDULE_LIMIT:
        raise EnumerationLimitError(f"too many deletion schedules for m = {m} on {len(nu)}-row shape")
    import itertools

    est: dict[Word, Fraction] = {a: Fraction(0) for a in itertools.product(alphabet(k, l), repeat=m)}
    by_schedule: dict[Diagram, Fraction] = defaultdict(Fraction)
    ratio_cache: dict[Diagram, Fraction] = {}
    for a, s in c_a_terms(t, m, mixed=l > 0):
        inner = s.inner
        if inner not in ratio_cache:
            ratio_cache[inner] = young.dim_ratio_exact(inner, nu)
        r = ratio_cache[inner]
        est[a] = est.get(a, Fraction(0)) + r
        by_schedule[shape_of(word_of_filling(s))] += r
    return EstimateReport(t.size, m, k, l, nu, est, dict(by_schedule))


def tail_estimate(w: Sequence[int] | np.ndarray, n: int, m: int, k: int, l: int = 0) -> EstimateReport:
    """Ergodic estimates along ``w`` at level ``n`` for all cylinders of length ``m``."""
    arr = np.asarray(w, dtype=np.int64)[:n]
    if len(arr) < n:
        raise ValueError(f"word shorter than n = {n}")
    if m == 0:
        return EstimateReport(n, 0, k, l, (), {(): Fraction(1)}, {(): Fraction(1)})
    t = youngize(arr, k, l).p_tableau()
    return tail_estimate_tableau(t, m, k, l)


def shape_cylinder_sum(report: EstimateReport, lam: Sequence[int]) -> Fraction:
    lam = dg.diagram(lam)
    return sum((v for a, v in report.estimates.items() if shape_of(a) == lam), Fraction(0))


@dataclass
class ShapeCheck:
    shape: Diagram
    target: Fraction
    per_seed: list[float]

    @property
    def mean(self) -> float:
        return sum(self.per_seed) / len(self.per_seed)

    @property
    def deviation(self) -> float:
        return self.mean - float(self.target)


@dataclass
class ThomaReport:
    spec: BernoulliSpec
    n: int
    m: int
    seeds: list[int]
    tolerance: float
    shapes: list[ShapeCheck]
    reports: dict[int, list[EstimateReport]]

    @property
    def max_deviation(self) -> float:
        return max(abs(s.deviation) for s in self.shapes)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def thoma_target(lam: Sequence[int], spec: BernoulliSpec) -> Fraction:
    return young.thoma_cylinder(lam, spec.thoma())


def check_thoma(spec: BernoulliSpec, n: int, m: int, seeds: Sequence[int], tolerance: float = 0.02,
                target: Callable[[Diagram], Fraction] | None = None, jobs: int = 1) -> ThomaReport:
    """Seed-averaged shape sums of the estimates against M(C_lambda) for
    every lambda with 1..m cells."""
    target = target or (lambda lam: thoma_target(lam, spec))

    def one(seed: int) -> list[EstimateReport]:
        w = sample_word(spec.with_seed(seed), n)
        t = youngize(w, spec.k, spec.l).p_tableau()
        return [tail_estimate_tableau(t, j, spec.k, spec.l) for j in range(1, m + 1)]

    results = _map_seeds(one, list(seeds), jobs)
    shapes = []
    for j in range(1, m + 1):
        sums = [r[j - 1].shape_sums() for r in results]
        for lam in _shapes(j, spec.k, spec.l):
            shapes.append(ShapeCheck(lam, target(lam), [float(s[lam]) for s in sums]))
    return ThomaReport(spec, n, m, list(seeds), tolerance, shapes, dict(zip(seeds, results)))


def equal_density_target(lam: Sequence[int], k: int) -> Fraction:
    """dim(lambda) * d_lambda(k) / k^|lambda|."""
    return Fraction(young.dim(lam) * young.count_ssyt(lam, k), k ** sum(lam))


def check_equal_density_case(k: int, n: int, m: int, seeds: Sequence[int], tolerance: float = 0.02,
                             jobs: int = 1) -> ThomaReport:
    spec = BernoulliSpec.uniform(k)
    for j in range(1, m + 1):
        for lam in dg.partitions(j, k):
            uniform = [Fraction(1, k)] * k
            if equal_density_target(lam, k) != young.dim(lam) * young.schur(lam, uniform):
                raise ArithmeticError(f"d_lambda/k^m differs from s_lambda(1/k, ...) at {lam}")
    return check_thoma(spec, n, m, seeds, tolerance, target=lambda lam: equal_density_target(lam, k), jobs=jobs)


# -- degenerate measures -------------------------------------------------------

def maximal_path_word(shapes_rows: Sequence[int], k: int) -> np.ndarray:
    """Word whose SW_k path runs through the maximal tableaux over a Y_k path.

    ``shapes_rows[t]`` is the 0-based row receiving a cell at step t; adding a
    cell to row i of a maximal tableau is inserting ``k - i`` (1-based
    ``k - i + 1``).
    """
    rows = np.asarray(shapes_rows, dtype=np.int64)
    if rows.size and rows.max() >= k:
        raise ValueError("path leaves Y_k")
    return (k - rows).astype(np.int64)


@dataclass
class DegenerateReport:
    k: int
    n: int
    m: int
    maximal: EstimateReport
    bernoulli: EstimateReport
    zero_cylinders: list[Word]
    bernoulli_all_positive: bool
    shape_sums_agree: bool


def degenerate_measure_demo(spec: BernoulliSpec, n: int, m: int) -> DegenerateReport:
    """Run the estimator on the maximal-tableau lift of a Y_k path (grown by
    youngizing a Bernoulli word) and on the Bernoulli word itself."""
    if spec.mixed:
        raise ValueError("degenerate demo implemented for row alphabets")
    w = sample_word(spec, n)
    stats = youngize(w, spec.k)
    mw = maximal_path_word(stats.new_rows, spec.k)
    maximal = tail_estimate(mw, n, m, spec.k)
    bern = tail_estimate(w, n, m, spec.k)
    zeros = sorted(a for a, v in maximal.estimates.items() if v == 0)
    return DegenerateReport(
        spec.k, n, m, maximal, bern, zeros,
        all(v > 0 for v in bern.estimates.values()),
        maximal.shape_sums() == bern.shape_sums(),
    )


def oscillating_word(n: int, low: float = 0.2, high: float = 0.8, seed: int = 0) -> np.ndarray:
    """Binary word whose density of 1s alternates between ``low`` and ``high``
    on blocks of doubling length, so no density exists."""
    rng = generator(seed)
    out = np.empty(n, dtype=np.int64)
    start, length, flip = 0, 16, False
    while start < n:
        end = min(n, start + length)
        p1 = high if flip else low
        out[start:end] = np.where(rng.random(end - start) < p1, 1, 2)
        start, length, flip = end, length * 2, not flip
    return out


def oscillating_density_demo(n: int, checkpoints: Sequence[int], seed: int = 0) -> list[dict]:
    """Normalised first row and C_[1] estimate along an oscillating word;
    both keep swinging instead of converging."""
    w = oscillating_word(n, seed=seed)
    out = []
    for c in checkpoints:
        t = youngize(w[:c], 2).p_tableau()
        est = tail_estimate_tableau(t, 1, 2)
        out.append({"n": c, "freq_1": float(np.mean(w[:c] == 1)),
                    "row1": t.shape[0] / c, "C_1": float(est.estimates[(1,)])})
    return out


def estimate_rows(report: EstimateReport, spec: BernoulliSpec, seed: int) -> list[dict]:
    """CSV-ready rows for one estimate report."""
    rows = []
    for a in sorted(report.estimates):
        ref = spec.cylinder(a)
        v = report.estimates[a]
        rows.append({"seed": seed, "kind": "cylinder", "m": report.m, "key": format_word(a),
                     "estimate": float(v), "reference": float(ref), "deviation": float(v - ref)})
    for lam, v in report.shape_sums().items():
        ref = thoma_target(lam, spec)
        rows.append({"seed": seed, "kind": "shape", "m": report.m, "key": ",".join(map(str, lam)),
                     "estimate": float(v), "reference": float(ref), "deviation": float(v - ref)})
    return rows
