"""Verification suites run by ``schurweyl verify`` and the acceptance tests.

Every suite walks its cases in increasing size, so the first recorded
failure is a smallest counterexample.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import diagrams as dg
from . import ergodic as E
from . import graph as G
from . import young
from .rsk import (c_a_bruteforce, c_a_formula, c_a_terms, greene_from_shape, greene_invariants,
                  is_lattice_word, psi, rsk, rsk_inverse, rsk_mixed, rsk_star, shape_of,
                  word_of_filling, words)
from .symbols import alphabet, dagger, format_word, rev
from .tableau import evacuation, insert_row, semistandard_tableaux, to_text, transpose

MAX_FAILURES = 10


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, inputs: str, expected, actual) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append({"input": inputs, "expected": str(expected), "actual": str(actual)})
        else:
            self.details["truncated"] = True

    def check(self, ok: bool, inputs: str, expected, actual) -> None:
        self.cases += 1
        if not ok:
            self.fail(inputs, expected, actual)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in self.details.items() if not isinstance(v, (list, dict)))
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures, {self.wall:.2f}s{extra}"

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures, "wall": round(self.wall, 3), "details": self.details}


def _timed(name: str):
    def wrap(fn: Callable[..., None]) -> Callable[..., SuiteResult]:
        def run(**kw) -> SuiteResult:
            res = SuiteResult(name)
            t0 = time.perf_counter()
            fn(res, **kw)
            res.wall = time.perf_counter() - t0
            return res
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _pair_text(pair) -> str:
    return f"P={to_text(pair.p)} Q={to_text(pair.q)}"


# -- exact suites -----------------------------------------------------------------

@_timed("bijection")
def bijection(res: SuiteResult, ks: Iterable[int] = (2, 3), max_n: int = 7) -> None:
    """A^n <-> {(P, Q)}: injective, inverse recovers w, and
    sum_lambda dim(lambda) d_lambda(k) = k^n."""
    for k in ks:
        for n in range(max_n + 1):
            seen = {}
            for w in words(k, n):
                pair = rsk(w)
                key = (pair.p, pair.q)
                ok = key not in seen and rsk_inverse(pair.p, pair.q) == w
                res.check(ok, format_word(w), "distinct pair inverting to w", _pair_text(pair))
                seen[key] = w
            total = sum(young.dim(lam) * young.count_ssyt(lam, k) for lam in dg.partitions(n, k))
            res.check(total == k ** n == len(seen), f"k={k} n={n}", k ** n, f"{total} (pairs {len(seen)})")


@_timed("duality")
def duality(res: SuiteResult, max_k: int = 3, max_n: int = 6) -> None:
    """RSK*(rev w) = (P^t, evac(Q^t))."""
    for n in range(max_n + 1):
        for k in range(1, max_k + 1):
            for w in words(k, n):
                pair = rsk(w)
                got = rsk_star(rev(w))
                want_p, want_q = transpose(pair.p), evacuation(transpose(pair.q))
                res.check(got.p == want_p and got.q == want_q, format_word(w),
                          f"P={to_text(want_p)} Q={to_text(want_q)}", _pair_text(got))


def _tableaux(k: int, n: int):
    for lam in dg.partitions(n, k):
        yield from semistandard_tableaux(lam, k)


@_timed("focus")
def focus(res: SuiteResult, k: int = 2, max_size: int = 5, random_k: int = 3, random_size: int = 6,
          random_cases: int = 500, seed: int = 0) -> None:
    """c_a(T) from deletion schedules against counting the plactic class."""
    for n in range(max_size + 1):
        for t in _tableaux(k, n):
            for m in range(n + 1):
                for a in itertools.product(alphabet(k), repeat=m):
                    want = c_a_bruteforce(t, a, k)
                    got = c_a_formula(t, a)
                    res.check(got == want, f"T={to_text(t)} a={format_word(a)}", want, got)
    rng = random.Random(seed)
    for _ in range(random_cases):
        n = rng.randint(0, random_size)
        w = tuple(rng.randint(1, random_k) for _ in range(n))
        t = rsk(w).p
        m = rng.randint(0, n)
        # half the time take a prefix of a class member so c_a > 0
        a = w[:m] if rng.random() < 0.5 else tuple(rng.randint(1, random_k) for _ in range(m))
        want = c_a_bruteforce(t, a, random_k)
        got = c_a_formula(t, a)
        res.check(got == want, f"T={to_text(t)} a={format_word(a)}", want, got)


@_timed("shape")
def shape(res: SuiteResult, max_k: int = 3, max_n: int = 6) -> None:
    """Q(rev Psi(u)) = Q(rev u), Psi(u) lattice, and sh(w_S) = sh(Phi_T(S))."""
    for n in range(max_n + 1):
        for k in range(1, max_k + 1):
            for u in words(k, n):
                v = psi(u)
                want, got = rsk(rev(u)).q, rsk(rev(v)).q
                res.check(want == got and is_lattice_word(v), format_word(u),
                          to_text(want), f"{to_text(got)} psi={format_word(v)}")
            for t in _tableaux(k, n):
                for m in range(n + 1):
                    for a, s in c_a_terms(t, m):
                        ws = word_of_filling(s)
                        res.check(shape_of(ws) == shape_of(a), f"T={to_text(t)} m={m} w_S={format_word(ws)}",
                                  shape_of(a), shape_of(ws))


@_timed("vandermonde")
def vandermonde(res: SuiteResult, cases: int = 100, max_n: int = 5, seed: int = 0) -> None:
    """Delta_mu(x) = n_mu Delta(x) on random rational x."""
    rng = random.Random(seed)
    for _ in range(cases):
        n = rng.randint(1, max_n)
        x = [Fraction(rng.randint(-60, 60), rng.randint(1, 12)) for _ in range(n)]
        lam = sorted((rng.randint(0, 4) for _ in range(rng.randint(0, n))), reverse=True)
        mu = dg.diagram([v for v in lam if v])
        want = young.perm_count(mu, n) * young.vandermonde(x)
        got = young.vandermonde_mu(x, mu)
        res.check(got == want, f"x={[str(v) for v in x]} mu={mu}", want, got)


@_timed("dims")
def dims(res: SuiteResult, max_size: int = 12) -> None:
    """Hook length formula = Frobenius formula = number of Young-graph paths."""
    for n in range(max_size + 1):
        for lam in dg.partitions(n):
            a, b, c = young.dim_hook(lam), young.dim_frobenius(lam), young.dim_paths(lam)
            res.check(a == b == c, str(lam), a, f"frobenius={b} paths={c}")


@_timed("mixed-duality")
def mixed_duality(res: SuiteResult, k: int = 2, l: int = 2, max_n: int = 6, greene_n: int = 10,
                  greene_cases: int = 60, seed: int = 0) -> None:
    """Q~(w dagger) = Q~(w)^t; first row and column of sh P~(w) against
    brute-force Greene invariants."""
    for n in range(max_n + 1):
        for w in words(k, n, l):
            want = transpose(rsk_mixed(w).q)
            got = rsk_mixed(dagger(w)).q
            res.check(got == want, format_word(w), to_text(want), to_text(got))
    rng = random.Random(seed)
    letters = alphabet(k, l)
    for _ in range(greene_cases):
        n = rng.randint(1, greene_n)
        w = tuple(rng.choice(letters) for _ in range(n))
        for dec in (False, True):
            want = greene_from_shape(w, 1, dec)
            got = greene_invariants(w, 1, dec)
            res.check(got == want, f"{format_word(w)} {'column' if dec else 'row'}", want, got)


@_timed("graph")
def graph(res: SuiteResult, depth: int = 8, k: int = 3, k_depth: int = 5) -> None:
    """SW_2 against (lambda, r) codes, out-degrees, path counts, maximal tableaux."""
    g = G.build(2, 0, depth)
    for n in range(depth + 1):
        codes = [G.encode_sw2(t) for t in g.levels[n]]
        res.check(sorted(codes) == sorted(G.sw2_codes(n)) and len(set(codes)) == len(codes),
                  f"level {n}", len(G.sw2_codes(n)), len(set(codes)))
        res.check(all(G.decode_sw2(c) == t for c, t in zip(codes, g.levels[n])), f"level {n} decode", "inverse", "")
    for n in range(depth):
        got = {(G.encode_sw2(g.levels[n][e.src]), G.encode_sw2(g.levels[n + 1][e.tgt])) for e in g.edges[n]}
        want = {(c, d) for c in G.sw2_codes(n) for d in G.sw2_code_successors(c)}
        res.check(got == want, f"edges {n}->{n + 1}", sorted(want - got), sorted(got - want))
        bad = [(c, d) for c, d in got if not G.sw2_edge_allowed(c, d)]
        res.check(not bad, f"edges {n}->{n + 1} stated rule", [], bad)
    for gg in (g, G.build(k, 0, k_depth), G.build(1, 1, 4), G.build(2, 1, 4)):
        letters = len(alphabet(gg.k, gg.l))
        counts = gg.path_counts()
        for n in range(gg.depth + 1):
            if n < gg.depth:
                degs = gg.out_degrees(n)
                res.check(set(degs) == {letters}, f"k={gg.k} l={gg.l} out-degree level {n}", letters, sorted(set(degs)))
            wrong = [to_text(t) for t, c in zip(gg.levels[n], counts[n]) if c != young.dim(t.shape)]
            res.check(not wrong, f"k={gg.k} l={gg.l} path counts level {n}", "dim", wrong)
    for kk in (2, 3):
        y = G.build_young(kk, depth if kk == 2 else k_depth)
        for n in range(y.depth):
            for e in y.edges[n]:
                lam, mu = y.levels[n][e.src], y.levels[n + 1][e.tgt]
                s_lam, s_mu = G.maximal_tableau(lam, kk), G.maximal_tableau(mu, kk)
                hits = [s for s in alphabet(kk) if insert_row(s_lam, s)[0] == s_mu]
                res.check(len(hits) == 1, f"k={kk} S_{lam} -> S_{mu}", "one symbol", hits)
            # no other maximal tableau is reached: the image is an induced copy of Y_k
            maxes = {G.maximal_tableau(lam, kk) for lam in y.levels[n + 1]}
            for lam in y.levels[n]:
                s_lam = G.maximal_tableau(lam, kk)
                for s in alphabet(kk):
                    t = insert_row(s_lam, s)[0]
                    if t in maxes:
                        res.check(dg.contains(t.shape, lam), f"k={kk} S_{lam} + {s}", "edge of Y_k", t.shape)


@_timed("asymptotics")
def asymptotics(res: SuiteResult, n: int = 10_000, max_m: int = 3, rel_tol: float = 0.05,
                specs: Iterable[E.BernoulliSpec] | None = None, seeds: Iterable[int] = (0, 1, 2),
                checkpoints: int = 4) -> None:
    """dim(Lambda^a)/dim(Lambda) against the asymptotic product, along sampled
    trajectories at steps n/checkpoints, ..., n, with p_hat = Lambda/n."""
    specs = list(specs or (E.BernoulliSpec(2, 0, (0.7, 0.3)), E.BernoulliSpec(3, 0, (0.5, 0.3, 0.2))))
    worst = 0.0
    worst_true_p = 0.0
    for spec in specs:
        for seed in seeds:
            steps = [n * (i + 1) // checkpoints for i in range(checkpoints)]
            stats = E.youngize(E.sample_word(spec.with_seed(seed), n), spec.k, log_steps=steps)
            for step, rows in zip(stats.log_steps, stats.row_lengths):
                big = dg.diagram([int(r) for r in rows])
                for m in range(1, max_m + 1):
                    for a in itertools.product(alphabet(spec.k), repeat=m):
                        exact = young.dim_ratio(big, a)
                        approx = young.dim_ratio_asymp(big, a)
                        rel = abs(float(exact / approx) - 1) if approx else float("inf")
                        worst = max(worst, rel)
                        res.check(rel <= rel_tol, f"p={[str(x) for x in spec.p]} seed={seed} n={step} a={format_word(a)}",
                                  f"rel err <= {rel_tol}", rel)
                        if step == n:
                            true_p = young.dim_ratio_asymp(big, a, spec.thoma().alpha)
                            worst_true_p = max(worst_true_p, abs(float(exact / true_p) - 1))
    res.details["max_rel_error"] = round(worst, 6)
    res.details["max_rel_error_true_p"] = round(worst_true_p, 6)


# -- Monte Carlo suites ---------------------------------------------------------

@_timed("densities")
def densities(res: SuiteResult, n: int = 100_000, seeds: Iterable[int] = (0, 1, 2), tolerance: float = 0.015) -> None:
    """Normalised row (and column) lengths against the sorted densities."""
    worst = 0.0
    for spec in (E.BernoulliSpec(3, 0, (0.5, 0.3, 0.2)), E.BernoulliSpec(2, 2, (0.4, 0.2), (0.3, 0.1))):
        rep = E.check_density_theorem(spec, n, list(seeds), tolerance)
        for c in rep.checks:
            dev = max(c.row_deviation, c.col_deviation)
            worst = max(worst, dev)
            res.check(dev <= tolerance, f"k={spec.k} l={spec.l} seed={c.seed} n={n}",
                      f"deviation <= {tolerance}", f"rows={c.row_lengths} cols={c.col_lengths}")
        res.details[f"band_k{spec.k}_l{spec.l}"] = round(rep.binomial_band(), 6)
    res.details["max_deviation"] = round(worst, 6)


@_timed("thoma")
def thoma(res: SuiteResult, n: int = 10_000, m: int = 3, seeds: Iterable[int] = (0, 1, 2, 3, 4),
          tolerance: float = 0.02, exact_size: int = 6) -> None:
    """Seed-averaged shape sums against dim(lambda) s_lambda(p), for p=(0.7,0.3)
    and the uniform case, plus d_lambda(k)/k^m = s_lambda(1/k, ...)."""
    seeds = list(seeds)
    worst = 0.0
    runs = [("p=(0.7,0.3)", E.check_thoma(E.BernoulliSpec(2, 0, (0.7, 0.3)), n, m, seeds, tolerance)),
            ("uniform k=2", E.check_equal_density_case(2, n, m, seeds, tolerance))]
    for label, rep in runs:
        for s in rep.shapes:
            worst = max(worst, abs(s.deviation))
            res.check(abs(s.deviation) <= tolerance, f"{label} lambda={s.shape}", s.target, round(s.mean, 6))
    for k in (1, 2, 3, 4):
        for size in range(exact_size + 1):
            for lam in dg.partitions(size, k):
                lhs = Fraction(young.count_ssyt(lam, k), k ** size)
                rhs = young.schur(lam, [Fraction(1, k)] * k)
                res.check(lhs == rhs, f"k={k} lambda={lam}", lhs, rhs)
    res.details["max_deviation"] = round(worst, 6)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "bijection": bijection,
    "duality": duality,
    "focus": focus,
    "shape": shape,
    "vandermonde": vandermonde,
    "dims": dims,
    "asymptotics": asymptotics,
    "mixed-duality": mixed_duality,
    "graph": graph,
    "densities": densities,
    "thoma": thoma,
}


def run_suite(name: str, **kw) -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    return [SUITES[name](**kw)]
