"""Exact dimensions, tableau counts, Schur and hook Schur functions, Thoma
cylinder measures, the dimension ratio asymptotics and the Vandermonde
convolution identity.

Scalars are exact when the inputs are: pass :class:`fractions.Fraction`
(or ints) and no rounding happens anywhere; floats go through unchanged.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from . import diagrams as dg
from .diagrams import Diagram
from .errors import ContainmentError, ShapeError
from .tableau import hook_semistandard_tableaux

Scalar = Union[int, Fraction, float]


def exact(x) -> Scalar:
    """Coerce ints, Fractions and decimal strings to Fraction; keep floats."""
    if isinstance(x, float):
        return x
    return Fraction(x)


# -- dimensions ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _dim_paths(lam: Diagram) -> int:
    if not lam:
        return 1
    return sum(_dim_paths(dg.remove_cell(lam, c.row)) for c in dg.corners(lam))


def dim_paths(lam: Sequence[int]) -> int:
    """Number of paths from the empty diagram to ``lam`` in the Young graph."""
    return _dim_paths(dg.diagram(lam))


def dim_hook(lam: Sequence[int]) -> int:
    lam = dg.diagram(lam)
    conj = dg.conjugate(lam)
    prod = 1
    for cell in dg.cells(lam):
        prod *= dg.hook(lam, cell, conj)
    return math.factorial(sum(lam)) // prod


def _frobenius_parts(lam: Diagram) -> tuple[Fraction, tuple[int, ...], tuple[int, ...]]:
    arms, legs = dg.frobenius(lam)
    d = len(arms)
    num, den = 1, 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= (arms[i] - arms[j]) * (legs[i] - legs[j])
    for i in range(d):
        for j in range(d):
            den *= arms[i] + legs[j] + 1
    return Fraction(num, den), arms, legs


def dim_frobenius(lam: Sequence[int]) -> int:
    """n! / prod(a_i! b_i!) * prod_{i<j}(a_i-a_j)(b_i-b_j) / prod_{i,j}(a_i+b_j+1)."""
    lam = dg.diagram(lam)
    v, arms, legs = _frobenius_parts(lam)
    fact = 1
    for x in arms + legs:
        fact *= math.factorial(x)
    out = Fraction(math.factorial(sum(lam)), fact) * v
    if out.denominator != 1:
        raise ArithmeticError(f"non-integral Frobenius dimension for {lam}")
    return out.numerator


dim = dim_hook


def _falling(top: int, bottom: int) -> int:
    """top! / bottom! for bottom <= top."""
    out = 1
    for x in range(bottom + 1, top + 1):
        out *= x
    return out


def dim_ratio_exact(mu: Sequence[int], nu: Sequence[int]) -> Fraction:
    """dim(mu) / dim(nu) for mu contained in nu, from the Frobenius formula in
    ratio form; no factorial of |nu| is ever materialised."""
    mu, nu = dg.diagram(mu), dg.diagram(nu)
    if not dg.contains(nu, mu):
        raise ContainmentError(f"{mu} is not contained in {nu}")
    v_mu, a_mu, b_mu = _frobenius_parts(mu)
    v_nu, a_nu, b_nu = _frobenius_parts(nu)
    fact = 1
    for coords_nu, coords_mu in ((a_nu, a_mu), (b_nu, b_mu)):
        for i, x in enumerate(coords_nu):
            fact *= _falling(x, coords_mu[i] if i < len(coords_mu) else 0)
    return Fraction(fact, _falling(sum(nu), sum(mu))) * v_mu / v_nu


@lru_cache(maxsize=None)
def _skew_dim(mu: Diagram, lam: Diagram) -> int:
    if lam == mu:
        return 1
    total = 0
    for c in dg.corners(lam):
        smaller = dg.remove_cell(lam, c.row)
        if dg.contains(smaller, mu):
            total += _skew_dim(mu, smaller)
    return total


def skew_dim(mu: Sequence[int], lam: Sequence[int]) -> int:
    """dim(mu, lam): number of standard fillings of lam / mu."""
    mu, lam = dg.diagram(mu), dg.diagram(lam)
    if not dg.contains(lam, mu):
        raise ContainmentError(f"{mu} is not contained in {lam}")
    return _skew_dim(mu, lam)


# -- semistandard counts and Schur functions -----------------------------------

def count_ssyt(lam: Sequence[int], k: int) -> int:
    """d_lambda(k) by the hook-content formula."""
    lam = dg.diagram(lam)
    conj = dg.conjugate(lam)
    num, den = 1, 1
    for cell in dg.cells(lam):
        num *= k + dg.content(cell)
        den *= dg.hook(lam, cell, conj)
    if num <= 0:
        return 0
    return num // den


def count_ssyt_enum(lam: Sequence[int], k: int) -> int:
    return sum(_contents(dg.diagram(lam), k, 0).values())


@lru_cache(maxsize=None)
def _contents(lam: Diagram, k: int, l: int) -> Counter:
    """Multiplicity vectors (in alphabet order) of all (k, l)-semistandard tableaux."""
    out: Counter = Counter()
    nsym = k + l
    from .symbols import alphabet

    pos = {s: i for i, s in enumerate(alphabet(k, l))}
    for t in hook_semistandard_tableaux(lam, k, l):
        vec = [0] * nsym
        for x in t.entries():
            vec[pos[x]] += 1
        out[tuple(vec)] += 1
    return out


def _evaluate(contents: Counter, weights: Sequence[Scalar]) -> Scalar:
    total: Scalar = 0
    for vec, coeff in contents.items():
        term: Scalar = coeff
        for w, e in zip(weights, vec):
            if e:
                term *= w ** e
        total += term
    return total


def schur(lam: Sequence[int], p: Sequence) -> Scalar:
    """s_lambda(p) as the sum over semistandard tableaux of prod p_i^{m_i}."""
    lam = dg.diagram(lam)
    p = [exact(x) for x in p]
    if len(lam) > len(p):
        return 0
    return _evaluate(_contents(lam, len(p), 0), p)


def hook_schur(lam: Sequence[int], alpha: Sequence, beta: Sequence) -> Scalar:
    """Sum over (k, l)-semistandard tableaux of prod alpha_i^{m_i} beta_j^{m_j*}."""
    lam = dg.diagram(lam)
    alpha = [exact(x) for x in alpha]
    beta = [exact(x) for x in beta]
    k, l = len(alpha), len(beta)
    if not dg.fits_hook(lam, k, l):
        return 0
    # alphabet order is 1..k, l*..1*
    weights = alpha + beta[::-1]
    return _evaluate(_contents(lam, k, l), weights)


@dataclass(frozen=True)
class ThomaParams:
    alpha: tuple = ()
    beta: tuple = ()

    def __post_init__(self) -> None:
        alpha = tuple(exact(x) for x in self.alpha)
        beta = tuple(exact(x) for x in self.beta)
        for name, seq in (("alpha", alpha), ("beta", beta)):
            if any(x < 0 for x in seq):
                raise ValueError(f"{name} has negative entries")
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"{name} must be nonincreasing")
        total = sum(alpha) + sum(beta)
        if self.is_exact_values(alpha + beta):
            if total != 1:
                raise ValueError(f"Thoma parameters must sum to 1, got {total}")
        elif abs(total - 1) > 1e-9:
            raise ValueError(f"Thoma parameters must sum to 1, got {total}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @staticmethod
    def is_exact_values(values) -> bool:
        return all(not isinstance(x, float) for x in values)

    @classmethod
    def from_densities(cls, p: Sequence, q: Sequence = ()) -> "ThomaParams":
        return cls(tuple(sorted((exact(x) for x in p), reverse=True)),
                   tuple(sorted((exact(x) for x in q), reverse=True)))


def thoma_cylinder(lam: Sequence[int], params: ThomaParams) -> Scalar:
    """M_(alpha, beta, 0)(C_lambda) = dim(lambda) * s~_lambda(alpha, beta)."""
    return dim(lam) * hook_schur(lam, params.alpha, params.beta)


# -- dimension ratios ----------------------------------------------------------

def remove_by_counts(lam: Sequence[int], counts: Sequence[int]) -> Diagram | None:
    """Delete counts[i] cells from row i+1 at once; None if that is not a diagram."""
    lam = list(dg.diagram(lam))
    if any(c > 0 and i >= len(lam) for i, c in enumerate(counts)):
        return None
    out = lam[:]
    for i, c in enumerate(counts):
        if c:
            out[i] -= c
    if not dg.is_diagram(out):
        return None
    return dg.diagram(out)


def remove_by_word(lam: Sequence[int], w: Sequence[int]) -> Diagram | None:
    """Delete a cell from row w_1, then w_2, ...; None if some step is illegal."""
    cur: Diagram | None = dg.diagram(lam)
    for r in w:
        cur = dg.remove_cell(cur, r)
        if cur is None:
            return None
    return cur


def multiplicities(a: Sequence[int], k: int) -> tuple[int, ...]:
    m = [0] * k
    for x in a:
        if not 1 <= x <= k:
            raise ShapeError(f"symbol {x} outside 1..{k}")
        m[x - 1] += 1
    return tuple(m)


def dim_ratio(big: Sequence[int], a: Sequence[int]) -> Fraction:
    """dim(Lambda^a) / dim(Lambda), Lambda^a deleting m_i cells from row i; 0 if illegal."""
    big = dg.diagram(big)
    k = max([len(big)] + [int(x) for x in a])
    small = remove_by_counts(big, multiplicities(a, k))
    return Fraction(0) if small is None else dim_ratio_exact(small, big)


def dim_ratio_word(big: Sequence[int], w: Sequence[int]) -> Fraction:
    small = remove_by_word(big, w)
    return Fraction(0) if small is None else dim_ratio_exact(small, big)


def dim_ratio_asymp(big: Sequence[int], a: Sequence[int], p_hat: Sequence | None = None) -> Scalar:
    """m_phat(C_a) * prod_{i<j} (x_i - x_j - (m_i - m_j)) / (x_i - x_j).

    ``x_i = Lambda_i - i`` for i = 1..k (k = len(p_hat)), extending the
    Frobenius arms below the Durfee square; only differences enter, so this is
    the same padding as shifting by any constant.  ``p_hat`` defaults to the
    normalised row lengths Lambda_i / |Lambda|.
    """
    big = dg.diagram(big)
    n = sum(big)
    if p_hat is None:
        k = max([len(big)] + [int(x) for x in a])
        p_hat = [Fraction(big[i] if i < len(big) else 0, n) for i in range(k)]
    p_hat = [exact(x) for x in p_hat]
    k = len(p_hat)
    m = multiplicities(a, k)
    x = [(big[i] if i < len(big) else 0) - (i + 1) for i in range(k)]
    out: Scalar = 1
    for i in range(k):
        if m[i]:
            out *= p_hat[i] ** m[i]
    for i in range(k):
        for j in range(i + 1, k):
            out *= Fraction(x[i] - x[j] - (m[i] - m[j]), x[i] - x[j])
    return out


# -- Vandermonde convolution -----------------------------------------------------

def vandermonde(x: Sequence) -> Scalar:
    """prod_{i<j} (x_i - x_j)."""
    x = [exact(v) for v in x]
    out: Scalar = 1
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            out *= x[i] - x[j]
    return out


def _padded(mu: Sequence[int], n: int) -> tuple[int, ...]:
    mu = tuple(mu)
    if len(mu) > n:
        raise ShapeError(f"{mu} has more than {n} parts")
    return mu + (0,) * (n - len(mu))


def vandermonde_mu(x: Sequence, mu: Sequence[int]) -> Scalar:
    """Sum of Vandermonde(x - zeta) over the distinct permutations zeta of mu."""
    x = [exact(v) for v in x]
    total: Scalar = 0
    for zeta in set(itertools.permutations(_padded(mu, len(x)))):
        total += vandermonde([xi - z for xi, z in zip(x, zeta)])
    return total


def perm_count(mu: Sequence[int], n: int | None = None) -> int:
    parts = _padded(mu, len(mu) if n is None else n)
    out = math.factorial(len(parts))
    for c in Counter(parts).values():
        out //= math.factorial(c)
    return out
