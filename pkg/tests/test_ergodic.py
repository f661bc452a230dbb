import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schurweyl import ergodic as E
from schurweyl import young
from schurweyl.rsk import c_a_bruteforce, plactic_class, rsk, rsk_mixed, shape_of
from schurweyl.symbols import alphabet, star

F = Fraction


# -- sampling ------------------------------------------------------------------------

def test_spec_normalisation():
    s = E.BernoulliSpec(2, 0, (0.7, 0.3))
    assert s.p == (F(7, 10), F(3, 10))
    with pytest.raises(ValueError):
        E.BernoulliSpec(2, 0, (0.7, 0.4))
    with pytest.raises(ValueError):
        E.BernoulliSpec(2, 0, (1.2, -0.2))
    with pytest.raises(ValueError):
        E.BernoulliSpec(2, 1, (0.5, 0.5))


def test_degenerate_sampling():
    w = E.sample_word(E.BernoulliSpec(2, 0, (1, 0), seed=4), 1000)
    assert (w == 1).all()


def test_same_seed_same_word():
    s = E.BernoulliSpec(2, 2, (0.4, 0.2), (0.3, 0.1), seed=11)
    assert np.array_equal(E.sample_word(s, 5000), E.sample_word(s, 5000))
    assert not np.array_equal(E.sample_word(s, 5000), E.sample_word(s.with_seed(12), 5000))
    # prefixes are stable in n
    assert np.array_equal(E.sample_word(s, 100), E.sample_word(s, 5000)[:100])


@pytest.mark.parametrize("seed", range(5))
def test_frequency_within_clt_band(seed):
    n, p1 = 100_000, 0.7
    w = E.sample_word(E.BernoulliSpec(2, 0, (p1, 0.3), seed=seed), n)
    assert abs(np.mean(w == 1) - p1) <= 3 * math.sqrt(p1 * (1 - p1) / n)


def test_mixed_sampling_alphabet():
    s = E.BernoulliSpec(1, 2, (0.5,), (0.25, 0.25), seed=0)
    w = E.sample_word(s, 2000)
    assert set(int(x) for x in w) == {1, star(1), star(2)}
    assert s.cylinder([1, star(2)]) == F(1, 8)


# -- youngization / densities ---------------------------------------------------

def test_density_report_trivial():
    rep = E.check_density_theorem(E.BernoulliSpec(1, 0, (1,)), 1000, [0])
    assert rep.checks[0].row_lengths == [1.0] and rep.max_deviation == 0


def test_density_pure():
    rep = E.check_density_theorem(E.BernoulliSpec(3, 0, (0.5, 0.3, 0.2)), 100_000, [0, 1, 2])
    assert rep.max_deviation <= 0.01
    assert rep.passed


def test_density_mixed():
    rep = E.check_density_theorem(E.BernoulliSpec(2, 2, (0.4, 0.2), (0.3, 0.1)), 100_000, [0, 1, 2])
    assert rep.passed
    assert all(len(c.col_lengths) == 2 for c in rep.checks)


def test_density_unsorted_p_uses_sorted_targets():
    rep = E.check_density_theorem(E.BernoulliSpec(2, 0, (0.3, 0.7)), 50_000, [0])
    assert rep.checks[0].row_targets == [0.7, 0.3]
    assert rep.passed


def test_trajectory_invariants():
    s = E.BernoulliSpec(3, 0, (0.5, 0.3, 0.2), seed=2)
    stats = E.youngize(E.sample_word(s, 3000), 3, log_steps=range(500, 3001, 500))
    assert stats.counts.sum() == 3000
    for step, rows in zip(stats.log_steps, stats.row_lengths):
        assert rows.sum() == step
        assert list(rows) == sorted(rows, reverse=True)
    assert list(stats.q_tableau().entries()) != []


# -- estimates ------------------------------------------------------------------------

def test_estimate_m0():
    rep = E.tail_estimate([1, 2, 1], 3, 0, 2)
    assert rep.estimates == {(): 1}


def test_estimate_constant_word():
    rep = E.tail_estimate([1] * 20, 20, 3, 2)
    assert rep.estimates[(1, 1, 1)] == 1
    assert all(v == 0 for a, v in rep.estimates.items() if a != (1, 1, 1))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=1, max_size=7), st.integers(1, 3))
def test_estimate_is_class_frequency(w, m):
    m = min(m, len(w))
    t = rsk(w).p
    rep = E.tail_estimate(w, len(w), m, 2)
    assert rep.total() == 1
    dim = young.dim(t.shape)
    for a, v in rep.estimates.items():
        assert v == F(c_a_bruteforce(t, a, 2), dim)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(alphabet(1, 1)), min_size=1, max_size=6), st.integers(1, 2))
def test_mixed_estimate_is_class_frequency(w, m):
    m = min(m, len(w))
    t = rsk_mixed(w).p
    rep = E.tail_estimate(w, len(w), m, 1, 1)
    assert rep.total() == 1
    for a, v in rep.estimates.items():
        assert v == F(c_a_bruteforce(t, a, 1, 1), young.dim(t.shape))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=2, max_size=8), st.integers(1, 3))
def test_schedule_route_equals_word_route(w, m):
    # shape sums from Phi_T(S) agree with shape sums from w_S
    m = min(m, len(w))
    rep = E.tail_estimate(w, len(w), m, 3)
    by_shape = rep.shape_sums()
    assert {k: v for k, v in by_shape.items() if v} == {k: v for k, v in rep.schedule_shape_sums.items() if v}
    # and both equal dim(lambda) dim(nu / lambda) / dim(nu)
    nu = rep.shape
    for lam, v in by_shape.items():
        want = F(young.dim(lam) * young.skew_dim(lam, nu), young.dim(nu)) if all(
            i < len(nu) and lam[i] <= nu[i] for i in range(len(lam))) else 0
        assert v == want


def test_shape_sums_total_one():
    rep = E.tail_estimate(E.sample_word(E.BernoulliSpec(2, 0, (0.6, 0.4), seed=5), 300), 300, 3, 2)
    assert sum(rep.shape_sums().values()) == 1
    assert E.shape_cylinder_sum(rep, (3,)) + E.shape_cylinder_sum(rep, (2, 1)) == 1


def test_estimate_a1_close_to_p():
    w = E.sample_word(E.BernoulliSpec(2, 0, (0.7, 0.3), seed=0), 10_000)
    rep = E.tail_estimate(w, 10_000, 1, 2)
    assert abs(float(rep.estimates[(1,)]) - 0.7) <= 0.02


def test_estimate_guard():
    with pytest.raises(ValueError):
        E.tail_estimate([1, 2], 2, 3, 2)


# -- Thoma ------------------------------------------------------------------------

def test_thoma_targets():
    assert E.equal_density_target((2,), 2) == F(3, 4)
    assert E.equal_density_target((1, 1), 2) == F(1, 4)
    assert E.thoma_target((2,), E.BernoulliSpec.uniform(2)) == F(3, 4)


def test_thoma_small_run():
    rep = E.check_thoma(E.BernoulliSpec(2, 0, (0.7, 0.3)), 2000, 2, [0, 1])
    assert {s.shape for s in rep.shapes} == {(1,), (2,), (1, 1)}
    assert rep.max_deviation < 0.03


@pytest.mark.slow
def test_thoma_full_run():
    rep = E.check_thoma(E.BernoulliSpec(2, 0, (0.7, 0.3)), 10_000, 3, range(5))
    assert rep.passed, [(s.shape, s.deviation) for s in rep.shapes]


def test_seed_parallelism_is_deterministic():
    spec = E.BernoulliSpec(2, 0, (0.6, 0.4))
    a = E.check_thoma(spec, 1000, 2, [3, 1, 2], jobs=1)
    b = E.check_thoma(spec, 1000, 2, [3, 1, 2], jobs=3)
    assert [s.per_seed for s in a.shapes] == [s.per_seed for s in b.shapes]


def test_mixed_thoma_small():
    rep = E.check_thoma(E.BernoulliSpec(1, 1, (0.6,), (0.4,)), 2000, 2, [0])
    assert rep.max_deviation < 0.05


# -- degenerate and oscillating ---------------------------------------------------

def test_maximal_path_word():
    assert list(E.maximal_path_word([0, 0, 1], 2)) == [2, 2, 1]
    p = rsk([2, 2, 1]).p
    assert p.rows == ((1, 2), (2,))


def test_degenerate_demo():
    rep = E.degenerate_measure_demo(E.BernoulliSpec(2, 0, (0.6, 0.4), seed=1), 1500, 2)
    # any word whose P is maximal starts with 2
    assert rep.maximal.estimates[(1, 1)] == 0 and rep.maximal.estimates[(1, 2)] == 0
    assert (1, 1) in rep.zero_cylinders
    assert rep.bernoulli_all_positive
    assert rep.shape_sums_agree


def test_single_row_maximal_path_is_forced():
    w = E.maximal_path_word([0] * 12, 2)
    assert len(plactic_class(rsk(w).p)) == 1
    rep = E.tail_estimate(w, 12, 1, 2)
    assert rep.estimates == {(1,): 0, (2,): 1}


def test_oscillating_demo_keeps_swinging():
    rows = E.oscillating_density_demo(2 ** 15, [2 ** j for j in range(10, 16)])
    freq = [r["freq_1"] for r in rows]
    assert max(freq) - min(freq) > 0.1
    assert all(abs(r["row1"] - r["C_1"]) < 0.01 for r in rows)


def test_shape_of_helpers():
    assert shape_of((1, 2, 1)) == (2, 1)
