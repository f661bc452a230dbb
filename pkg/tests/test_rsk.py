import pytest
from hypothesis import given, settings, strategies as st

from schurweyl import diagrams as dg
from schurweyl import young
from schurweyl.errors import EnumerationLimitError, InvalidSymbolError, ScheduleError
from schurweyl.rsk import (SkewDecreasingFilling, c_a_bruteforce, c_a_formula, c_a_terms, coplactic_class,
                           d_of_filling, fillings, greene_from_shape, greene_invariants, is_lattice_word, phi,
                           plactic_class, psi, rsk, rsk_inverse, rsk_mixed, rsk_mixed_star, rsk_star, shape_of,
                           word_of_filling, words)
from schurweyl.symbols import alphabet, dagger, rev, star
from schurweyl.tableau import EMPTY, evacuation, tableau, transpose

T212 = tableau([[1, 2], [2]])

row_words = st.lists(st.integers(1, 3), max_size=9)
mixed_words = st.lists(st.sampled_from(alphabet(2, 2)), max_size=9)


def test_rsk_examples():
    assert rsk([]) == (EMPTY, EMPTY)
    assert rsk([1, 1, 2]) == (tableau([[1, 1, 2]]), tableau([[1, 2, 3]]))
    assert rsk([2, 1, 2]) == (T212, tableau([[1, 3], [2]]))


def test_rsk_rejects_starred():
    with pytest.raises(InvalidSymbolError):
        rsk([1, star(1)])


@given(row_words)
def test_rsk_inverse(w):
    p, q = rsk(w)
    assert rsk_inverse(p, q) == tuple(w)
    assert p.shape == q.shape and len(p.shape) <= 3


@given(row_words)
def test_star_inverse(w):
    p, q = rsk_star(w)
    assert rsk_inverse(p, q, "dual") == tuple(w)


@given(mixed_words)
def test_mixed_inverse(w):
    for fold, variant in ((rsk_mixed, "mixed"), (rsk_mixed_star, "mixed_dual")):
        p, q = fold(w)
        assert rsk_inverse(p, q, variant) == tuple(w)


@given(row_words)
def test_q_grows_by_one_cell(w):
    prev = EMPTY
    for n in range(1, len(w) + 1):
        q = rsk(w[:n]).q
        assert [list(r) for r in q.rows if r] != []
        cells = {c for c, v in q if v < n}
        assert cells == {c for c, _ in prev} and n in q.entries()
        prev = q


@given(row_words)
def test_duality(w):
    p, q = rsk(w)
    assert rsk_star(rev(w)) == (transpose(p), evacuation(transpose(q)))


@given(mixed_words)
def test_mixed_dagger_transposes_q(w):
    assert rsk_mixed(dagger(w)).q == transpose(rsk_mixed(w).q)


# -- psi ---------------------------------------------------------------------------

def test_psi_examples():
    # equal symbols stack down column 1 under dual insertion
    assert psi([1, 1, 1]) == (1, 1, 1)
    assert psi([2, 1]) == (1, 1)
    assert psi([1, 2]) == (1, 2)


@given(row_words)
def test_psi_keeps_recording_tableau(u):
    v = psi(u)
    assert len(v) == len(u) and is_lattice_word(v)
    assert rsk(rev(v)).q == rsk(rev(u)).q


@given(mixed_words)
def test_mixed_psi_keeps_recording_tableau(u):
    v = psi(u, mixed=True)
    assert rsk_mixed(rev(v)).q == rsk_mixed(rev(u)).q


def test_lattice_word():
    assert is_lattice_word([1, 1, 2, 3, 2])
    assert not is_lattice_word([1, 2, 2])


# -- fillings, phi, c_a ----------------------------------------------------------------

def test_filling_examples():
    s = SkewDecreasingFilling.from_cells((3, 2), {(1, 3): 1, (2, 2): 2})
    assert word_of_filling(s) == (1, 2)
    assert s.inner == (2, 1)
    assert d_of_filling(s) == 2
    assert word_of_filling(SkewDecreasingFilling.from_cells((2,), {(1, 2): 1})) == (1,)
    assert d_of_filling(SkewDecreasingFilling.from_rows((3, 1), [2])) == 1


def test_filling_rejects_bad_schedule():
    with pytest.raises(ScheduleError):
        SkewDecreasingFilling.from_cells((2, 2), {(1, 2): 1})
    with pytest.raises(ScheduleError):
        SkewDecreasingFilling.from_cells((2, 1), {(1, 2): 2, (2, 1): 2})


def test_fillings_count():
    # schedules of all of nu are the standard tableaux of nu
    for lam in dg.partitions(5):
        assert sum(1 for _ in fillings(lam, 5)) == young.dim(lam)


def test_phi_examples():
    assert phi(T212, SkewDecreasingFilling(T212.shape)) == ()
    assert phi(T212, SkewDecreasingFilling.from_cells((2, 1), {(1, 2): 1})) == (2,)
    with pytest.raises(ScheduleError):
        phi(T212, SkewDecreasingFilling((2,), ((1, 2),)))


def test_c_a_examples():
    assert c_a_formula(T212, []) == young.dim(T212.shape) == 2
    assert c_a_formula(T212, [2]) == c_a_bruteforce(T212, [2], 2) == 2
    assert c_a_formula(T212, [1]) == c_a_bruteforce(T212, [1], 2) == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=6), st.data())
def test_c_a_formula_matches_enumeration(w, data):
    t = rsk(w).p
    m = data.draw(st.integers(0, len(w)))
    a = data.draw(st.lists(st.integers(1, 3), min_size=m, max_size=m))
    assert c_a_formula(t, a) == c_a_bruteforce(t, a, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(alphabet(1, 2)), max_size=5), st.data())
def test_mixed_c_a(w, data):
    t = rsk_mixed(w).p
    m = data.draw(st.integers(0, len(w)))
    a = data.draw(st.lists(st.sampled_from(alphabet(1, 2)), min_size=m, max_size=m))
    assert c_a_formula(t, a, mixed=True) == c_a_bruteforce(t, a, 1, 2)


@given(st.lists(st.integers(1, 3), max_size=7), st.integers(0, 3))
def test_shape_of_w_s(w, m):
    t = rsk(w).p
    for a, s in c_a_terms(t, min(m, len(w))):
        assert shape_of(word_of_filling(s)) == shape_of(a)


def test_bruteforce_guard():
    big = rsk([1, 2, 3] * 6).p
    with pytest.raises(EnumerationLimitError):
        c_a_bruteforce(big, [], 3)


# -- classes --------------------------------------------------------------------

def test_plactic_examples():
    assert plactic_class(tableau([[1, 1]])) == [(1, 1)]
    assert plactic_class(T212) == [(2, 1, 2), (2, 2, 1)]


def test_plactic_class_size():
    for lam in dg.partitions(5, 3):
        t = rsk([x for i, r in enumerate(lam, 1) for x in [i] * r]).p
        assert len(plactic_class(t)) == young.dim(t.shape)


def test_coplactic_partition():
    seen = set()
    qs = {rsk(w).q for w in words(2, 5)}
    for q in qs:
        cls = coplactic_class(q, 2)
        assert all(rsk(w).q == q for w in cls)
        seen.update(cls)
    assert seen == set(words(2, 5))


# -- Greene ---------------------------------------------------------------------

def test_greene_examples():
    assert greene_invariants([1, 2, 3], 1) == (3,)
    assert greene_invariants([2, 1, 2], 1) == (2,) == (shape_of([2, 1, 2])[0],)
    # equal starred symbols are decreasing, not increasing
    assert greene_invariants([star(1), star(1)], 1) == (1,)
    assert greene_invariants([star(1), star(1)], 1, decreasing=True) == (2,)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(alphabet(2, 2)), min_size=1, max_size=8))
def test_greene_matches_shape(w):
    depth = 2
    assert greene_invariants(w, depth) == greene_from_shape(w, depth)
    assert greene_invariants(w, depth, True) == greene_from_shape(w, depth, True)


def test_greene_guard():
    with pytest.raises(EnumerationLimitError):
        greene_invariants([1] * 13, 1)
