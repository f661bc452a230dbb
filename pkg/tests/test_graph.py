import pytest
from hypothesis import given, settings, strategies as st

from schurweyl import diagrams as dg
from schurweyl import graph as G
from schurweyl import young
from schurweyl.errors import EnumerationLimitError, ShapeError
from schurweyl.rsk import rsk, words
from schurweyl.symbols import alphabet, star
from schurweyl.tableau import EMPTY, insert_row, is_hook_semistandard, semistandard_tableaux, tableau


def test_first_level():
    g = G.build(2, 0, 1)
    assert g.levels[1] == (tableau([[1]]), tableau([[2]]))
    assert sorted((e.label, e.tgt) for e in g.edges[0]) == [(1, 0), (2, 1)]


def test_vertex_counts_match_ssyt():
    g = G.build(3, 0, 5)
    for n, level in enumerate(g.levels):
        assert len(level) == sum(young.count_ssyt(lam, 3) for lam in dg.partitions(n, 3))
        assert set(g.out_degrees(n)) == ({3} if n < g.depth else {0})


def test_out_degree_and_path_counts():
    g = G.build(2, 1, 4)
    assert all(d == 3 for n in range(4) for d in g.out_degrees(n))
    counts = g.path_counts()
    assert [sum(c) for c in counts] == [3 ** n for n in range(5)]
    # paths to a vertex = plactic class size = dim of the shape
    for n, level in enumerate(g.levels):
        for t, c in zip(level, counts[n]):
            assert c == young.dim(t.shape)


def test_path_count_equals_dim_pure():
    g = G.build(2, 0, 7)
    for n, level in enumerate(g.levels):
        for t, c in zip(level, g.path_counts()[n]):
            assert c == young.dim(t.shape)


def test_mixed_vertices_are_hook_tableaux():
    g = G.build(1, 2, 4)
    assert all(is_hook_semistandard(t, 1, 2) for level in g.levels for t in level)


def test_build_guards():
    with pytest.raises(ValueError):
        G.build(0, 0, 2)
    with pytest.raises(EnumerationLimitError):
        G.build(3, 0, 10, limit=100)


def test_build_jobs_same_graph():
    assert G.build(2, 1, 4, jobs=3) == G.build(2, 1, 4)


# -- projection to the Young graph ----------------------------------------------------

def test_fiber():
    assert len(G.fiber((2, 1), 2)) == 2
    assert G.fiber((1, 1, 1), 2) == []
    assert len(G.fiber((2, 1), 1, 1)) == 2


def test_projection_is_young_graph():
    g = G.build(3, 0, 4)
    proj = G.project_graph(g)
    y = G.build_young(3, 4)
    assert proj.levels == y.levels
    assert [set((e.src, e.tgt) for e in es) for es in proj.edges] == [set((e.src, e.tgt) for e in es) for es in y.edges]
    assert G.project(tableau([[1, 1], [2]])) == (2, 1)


# -- k = 2 codes ---------------------------------------------------------------------

def test_sw2_examples():
    assert G.encode_sw2(tableau([[1, 1, 2], [2]])) == ((3, 1), 1)
    assert G.decode_sw2(((3, 1), 1)) == tableau([[1, 1, 2], [2]])
    assert G.decode_sw2(((), 0)) == EMPTY
    with pytest.raises(ValueError):
        G.decode_sw2(((2, 1), 2))
    with pytest.raises(ShapeError):
        G.decode_sw2(((1, 1, 1), 0))


@pytest.mark.parametrize("n", range(8))
def test_sw2_code_bijection(n):
    tabs = [t for lam in dg.partitions(n, 2) for t in semistandard_tableaux(lam, 2)]
    codes = G.sw2_codes(n)
    assert len(codes) == len(tabs)
    assert sorted(G.encode_sw2(t) for t in tabs) == sorted(codes)
    assert all(G.encode_sw2(G.decode_sw2(c)) == c for c in codes)


def test_sw2_edges():
    g = G.build(2, 0, 6)
    for n in range(6):
        for e in g.edges[n]:
            a, b = G.encode_sw2(g.levels[n][e.src]), G.encode_sw2(g.levels[n + 1][e.tgt])
            assert b in G.sw2_code_successors(a)
            assert G.sw2_edge_allowed(a, b)


def test_sw2_stated_condition_is_not_sufficient():
    # from ((1,), 0) the stated condition allows three targets, yet only two letters exist
    code = G.Sw2Code((1,), 0)
    allowed = [c for c in G.sw2_codes(2) if G.sw2_edge_allowed(code, c)]
    assert len(allowed) == 3
    assert len(G.sw2_code_successors(code)) == 2


# -- maximal tableaux -----------------------------------------------------------

def test_maximal_examples():
    assert G.maximal_tableau((2,), 2) == tableau([[2, 2]])
    assert G.maximal_tableau((2, 2), 2) == tableau([[1, 1], [2, 2]])
    assert G.maximal_tableau((2, 1, 1), 2, 2) == tableau([[1, 2], [2], [star(1)]])


@pytest.mark.parametrize("k", [2, 3])
def test_maximal_family_is_edge_closed(k):
    for n in range(7):
        for lam in dg.partitions(n, k):
            t = G.maximal_tableau(lam, k)
            for row in range(1, k + 1):
                mu = dg.add_cell(lam, row)
                if mu is None:
                    continue
                new, _ = insert_row(t, k - row + 1)
                assert new == G.maximal_tableau(mu, k)


def test_k1_l1_has_no_edge_closed_family():
    g = G.build(1, 1, 2)
    one = g.levels[1]
    shapes_from = [{g.levels[2][e.tgt].shape for e in g.edges[1] if e.src == i} for i in range(len(one))]
    assert all(not {(2,), (1, 1)} <= s for s in shapes_from)


# -- paths ---------------------------------------------------------------------

def test_word_to_path_example():
    path = G.word_to_path([2, 1, 2])
    assert path == [EMPTY, tableau([[2]]), tableau([[1], [2]]), tableau([[1, 2], [2]])]
    assert path[-1] == rsk([2, 1, 2]).p


@pytest.mark.parametrize("n", range(7))
def test_path_round_trip(n):
    for w in words(2, n):
        assert G.path_to_word(G.word_to_path(w)) == w


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(alphabet(2, 2)), max_size=9))
def test_mixed_path_round_trip(w):
    assert G.path_to_word(G.word_to_path(w), mixed=True) == tuple(w)


def test_path_to_word_rejects_non_edge():
    with pytest.raises(ShapeError):
        G.path_to_word([EMPTY, tableau([[1]]), tableau([[2, 2]])])


# -- export ---------------------------------------------------------------------

def test_export_deterministic():
    a, b = G.build(2, 0, 3), G.build(2, 0, 3)
    assert a.to_text() == b.to_text() and a.to_json() == b.to_json()
    text = a.to_text()
    assert text.startswith("# k=2 l=0 depth=3\n")
    assert "V 0 0 ∅" in text and "E 0 0 1 0" in text


def test_export_depth0():
    import json

    g = G.build(2, 0, 0)
    assert json.loads(g.to_json()) == {"k": 2, "l": 0, "depth": 0, "levels": [["∅"]], "edges": []}
