import pytest

from aspectra import graph as gr
from aspectra.graph import FamilySpec, Graph


def test_graph_rejects_loops_and_bad_indices():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_adjacency_is_symmetric():
    g = Graph(4, [(0, 1), (2, 1), (3, 0)])
    for u in range(4):
        for v in range(4):
            assert g.adjacent(u, v) == g.adjacent(v, u)
        assert not g.adjacent(u, u)


def test_complete():
    assert gr.complete(3).size() == 3
    assert gr.complete(1).size() == 0
    assert gr.complete(25).size() == 300


def test_path_star_cycle_empty():
    assert list(gr.path(3).edges()) == [(0, 1), (1, 2)]
    st = gr.star(4)
    assert st.degree(0) == 3 and all(st.degree(v) == 1 for v in (1, 2, 3))
    with pytest.raises(ValueError):
        gr.cycle(2)
    assert gr.empty(0).order == 0
    assert gr.cycle(5).degrees() == [2] * 5


def test_unions_and_copies():
    u = gr.disjoint_union(gr.complete(2), gr.complete(1))
    assert (u.order, u.size()) == (3, 1)
    assert gr.copies(3, gr.complete(1)) == gr.empty(3)
    two_p3 = gr.copies(2, gr.path(3))
    assert (two_p3.order, two_p3.size()) == (6, 4)
    assert not gr.is_connected(two_p3)


def test_join():
    assert gr.join(gr.complete(1), gr.empty(2)) == gr.star(3)
    c4 = gr.join(gr.empty(2), gr.empty(2))
    assert c4.degrees() == [2, 2, 2, 2] and c4.size() == 4
    g, h = gr.path(4), gr.cycle(3)
    assert gr.join(g, h).size() == g.size() + h.size() + g.order * h.order


@pytest.mark.parametrize("n", [3, 4, 10, 25])
def test_exception_graph_degrees(n):
    g = gr.exception_graph(n)
    assert g == gr.join(gr.complete(1), gr.disjoint_union(gr.complete(n - 2), gr.complete(1)))
    assert sorted(g.degrees(), reverse=True) == [n - 1] + [n - 2] * (n - 2) + [1]


def test_delete_vertices():
    k2, mapping = gr.delete_vertices(gr.complete(3), {0})
    assert k2 == gr.complete(2) and mapping == {1: 0, 2: 1}
    leaves, _ = gr.delete_vertices(gr.star(5), {0})
    assert leaves == gr.empty(4)
    assert gr.isolated_count(leaves) == 4
    rest, _ = gr.delete_vertices(gr.exception_graph(10), {0})
    assert rest == gr.disjoint_union(gr.complete(8), gr.complete(1))
    with pytest.raises(ValueError):
        gr.delete_vertices(gr.complete(3), {5})


def test_isolated_count_and_connectivity():
    assert gr.isolated_count(gr.empty(4)) == 4
    assert gr.isolated_count(gr.complete(3)) == 0
    assert gr.is_connected(gr.path(5))
    assert not gr.is_connected(gr.copies(2, gr.complete(2)))
    assert gr.is_connected(gr.empty(0))
    assert not gr.is_connected(gr.empty(2))


def test_family_spec_arithmetic():
    spec = FamilySpec(25, 3)
    assert (spec.clique2_size, spec.independents) == (19, 3)
    assert spec.clique2_size + spec.independents + spec.s == spec.n
    case3 = FamilySpec(11, 6)
    assert (case3.clique2_size, case3.independents) == (0, 5)
    assert FamilySpec(12, 6).clique2_size == 1
    with pytest.raises(ValueError):
        FamilySpec(10, 6)
    with pytest.raises(ValueError):
        FamilySpec(10, 0)


def test_extremal_family():
    assert gr.extremal_g1(FamilySpec(25, 1)) == gr.exception_graph(25)
    g = gr.extremal_g1(FamilySpec(11, 6))
    assert g == gr.join(gr.complete(6), gr.empty(5))
    assert gr.is_connected(gr.extremal_g1(FamilySpec(25, 3)))


@pytest.mark.parametrize("n", range(3, 30))
def test_extremal_family_order_and_connectivity(n):
    s = 1
    while (5 * s) // 3 + 1 <= n:
        g = gr.extremal_g1(FamilySpec(n, s))
        assert g.order == n and gr.is_connected(g)
        s += 1
