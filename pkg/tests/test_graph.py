import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordal_grundy import (
    AddEdge,
    AddVertex,
    GraphError,
    RemoveEdge,
    RemoveVertex,
    apply_change,
    complement,
    from_edges,
    induced_subgraph,
    is_chordal,
    is_simplicial,
    is_split,
    max_degree,
)
from chordal_grundy.generators import complete, cycle, generate, parse_family, path, random_change, star


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


def test_from_edges_path():
    g = from_edges(3, [(0, 1), (1, 2)])
    assert g.adj[1] == {0, 2}
    assert g.num_edges() == 2


def test_from_edges_edgeless():
    g = from_edges(4, [])
    assert g.n == 4 and max_degree(g) == 0


def test_from_edges_dedups():
    assert from_edges(4, [(0, 1), (0, 1), (1, 0)]) == from_edges(4, [(0, 1)])


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)]])
def test_from_edges_rejects_out_of_range(edges):
    with pytest.raises(GraphError):
        from_edges(3, edges)


def test_from_edges_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        from_edges(3, [(1, 1)])


def test_complement_of_complete_is_edgeless(k4):
    assert complement(k4) == from_edges(4, [])


def test_complement_of_c5_has_five_edges(c5):
    # non-edges of the 5-cycle 0-1-2-3-4-0 are the five "diagonals"
    diagonals = {(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)}
    assert set(complement(c5).edges()) == diagonals


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_edges_plus_complement_edges(g):
    assert g.num_edges() + complement(g).num_edges() == g.n * (g.n - 1) // 2


def test_induced_subgraph_drops_middle_of_path(p3):
    h, remap = induced_subgraph(p3, {0, 2})
    assert h == from_edges(2, []) and remap == {0: 0, 2: 1}


def test_induced_subgraph_identity(c5):
    h, _ = induced_subgraph(c5, range(5))
    assert h == c5


def test_induced_subgraph_of_clique_is_clique():
    h, _ = induced_subgraph(complete(5), {0, 2, 4})
    assert h == complete(3)


def test_induced_subgraph_unknown_vertex(p3):
    with pytest.raises(GraphError):
        induced_subgraph(p3, {0, 7})


@pytest.mark.parametrize(
    "g, expected",
    [(complete(4), 3), (star(6), 5), (from_edges(4, []), 0), (from_edges(0, []), 0)],
)
def test_max_degree(g, expected):
    assert max_degree(g) == expected


def test_add_edge_closes_triangle(p3):
    assert apply_change(p3, AddEdge(0, 2)).graph == complete(3)


def test_remove_middle_vertex_of_path(p3):
    res = apply_change(p3, RemoveVertex(1))
    assert res.graph == from_edges(2, [])
    # vertex 2 moves into slot 1
    assert res.remap == {0: 0, 2: 1}


def test_add_vertex_to_edge():
    res = apply_change(complete(2), AddVertex((0, 1)))
    assert res.graph == complete(3) and res.added == 2


def test_remove_last_vertex_keeps_ids(p4):
    res = apply_change(p4, RemoveVertex(3))
    assert res.graph == path(3) and res.remap == {0: 0, 1: 1, 2: 2}


def test_remove_edge(p3):
    assert apply_change(p3, RemoveEdge(1, 2)).graph == from_edges(3, [(0, 1)])


@pytest.mark.parametrize(
    "change",
    [AddEdge(0, 1), AddEdge(0, 0), AddEdge(0, 9), RemoveEdge(0, 2), RemoveVertex(5), AddVertex((0, 0))],
)
def test_invalid_changes(p3, change):
    with pytest.raises(GraphError):
        apply_change(p3, change)


def test_random_changes_keep_invariants():
    rng = random.Random(3)
    g = generate("ktree:n=12,k=2", 3)
    for _ in range(200):
        g = apply_change(g, random_change(g, rng)).graph
        g.validate()


def test_k_tree_with_k1_is_a_tree():
    g = generate("ktree:n=5,k=1", 11)
    assert g.num_edges() == 4 and is_chordal(g)


def test_complete_family_every_vertex_simplicial():
    g = generate("complete:n=4")
    assert all(is_simplicial(g, v) for v in g.vertices)


def test_split_family_is_split():
    g = generate("split:s=3,c=3,p=0.5", 4)
    assert is_split(g)
    assert g.meta["clique"] == [0, 1, 2] and g.meta["stable"] == [3, 4, 5]


@pytest.mark.parametrize("n", [5, 10, 20, 30, 40, 50])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_k_trees_are_chordal(n, k):
    for seed in range(20):
        g = generate(f"ktree:n={n},k={k}", seed)
        g.validate()
        assert is_chordal(g)
        assert g.num_edges() == k * (k + 1) // 2 + (n - k - 1) * k


def test_generation_is_deterministic():
    assert generate("gnp:n=20,p=0.3", 5) == generate("gnp:n=20,p=0.3", 5)
    assert generate("pktree:n=20,k=2,q=0.5", 5) == generate("pktree:n=20,k=2,q=0.5", 5)


@pytest.mark.parametrize(
    "spec, message",
    [
        ("ktree:n=3,k=5", "n must exceed k"),
        ("cycle:n=2", "at least 3"),
        ("gnp:n=4,p=1.5", "probability"),
        ("blob:n=3", "unknown family"),
        ("ktree:n=5", "missing"),
        ("path:n=x", "must be int"),
        ("path:m=3", "bad parameter"),
    ],
)
def test_bad_family_specs(spec, message):
    with pytest.raises(GraphError, match=message):
        generate(parse_family(spec))


def test_family_spec_round_trips():
    spec = parse_family("split:s=5,c=5,p=0.5")
    assert str(spec) == "split:s=5,c=5,p=0.5"
    assert parse_family("ktree:k=2,n=20").k == 2


@settings(max_examples=50)
@given(graphs())
def test_validate_accepts_constructed_graphs(g):
    g.validate()


def test_cycle_family():
    assert cycle(4).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
