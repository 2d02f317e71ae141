"""Inversion graphs, canonical forms, recognition, and the fork family."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from matchorder.permgraphs import (
    LabeledGraph,
    UnlabeledGraph,
    connected_components,
    fork_graph,
    fork_labeled,
    fork_permutation,
    from_dot,
    has_cycle,
    is_induced_subgraph,
    is_permutation_graph,
    is_subgraph,
    koh_ree_check,
    permutation_from_labeled,
    permutation_graph,
    to_dot,
)
from matchorder.permutations import Permutation, all_permutations


def complete(n):
    return LabeledGraph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def cycle(n):
    return LabeledGraph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def all_graphs(n):
    slots = list(itertools.combinations(range(1, n + 1), 2))
    for bits in itertools.product((0, 1), repeat=len(slots)):
        yield LabeledGraph(n, tuple(e for e, bit in zip(slots, bits) if bit))


def brute_isomorphic(g, h):
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    target = set(g.edges)
    for image in itertools.permutations(range(1, g.n + 1)):
        mapping = dict(zip(range(1, g.n + 1), image))
        if all(
            tuple(sorted((mapping[i], mapping[j]))) in target for i, j in h.edges
        ):
            return True
    return False


@st.composite
def labeled_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    slots = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(slots), unique=True)) if slots else []
    return LabeledGraph(n, tuple(chosen))


def test_labeled_graph_normalization():
    g = LabeledGraph(4, ((3, 1), (1, 3), (2, 4)))
    assert g.edges == ((1, 3), (2, 4))
    assert g.neighbors[1] == frozenset({3})
    assert g.degree_sequence == (1, 1, 1, 1)


def test_labeled_graph_validation():
    with pytest.raises(ValueError, match="self-loop"):
        LabeledGraph(3, ((2, 2),))
    with pytest.raises(ValueError, match="range"):
        LabeledGraph(3, ((1, 4),))
    with pytest.raises(ValueError, match="range"):
        LabeledGraph(3, ((0, 2),))


def test_graph_text_round_trip():
    text = "n=6; 1-4 2-4 3-4 3-5 3-6"
    g = LabeledGraph.from_text(text)
    assert g.to_text() == text
    assert LabeledGraph.from_text("n=4").to_text() == "n=4;"
    with pytest.raises(ValueError, match="n="):
        LabeledGraph.from_text("6; 1-2")
    with pytest.raises(ValueError, match="'1:2'"):
        LabeledGraph.from_text("n=3; 1:2")


def test_relabel():
    g = LabeledGraph(3, ((1, 2),))
    assert g.relabel({1: 3, 2: 1, 3: 2}).edges == ((1, 3),)
    with pytest.raises(ValueError, match="bijection"):
        g.relabel({1: 1, 2: 2, 3: 4})


def test_canonical_form_agrees_with_brute_isomorphism_on_four_vertices():
    graphs = list(all_graphs(4))
    canon = [UnlabeledGraph(g) for g in graphs]
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            assert (canon[a] == canon[b]) == brute_isomorphic(graphs[a], graphs[b])


def test_canonical_class_counts():
    # unlabeled simple graph counts 1, 2, 4, 11, 34 for n = 1..5
    for n, classes in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34)):
        assert len({UnlabeledGraph(g) for g in all_graphs(n)}) == classes


@settings(max_examples=60)
@given(labeled_graphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(g, rng):
    image = list(range(1, g.n + 1))
    rng.shuffle(image)
    relabeled = g.relabel(dict(zip(range(1, g.n + 1), image)))
    assert UnlabeledGraph(relabeled) == UnlabeledGraph(g)


def test_unlabeled_representative_is_isomorphic_to_the_input():
    g = LabeledGraph(5, ((1, 2), (2, 3), (3, 4), (2, 5)))
    u = UnlabeledGraph(g)
    assert brute_isomorphic(u.representative, g)
    assert u.representative.edges == u.canonical_edges


def test_permutation_graph_examples():
    assert permutation_graph(Permutation.from_text("412563")) == LabeledGraph.from_text(
        "n=6; 1-4 2-4 3-4 3-5 3-6"
    )
    assert permutation_graph(Permutation.from_text("3214")) == LabeledGraph.from_text(
        "n=4; 1-2 1-3 2-3"
    )
    assert permutation_graph(Permutation.from_text("123")).edges == ()


def test_characterization_check():
    assert koh_ree_check(LabeledGraph(3, ((1, 2), (2, 3)))) == (False, True)
    assert koh_ree_check(LabeledGraph(3, ((1, 3),))) == (True, False)
    assert koh_ree_check(complete(4)) == (True, True)
    assert koh_ree_check(LabeledGraph(4)) == (True, True)


def test_recovery_round_trip():
    for n in range(1, 6):
        for p in all_permutations(n):
            assert permutation_from_labeled(permutation_graph(p)) == p


def test_recovery_rejects_failing_graphs():
    with pytest.raises(ValueError, match="transitive=False"):
        permutation_from_labeled(LabeledGraph(3, ((1, 2), (2, 3))))
    with pytest.raises(ValueError, match="betweenness=False"):
        permutation_from_labeled(LabeledGraph(3, ((1, 3),)))


def test_recognition():
    triangle = LabeledGraph(3, ((1, 2), (1, 3), (2, 3)))
    assert is_permutation_graph(triangle) == Permutation((3, 2, 1))
    # triangle plus an isolated vertex: the isolated vertex may sit anywhere
    assert is_permutation_graph(
        LabeledGraph.from_text("n=4; 1-2 1-3 2-3")
    ) == Permutation((1, 4, 3, 2))
    assert is_permutation_graph(cycle(4)) == Permutation((3, 4, 1, 2))
    assert is_permutation_graph(cycle(5)) is None


def test_recognition_respects_the_cap():
    with pytest.raises(ValueError, match="capped"):
        is_permutation_graph(LabeledGraph(9))
    assert is_permutation_graph(LabeledGraph(9), cap=9) == Permutation(
        tuple(range(1, 10))
    )


def test_recognition_accepts_unlabeled_input():
    u = UnlabeledGraph(LabeledGraph(3, ((1, 2), (1, 3), (2, 3))))
    assert is_permutation_graph(u) == Permutation((3, 2, 1))


def test_fork_graph_shape():
    star = fork_graph(1)
    assert star.n == 5
    assert star.representative.degree_sequence == (4, 1, 1, 1, 1)
    two_path = fork_graph(2)
    assert two_path.n == 6
    assert two_path.representative.degree_sequence == (3, 3, 1, 1, 1, 1)
    for k in range(1, 7):
        g = fork_graph(k)
        assert len(g.representative.edges) == k + 3
        assert not has_cycle(g)
        assert len(connected_components(g)) == 1
    with pytest.raises(ValueError):
        fork_graph(0)


def test_fork_graph_ignores_labeling():
    # same star, hub placed differently
    assert fork_graph(1) == UnlabeledGraph(
        LabeledGraph(5, ((3, 1), (3, 2), (3, 4), (3, 5)))
    )


def test_fork_labeled_and_permutation():
    assert fork_labeled(1) == LabeledGraph.from_text("n=6; 1-4 2-4 3-4 3-5 3-6")
    assert fork_permutation(1) == Permutation.from_text("412563")
    assert fork_permutation(2) == Permutation.from_text("41263785")
    for n in range(1, 5):
        p = fork_permutation(n)
        assert len(p) == 2 * n + 4
        assert UnlabeledGraph(permutation_graph(p)) == fork_graph(2 * n)


def test_cycle_detection():
    assert has_cycle(complete(3))
    assert not has_cycle(LabeledGraph(4, ((1, 2), (2, 3), (3, 4))))
    assert not has_cycle(LabeledGraph(2))


def test_connected_components():
    g = LabeledGraph.from_text("n=6; 1-2 4-5")
    assert connected_components(g) == [
        frozenset({1, 2}),
        frozenset({3}),
        frozenset({4, 5}),
        frozenset({6}),
    ]


def test_subgraph_relations():
    path3 = LabeledGraph(3, ((1, 2), (2, 3)))
    assert is_subgraph(path3, complete(3))
    assert not is_induced_subgraph(path3, complete(3))
    assert is_induced_subgraph(path3, LabeledGraph(4, ((1, 2), (2, 3), (3, 4))))
    assert not is_subgraph(complete(3), cycle(5))


def test_forks_do_not_embed_in_each_other():
    assert not is_subgraph(fork_graph(2), fork_graph(4))
    assert not is_subgraph(fork_graph(4), fork_graph(2))


def test_rewritten_fork_start_sits_inside_the_larger_fork():
    inner = permutation_graph(Permutation.from_text("412635"))
    assert is_induced_subgraph(UnlabeledGraph(inner), fork_graph(4))


def test_subgraph_cap():
    with pytest.raises(ValueError, match="capped"):
        is_subgraph(LabeledGraph(2), LabeledGraph(11))


def test_dot_round_trip():
    g = LabeledGraph.from_text("n=4; 1-2 3-4")
    assert from_dot(to_dot(g)) == g
    rendered = to_dot(UnlabeledGraph(g))
    assert 'node [label=""];' in rendered
    assert from_dot(rendered) == UnlabeledGraph(g).representative
    with pytest.raises(ValueError, match="comment"):
        from_dot("graph g { 1 -- 2; }")


@settings(max_examples=60)
@given(labeled_graphs())
def test_dot_round_trip_random(g):
    assert from_dot(to_dot(g)) == g
