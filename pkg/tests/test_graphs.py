import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wpnlab.graphs import (
    Graph,
    Graph6Error,
    automorphism_count,
    bits,
    canonical_form,
    canonical_key,
    clique,
    contains_induced,
    cycle,
    empty,
    emit_adjacency_text,
    emit_graph6,
    is_isomorphic,
    parse_adjacency_text,
    parse_graph6,
    path,
    star,
)


def random_graph(n, mask):
    """Graph on n vertices from an edge-mask integer."""
    rows = [0] * n
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> e & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            e += 1
    return Graph(n, tuple(rows))


graphs_up_to_6 = st.integers(0, 6).flatmap(
    lambda n: st.builds(random_graph, st.just(n),
                        st.integers(0, (1 << (n * (n - 1) // 2)) - 1)))


def test_constructors():
    assert empty(4).edge_count() == 0
    assert clique(5).edge_count() == 10
    assert path(4).edge_count() == 3
    assert cycle(6).edge_count() == 6
    assert star(3).degrees() == [3, 1, 1, 1]
    assert sorted(cycle(5).degrees()) == [2] * 5


def test_invariant_validation():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # loop
    with pytest.raises(ValueError):
        Graph(1, (2,))  # bit beyond range
    with pytest.raises(ValueError):
        cycle(2)


def test_induced_and_complement():
    g = cycle(6)
    assert g.induced(0b000111).adj == path(3).adj
    assert g.complement().complement().adj == g.adj
    co = g.complement()
    assert co.edge_count() == 15 - 6


def test_components():
    g = clique(3).disjoint_union(empty(2))
    comps = g.component_masks()
    assert sorted(m.bit_count() for m in comps) == [1, 1, 3]
    assert not g.is_connected()
    assert cycle(5).is_connected()


def test_contains_induced_basics():
    assert contains_induced(cycle(6), path(4))
    assert not contains_induced(cycle(6), clique(3))
    assert contains_induced(cycle(6), empty(3))
    assert not contains_induced(cycle(5), empty(3))
    # C6 contains itself but no C5
    assert contains_induced(cycle(6), cycle(6))
    assert not contains_induced(cycle(6), cycle(5))
    assert contains_induced(clique(4), empty(0))


@given(graphs_up_to_6, st.integers(0, 5), st.integers(0, 1 << 10 - 1))
@settings(max_examples=60, deadline=None)
def test_contains_induced_matches_subset_oracle(g, hn, hmask):
    hn = min(hn, g.n)
    h = random_graph(hn, hmask % (1 << max(1, hn * (hn - 1) // 2)))
    oracle = any(
        is_isomorphic(g.induced(sum(1 << v for v in combo)), h)
        for combo in itertools.combinations(range(g.n), h.n))
    assert contains_induced(g, h) == oracle


@given(graphs_up_to_6, st.permutations(list(range(6))))
@settings(max_examples=80, deadline=None)
def test_canonical_form_is_relabeling_invariant(g, perm):
    relabeled = g.relabel(tuple(p for p in perm if p < g.n))
    assert canonical_key(relabeled) == canonical_key(g)
    assert is_isomorphic(relabeled, g)


def test_is_isomorphic_negative():
    assert not is_isomorphic(path(4), star(3))
    assert not is_isomorphic(cycle(6), clique(3).disjoint_union(clique(3)))


def test_automorphism_counts():
    assert automorphism_count(clique(5)) == 120
    assert automorphism_count(empty(4)) == 24
    assert automorphism_count(cycle(5)) == 10  # dihedral
    assert automorphism_count(cycle(6)) == 12
    assert automorphism_count(path(4)) == 2
    assert automorphism_count(star(4)) == 24


def test_canonical_form_idempotent():
    g = random_graph(5, 0b1010101)
    c = canonical_form(g)
    assert canonical_form(c).adj == c.adj


def test_graph6_known_values():
    assert emit_graph6(clique(3)) == "Bw"
    assert parse_graph6("Bw").adj == clique(3).adj
    assert emit_graph6(empty(0)) == "?"


@given(graphs_up_to_6)
@settings(max_examples=100, deadline=None)
def test_graph6_roundtrip(g):
    assert parse_graph6(emit_graph6(g)).adj == g.adj


def test_graph6_errors():
    with pytest.raises(Graph6Error, match="MalformedHeader"):
        parse_graph6("")
    with pytest.raises(Graph6Error, match="OutOfRangeByte"):
        parse_graph6("B\x7f")
    with pytest.raises(Graph6Error, match="TrailingBits"):
        parse_graph6("Bx")  # K3 with a nonzero padding bit


def test_adjacency_text_roundtrip():
    g = cycle(6)
    text = emit_adjacency_text(g)
    assert parse_adjacency_text(text).adj == g.adj
    assert parse_adjacency_text("n=3; edges: 0-1 1-2").adj == path(3).adj


def test_bits_iterator():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert list(bits(0)) == []
