import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphabound.graphcore import (Graph, ParseError, connected_components,
                                  components_within, degree_profile,
                                  is_in_class, load_graph, parse_dimacs,
                                  parse_edge_list, parse_graph,
                                  require_in_class, write_dimacs,
                                  write_edge_list)


def small_graphs():
    """Hypothesis strategy: graphs on up to 9 vertices from random edge sets."""
    def build(n, picks):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [p for p, keep in zip(pairs, picks) if keep]
        return Graph(n, edges)
    return st.integers(1, 9).flatmap(
        lambda n: st.builds(build, st.just(n),
                            st.lists(st.booleans(), min_size=n * (n - 1) // 2,
                                     max_size=n * (n - 1) // 2)))


def test_construction_and_adjacency():
    g = Graph(4, [(0, 1), (1, 0), (2, 3), (1, 3)])  # duplicate collapses
    assert g.n == 4 and g.m == 3
    assert g.adj[1] == (0, 3)
    assert g.neighbors(3) == (1, 2)
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert list(g.edges()) == [(0, 1), (1, 3), (2, 3)]
    assert g.degree(1) == 2


def test_construction_validation():
    with pytest.raises(ValueError):
        Graph(-1)
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])


def test_labels():
    g = Graph(2, [(0, 1)], labels=["a", "b"])
    assert g.label_of(0) == "a"
    with pytest.raises(ValueError):
        Graph(2, [], labels=["only-one"])
    # labels don't affect equality
    assert g == Graph(2, [(0, 1)])


def test_degree_extremes():
    g = Graph(3, [(0, 1)])
    assert g.max_degree() == 1
    assert g.min_degree() == 0
    assert Graph(0).max_degree() == 0


def test_connectivity_and_completeness():
    assert Graph(1).is_connected()
    assert Graph(1).is_complete()
    assert not Graph(2).is_connected()
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert k4.is_complete() and k4.is_connected()
    assert not Graph(3, [(0, 1), (1, 2)]).is_complete()


def test_degree_profile_counts():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    p = degree_profile(g)
    assert p.delta_max == 3 and p.delta_min == 1
    assert p.count(1) == 3 and p.count(2) == 1 and p.count(3) == 1
    assert p.count(0) == 0 and p.count(99) == 0
    assert sum(p.sizes()) == g.n


def test_degree_profile_empty():
    with pytest.raises(ValueError, match="empty graph"):
        degree_profile(Graph(0))


def test_is_in_class():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert is_in_class(star, 3)
    assert not is_in_class(star, 4)           # wrong max degree
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert not is_in_class(k4, 3)              # complete graph excluded
    assert not is_in_class(Graph(5, [(0, 1), (0, 2), (0, 3)]), 3)  # disconnected
    with pytest.raises(ValueError, match=r"delta >= 3"):
        is_in_class(star, 2)


def test_require_in_class_messages():
    with pytest.raises(ValueError, match="empty graph"):
        require_in_class(Graph(0))
    with pytest.raises(ValueError, match="maximum degree 2 < 3"):
        require_in_class(Graph(3, [(0, 1), (1, 2)]))
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert require_in_class(star) == 3
    assert require_in_class(star, 3) == 3
    with pytest.raises(ValueError, match="not in class"):
        require_in_class(star, 4)
    with pytest.raises(ValueError, match="not connected"):
        require_in_class(Graph(5, [(0, 1), (0, 2), (0, 3)]))
    k4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(ValueError, match="complete graph on 4"):
        require_in_class(k4)


def test_components():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    comps = connected_components(g)
    assert comps == [frozenset({0, 1, 2}), frozenset({3, 4}), frozenset({5})]
    assert connected_components(g, removed=[1]) == [
        frozenset({0}), frozenset({2}), frozenset({3, 4}), frozenset({5})]
    with pytest.raises(ValueError, match="out of range"):
        connected_components(g, removed=[9])
    assert components_within(g, {0, 2, 3, 4}) == [
        frozenset({0}), frozenset({2}), frozenset({3, 4})]


# --- parsing ----------------------------------------------------------------

def test_parse_edge_list_basic():
    g = parse_edge_list("# comment\n0 1\n1 2\n\n2 0 # trailing\n")
    assert g.n == 3 and g.m == 3


def test_parse_edge_list_sparse_labels():
    g = parse_edge_list("10 20\n20 30\n")
    assert g.n == 3 and g.m == 2
    assert [g.label_of(v) for v in range(3)] == ["10", "20", "30"]


def test_parse_edge_list_errors():
    with pytest.raises(ParseError, match="line 1"):
        parse_edge_list("0 1 2\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("0 1\nx y\n")
    with pytest.raises(ParseError, match="self-loop"):
        parse_edge_list("3 3\n")
    with pytest.raises(ParseError, match="negative"):
        parse_edge_list("-1 2\n")


def test_parse_dimacs():
    g = parse_dimacs("c header\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    assert g.n == 4 and g.m == 3
    assert g.label_of(0) == "1"


@pytest.mark.parametrize("text,msg", [
    ("e 1 2\n", "before"),
    ("p edge 3 1\np edge 3 1\ne 1 2\n", "duplicate"),
    ("p edge 3 1\ne 1 4\n", "out of range"),
    ("p edge 3 1\ne 1 1\n", "self-loop"),
    ("p edge 3 1\nq what\n", "unrecognized"),
    ("c only comments\n", "missing"),
    ("p edge x 1\n", "header"),
])
def test_parse_dimacs_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_dimacs(text)


def test_parse_graph_sniffs_format():
    assert parse_graph("p edge 2 1\ne 1 2\n").m == 1
    assert parse_graph("0 1\n").m == 1


def test_load_graph_prefixes_path(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 1\n")
    with pytest.raises(ParseError, match="bad.txt"):
        load_graph(p)
    with pytest.raises(ParseError, match="no-such-file"):
        load_graph(tmp_path / "no-such-file")


def test_writers_roundtrip():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], labels=["a", "b", "c", "d"])
    out = write_edge_list(g, header="test")
    assert out.startswith("# test\n")
    # labels survive the trip
    g2 = parse_edge_list(write_edge_list(Graph(3, [(0, 2)])))
    assert g2.m == 1
    d = write_dimacs(g)
    g3 = parse_dimacs(d)
    assert g3.n == g.n and g3.m == g.m and g3 == g


@given(small_graphs())
@settings(max_examples=100, deadline=None)
def test_profile_identities(g):
    p = degree_profile(g)
    assert sum(p.sizes()) == g.n
    assert sum(i * p.count(i) for i in range(p.delta_max + 1)) == 2 * g.m


@given(small_graphs())
@settings(max_examples=100, deadline=None)
def test_components_partition(g):
    comps = connected_components(g)
    seen = sorted(v for c in comps for v in c)
    assert seen == list(range(g.n))
    # no edges between different components
    idx = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in g.edges():
        assert idx[u] == idx[v]


@given(small_graphs())
@settings(max_examples=60, deadline=None)
def test_dimacs_roundtrip(g):
    assert parse_dimacs(write_dimacs(g)) == g
