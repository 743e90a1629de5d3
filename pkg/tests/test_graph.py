import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordq.errors import CapacityError, Graph6ParseError, InvalidEditError
from chordq.graph import (
    Graph,
    Neither,
    Regular,
    SemiRegularBipartite,
    add_edge,
    classify_regularity,
    complement,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    is_bipartite,
    is_connected,
    iter_graph6_lines,
    join,
    k_copies,
    path_graph,
    remove_edge,
    star_graph,
    to_graph6,
)

from conftest import to_nx


def reference_graph6(n, edges):
    """Straight from the format description: header, then column-major
    upper-triangle bits in groups of six, each offset by 63."""
    es = {(min(u, v), max(u, v)) for u, v in edges}
    bitstr = "".join("1" if (i, j) in es else "0" for j in range(1, n) for i in range(j))
    bitstr += "0" * (-len(bitstr) % 6)
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return head + "".join(chr(63 + int(bitstr[k:k + 6], 2)) for k in range(0, len(bitstr), 6))


edge_lists = st.integers(0, 64).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
                 .filter(lambda e: e[0] != e[1]), max_size=80) if n > 1 else st.just([]),
    )
)


class TestGraph6:
    @pytest.mark.parametrize("g, text", [
        (complete_graph(4), "C~"),
        (empty_graph(0), "?"),
        (empty_graph(1), "@"),
        (complete_graph(2), "A_"),
        (path_graph(3), "Bg"),
    ])
    def test_known_strings(self, g, text):
        assert to_graph6(g) == text
        assert from_graph6(text) == g

    def test_matches_networkx_on_atlas(self, atlas):
        for g in atlas:
            expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert to_graph6(g) == expected

    @settings(max_examples=200, deadline=None)
    @given(edge_lists)
    def test_round_trip_against_reference(self, data):
        n, edges = data
        g = Graph.from_edges(n, edges)
        text = to_graph6(g)
        assert text == reference_graph6(n, edges)
        assert from_graph6(text) == g

    def test_large_header(self):
        g = cycle_graph(64)
        text = to_graph6(g)
        assert text.startswith("~?@?")
        assert from_graph6(text) == g
        assert from_graph6(to_graph6(path_graph(63))) == path_graph(63)

    def test_header_prefix_and_bytes(self):
        assert from_graph6(b">>graph6<<C~\n") == complete_graph(4)

    @pytest.mark.parametrize("text, offset", [
        ("", 0),
        ("C", 1),
        ("C~~", 2),
        ("C\x7f", 1),
        ("Bx", 1),  # padding bits set
    ])
    def test_errors_carry_offset(self, text, offset):
        with pytest.raises(Graph6ParseError) as e:
            from_graph6(text)
        assert e.value.offset == offset

    def test_iter_lines_skips_blanks(self):
        assert list(iter_graph6_lines(["C~\n", "\n", "Bo"])) == [complete_graph(4), from_graph6("Bo")]


class TestGraph:
    def test_from_edges_rejects_loops_and_range(self):
        with pytest.raises(InvalidEditError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(InvalidEditError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(CapacityError):
            empty_graph(65)

    def test_mask_round_trip(self):
        for mask in range(64):
            assert Graph.from_mask(4, mask).to_mask() == mask

    def test_mask_pair_order(self):
        assert Graph.from_mask(4, 1).edges() == [(0, 1)]
        assert Graph.from_mask(4, 2).edges() == [(0, 2)]
        assert Graph.from_mask(4, 4).edges() == [(1, 2)]
        assert Graph.from_mask(4, 8).edges() == [(0, 3)]

    def test_basic_queries(self):
        g = star_graph(5)
        assert g.n == 5 and g.num_edges() == 4
        assert g.degrees() == [4, 1, 1, 1, 1]
        assert g.neighbors(0) == [1, 2, 3, 4]
        assert g.has_edge(3, 0) and not g.has_edge(1, 2)
        assert len(g.non_edges()) == 6

    def test_edits(self):
        g = path_graph(3)
        h = add_edge(g, 0, 2)
        assert h == cycle_graph(3)
        assert remove_edge(h, 2, 0) == g
        with pytest.raises(InvalidEditError):
            add_edge(g, 0, 1)
        with pytest.raises(InvalidEditError):
            remove_edge(g, 0, 2)
        with pytest.raises(InvalidEditError):
            add_edge(g, 1, 1)

    def test_relabel_and_induced(self):
        g = path_graph(4)
        assert g.relabel([3, 2, 1, 0]) == g
        assert g.induced([1, 2, 3]) == path_graph(3)

    def test_complement_and_join(self):
        assert complement(complete_graph(5)) == empty_graph(5)
        assert join(empty_graph(2), empty_graph(3)) == complete_bipartite_graph(2, 3)
        assert join(empty_graph(1), empty_graph(4)) == star_graph(5)

    def test_union_and_copies(self):
        g = disjoint_union(complete_graph(3), complete_graph(2))
        assert g.n == 5 and g.num_edges() == 4
        assert components(g) == [[0, 1, 2], [3, 4]]
        assert k_copies(complete_graph(2), 3).num_edges() == 3
        assert not is_connected(g)

    def test_networkx_agreement(self, atlas):
        for g in atlas[::7]:
            h = to_nx(g)
            assert is_connected(g) == nx.is_connected(h)
            assert (is_bipartite(g) is not None) == nx.is_bipartite(h)
            assert len(components(g)) == nx.number_connected_components(h)

    def test_bipartition_witness(self):
        w = is_bipartite(cycle_graph(6))
        assert w is not None and w.check(cycle_graph(6))
        assert is_bipartite(cycle_graph(5)) is None


class TestRegularity:
    def test_classes(self):
        assert classify_regularity(cycle_graph(5)) == Regular(2)
        assert classify_regularity(complete_bipartite_graph(2, 5)) == SemiRegularBipartite(5, 2)
        assert classify_regularity(star_graph(4)) == SemiRegularBipartite(3, 1)
        assert classify_regularity(path_graph(4)) == Neither()
        # K_{3,3} is regular; regular takes precedence
        assert classify_regularity(complete_bipartite_graph(3, 3)) == Regular(3)

    def test_disconnected_not_semiregular(self):
        g = disjoint_union(star_graph(3), star_graph(3))
        assert classify_regularity(g) == Neither()
