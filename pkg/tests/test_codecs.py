import pytest

from evencycles.codecs import (
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
)
from evencycles.generators import complete_graph, enumerate_small, petersen_graph
from evencycles.graphs import Graph, GraphError


class TestGraph6:
    def test_empty_five(self):
        g = decode_graph6("D??")
        assert g.n == 5 and g.e == 0
        assert encode_graph6(g) == "D??"

    def test_k5(self):
        g = decode_graph6("D~{")
        assert g.n == 5 and g.e == 10
        assert encode_graph6(complete_graph(5)) == "D~{"

    def test_trivial_orders(self):
        assert decode_graph6("?").n == 0
        assert decode_graph6("@").n == 1
        assert encode_graph6(Graph.build(0, [])) == "?"

    def test_long_form_header(self):
        g = Graph.build(63, [(0, 62)])
        s = encode_graph6(g)
        assert s.startswith("~")
        assert decode_graph6(s).edges == g.edges

    def test_roundtrip_small_enumeration(self):
        for n in range(8):
            for g in enumerate_small(n):
                s = encode_graph6(g)
                h = decode_graph6(s)
                assert h.n == g.n and h.edges == g.edges
                assert encode_graph6(h) == s

    def test_rejects_bad_byte(self):
        with pytest.raises(GraphError):
            decode_graph6("D?\x1f")

    def test_rejects_wrong_length(self):
        with pytest.raises(GraphError):
            decode_graph6("D?")  # truncated
        with pytest.raises(GraphError):
            decode_graph6("D???")  # trailing garbage

    def test_rejects_nonzero_padding(self):
        # C_? has 3 vertices, 3 data bits; the low 3 bits must be zero
        with pytest.raises(GraphError):
            decode_graph6("B@")

    def test_rejects_empty(self):
        with pytest.raises(GraphError):
            decode_graph6("   ")


class TestEdgeList:
    def test_triangle(self):
        g = decode_edge_list("0 1\n1 2\n2 0")
        assert g.n == 3 and g.e == 3

    def test_header_isolated(self):
        g = decode_edge_list("n 4\n0 1")
        assert g.n == 4 and g.e == 1

    def test_comments_and_blanks(self):
        g = decode_edge_list("# a triangle\n\n0 1  # first\n1 2\n2 0\n")
        assert g.e == 3

    def test_roundtrip(self):
        for g in (petersen_graph(), complete_graph(6), Graph.build(3, [])):
            assert decode_edge_list(encode_edge_list(g)).edges == g.edges
            assert decode_edge_list(encode_edge_list(g)).n == g.n

    @pytest.mark.parametrize(
        "text",
        [
            "0 1\n1 0",  # duplicate
            "2 2",  # self-loop
            "-1 0",  # negative
            "0 x",  # non-integer
            "n 2\n0 5",  # id outside header
            "0 1\nn 4",  # misplaced header
            "0 1 2",  # malformed line
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(GraphError):
            decode_edge_list(text)
