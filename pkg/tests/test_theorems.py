import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from scarfkit.graphs import (
    SimpleGraph,
    complete_graph,
    cover_ideal,
    cycle_graph,
    disjoint_union,
    edge_ideal,
    is_bipartite,
    is_chordal,
    is_co_chordal,
    matching_number,
    minimal_vertex_covers,
    path_graph,
    squarefree_power,
    star_graph,
    symbolic_power,
)
from scarfkit.monomials import parse_ideal, power
from scarfkit.scarf import is_scarf, scarf_complex
from scarfkit.theorems import (
    PreconditionError,
    ScarfVerdict,
    count_scarf_cover_pairs,
    predict_cover_scarf,
    predict_cover_scarf_bipartite,
    predict_cover_scarf_chordal,
    predict_ordinary_scarf,
    predict_sqfree_scarf,
    predict_symbolic_scarf,
    split_partition_witness,
    sqfree_witness,
    verdict,
)

from strategies import graphs

TRI = complete_graph(3)
P3 = path_graph(3)
P4 = path_graph(4)
P5 = path_graph(5)
C4 = cycle_graph(4)
CLAW = star_graph(3)
TWO_K2 = disjoint_union(path_graph(2, "a"), path_graph(2, "b"))
LEAVES = SimpleGraph.from_edges(["x1", "x2", "x3", "x4", "y1"], [("x1", "x2"), ("x3", "x4"), ("x3", "y1")])
FERRERS = SimpleGraph.from_edges(["x1", "x2", "y1", "y2"], [("x1", "y2"), ("x2", "y1"), ("x2", "y2")])

PAW = SimpleGraph.from_edges(["w", "x", "y", "z"], [("w", "x"), ("x", "y"), ("y", "z"), ("x", "z")])
DIAMOND = SimpleGraph.from_edges(["w", "x", "y", "z"],
                                 [("w", "x"), ("w", "y"), ("w", "z"), ("x", "y"), ("y", "z")])
FORBIDDEN_SYMBOLIC = {
    "claw": CLAW,
    "P4": P4,
    "C4": C4,
    "paw": PAW,
    "diamond": DIAMOND,
    "K4": complete_graph(4),
    "edge+P3": disjoint_union(path_graph(2, "a"), path_graph(3, "b")),
    "edge+triangle": disjoint_union(path_graph(2, "a"), complete_graph(3, "b")),
    "3K2": disjoint_union(*(path_graph(2, p) for p in "abc")),
}


def forbidden_squarefree(n: int, extra=()) -> SimpleGraph:
    """x_1..x_{2n-2}, y_1..y_4 with the matching x1x2, ..., x_{2n-5}x_{2n-4}
    and the two cherries x_{2n-3}y_1y_2, x_{2n-2}y_3y_4."""
    xs = [f"x{i}" for i in range(1, 2 * n - 1)]
    names = xs + ["y1", "y2", "y3", "y4"]
    edges = [(xs[2 * k], xs[2 * k + 1]) for k in range(n - 2)]
    edges += [(xs[-2], "y1"), (xs[-2], "y2"), (xs[-1], "y3"), (xs[-1], "y4")]
    return SimpleGraph.from_edges(names, edges + list(extra))


class TestSquarefree:
    def test_examples(self):
        w = sqfree_witness(LEAVES, 2)
        assert w["rule"] == "leaves_at_joint" and w["joint"] == "x3" and set(w["leaves"]) == {"x4", "y1"}
        assert is_scarf(squarefree_power(LEAVES, 2))
        assert not predict_sqfree_scarf(P5, 2) and not is_scarf(squarefree_power(P5, 2))
        assert len(scarf_complex(squarefree_power(P5, 2)).faces) == 3
        assert sqfree_witness(TWO_K2, 2)["rule"] == "perfect_matching"

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            predict_sqfree_scarf(SimpleGraph.from_edges(3, [(0, 1)]), 2)
        with pytest.raises(PreconditionError):
            predict_sqfree_scarf(P5, 1)
        with pytest.raises(PreconditionError):
            predict_sqfree_scarf(P5, 3)

    @pytest.mark.parametrize("n", [2, 3])
    def test_forbidden_graph(self, n):
        G = forbidden_squarefree(n)
        assert not is_scarf(squarefree_power(G, n))

    @settings(max_examples=60)
    @given(graphs(max_n=6, no_isolated=True), st.integers(2, 3))
    def test_scarf_edges_have_degree_2n_plus_1(self, G, n):
        # for n = 1 two disjoint edges already give a Scarf edge of degree 4
        assume(n <= matching_number(G))
        I = squarefree_power(G, n)
        for face in scarf_complex(I, cap=256).faces_of_dim(1):
            assert face.label.degree == 2 * n + 1
        if is_scarf(I, cap=256):
            assert matching_number(G) == n


class TestSymbolicOrdinary:
    def test_symbolic_examples(self):
        assert predict_symbolic_scarf(TRI, 4)
        assert not predict_symbolic_scarf(TRI, 3)
        assert not predict_symbolic_scarf(CLAW, 2)

    def test_ordinary_examples(self):
        assert predict_ordinary_scarf(P3, 3)
        assert not predict_ordinary_scarf(TRI, 2)
        assert predict_ordinary_scarf(TWO_K2, 2)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            predict_symbolic_scarf(TRI, 1)
        with pytest.raises(PreconditionError):
            predict_ordinary_scarf(SimpleGraph.from_edges(3, [(0, 1)]), 2)

    @pytest.mark.parametrize("name", sorted(FORBIDDEN_SYMBOLIC))
    @pytest.mark.parametrize("n", [2, 3])
    def test_forbidden_graphs(self, name, n):
        G = FORBIDDEN_SYMBOLIC[name]
        assert not is_scarf(symbolic_power(G, n), cap=256)
        assert not predict_symbolic_scarf(G, n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_triangle_generators(self, n):
        want = set()
        for i in range(n // 2 + 1):
            for e in ((n - i, n - i, i), (n - i, i, n - i), (i, n - i, n - i)):
                want.add(e)
        assert set(symbolic_power(TRI, n).exponent_vectors) == want


class TestCover:
    def test_pair_counts(self):
        assert count_scarf_cover_pairs(P3) == 1
        assert count_scarf_cover_pairs(TRI) == 0
        assert count_scarf_cover_pairs(FERRERS) == 2

    def test_predictions(self):
        assert predict_cover_scarf(C4)
        assert is_co_chordal(C4)
        assert not predict_cover_scarf(TRI)
        assert predict_cover_scarf(P3)

    def test_chordal_examples(self):
        assert not predict_cover_scarf_chordal(TRI)
        A, B = split_partition_witness(P3)
        assert A == [1] and B == [0, 2]
        A, B = split_partition_witness(CLAW)
        assert len(A) == 1 and CLAW.degree(A[0]) == 3
        with pytest.raises(PreconditionError):
            predict_cover_scarf_chordal(C4)

    def test_bipartite_examples(self):
        assert predict_cover_scarf_bipartite(C4)
        assert not predict_cover_scarf_bipartite(TWO_K2)
        # the oracle says J(P4) = (bc, ac, bd) is Scarf, and P4 is Ferrers
        assert is_scarf(cover_ideal(P4))
        assert predict_cover_scarf_bipartite(P4)
        with pytest.raises(PreconditionError):
            predict_cover_scarf_bipartite(TRI)

    @settings(max_examples=80)
    @given(graphs(max_n=7, no_isolated=True))
    def test_structure(self, G):
        J = cover_ideal(G)
        D = scarf_complex(J, cap=256)
        assert D.dimension <= 1
        covers = minimal_vertex_covers(G)
        for face in D.faces_of_dim(1):
            C1, C2 = _covers_of(J, face)
            assert all(G.has_edge(x, y) for x in C1 - C2 for y in C2 - C1)
        scarf = is_scarf(J, cap=256)
        if scarf:
            assert D.is_tree()
            assert is_co_chordal(G)
        if predict_cover_scarf(G):
            assert count_scarf_cover_pairs(G) == len(covers) - 1
        if is_chordal(G):
            assert predict_cover_scarf_chordal(G) == scarf
        if is_bipartite(G):
            assert predict_cover_scarf_bipartite(G) == scarf


def _covers_of(J, face):
    gens = J.exponent_vectors
    return tuple(frozenset(i for i, e in enumerate(gens[k]) if e) for k in face.members)


class TestVerdict:
    def test_witness_required(self):
        with pytest.raises(ValueError):
            ScarfVerdict(predicted=True)

    def test_pairs_prediction_with_oracle(self):
        v = verdict("symbolic", TRI, 2)
        assert v.predicted and v.oracle and v.agree and v.witness == "C3"
        v = verdict("cover", TRI)
        assert not v.predicted and not v.oracle and v.agree

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            verdict("bogus", TRI, 2)

    def test_ideal_text_matches(self):
        assert cover_ideal(FERRERS) == parse_ideal("(x1*x2, x2*y2, y1*y2)", FERRERS.vertices)
        assert power(edge_ideal(P3), 1) == edge_ideal(P3)
