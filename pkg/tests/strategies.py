"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from scarfkit.graphs import SimpleGraph
from scarfkit.monomials import MonomialIdeal, VariableSet

_VARS = {n: VariableSet(tuple(f"x{i}" for i in range(1, n + 1))) for n in range(1, 9)}


def variables(n: int) -> VariableSet:
    return _VARS[n]


@st.composite
def exponent_vectors(draw, nvars: int, max_exp: int = 3):
    return tuple(draw(st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars)))


@st.composite
def ideals(draw, min_vars=1, max_vars=4, min_gens=1, max_gens=5, max_exp=3, nvars=None):
    n = nvars if nvars is not None else draw(st.integers(min_vars, max_vars))
    gens = draw(st.lists(exponent_vectors(n, max_exp), min_size=min_gens, max_size=max_gens))
    return MonomialIdeal(variables(n), gens)


@st.composite
def graphs(draw, min_n=2, max_n=6, no_isolated=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p, keep in zip(pairs, draw(st.lists(st.booleans(), min_size=len(pairs),
                                                        max_size=len(pairs)))) if keep]
    G = SimpleGraph.from_edges(n, edges)
    if no_isolated:
        from hypothesis import assume

        assume(G.no_isolated_vertices() and edges)
    return G
