"""Graph-theoretic predictions of Scarfness, one per ideal family.

Each predictor looks only at the graph.  :func:`verdict` pairs a prediction
with the algebraic oracle from :mod:`scarfkit.scarf`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from .graphs import (
    SimpleGraph,
    complete_graph,
    cover_ideal,
    disjoint_union,
    edge_ideal,
    ferrers_chain,
    has_perfect_matching_of_size,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_co_chordal,
    is_isomorphic,
    leaves_with_joint,
    matching_number,
    matchings_of_size,
    minimal_vertex_covers,
    path_graph,
    squarefree_power,
    symbolic_power,
)
from .homology import QQ, FieldSpec
from .monomials import MonomialIdeal, power
from .scarf import SCARF_GENERATOR_CAP, is_scarf

FAMILIES = ("sqfree", "symbolic", "ordinary", "cover")


class PreconditionError(ValueError):
    """The theorem being checked does not apply to this input."""


@dataclass(frozen=True)
class ScarfVerdict:
    predicted: bool
    oracle: bool | None = None
    witness: Any = None

    def __post_init__(self):
        if self.predicted and self.witness is None:
            raise ValueError("a positive prediction needs a witness")

    @property
    def agree(self) -> bool:
        return self.oracle is not None and self.oracle == self.predicted


def _require_no_isolated(G: SimpleGraph) -> None:
    if not G.no_isolated_vertices():
        raise PreconditionError("graph has isolated vertices")


# --- squarefree powers ---------------------------------------------------------------

def sqfree_witness(G: SimpleGraph, n: int) -> dict | None:
    """Witness that I(G)^[n] should be Scarf, or None.

    Either G has exactly 2n vertices and a perfect matching, or some vertex v
    carries a set L of |V| - 2n + 1 >= 2 leaves such that the rest of the
    graph (without v and L) has a perfect matching of size n - 1.
    """
    _require_no_isolated(G)
    if n < 2:
        raise PreconditionError(f"need n >= 2, got {n}")
    mg = matching_number(G)
    if n > mg:
        raise PreconditionError(f"n = {n} exceeds the matching number {mg}")
    names = G.names
    if G.n == 2 * n:
        M = matchings_of_size(G, n)
        if M:
            return {"rule": "perfect_matching",
                    "matching": [f"{names[i]}{names[j]}" for i, j in M[0]]}
    k = G.n - 2 * n + 1
    if k < 2:
        return None
    for v in range(G.n):
        leaves = sorted(leaves_with_joint(G, v))
        if len(leaves) < k:
            continue
        for L in itertools.combinations(leaves, k):
            rest = [u for u in range(G.n) if u != v and u not in L]
            H = induced_subgraph(G, rest)
            if has_perfect_matching_of_size(H, n - 1):
                M = matchings_of_size(H, n - 1)[0]
                return {
                    "rule": "leaves_at_joint",
                    "joint": names[v],
                    "leaves": [names[u] for u in L],
                    "matching": [f"{H.names[i]}{H.names[j]}" for i, j in M],
                }
    return None


def predict_sqfree_scarf(G: SimpleGraph, n: int) -> bool:
    return sqfree_witness(G, n) is not None


# --- symbolic and ordinary powers ------------------------------------------------------

_SHAPES = {
    "P2": path_graph(2),
    "P3": path_graph(3),
    "2K2": disjoint_union(path_graph(2, "a"), path_graph(2, "b")),
    "C3": complete_graph(3),
}


def small_shape(G: SimpleGraph) -> str | None:
    """Name of the fixed small graph G is isomorphic to, if any."""
    for name, H in _SHAPES.items():
        if is_isomorphic(G, H):
            return name
    return None


def _require_power(G: SimpleGraph, n: int) -> None:
    _require_no_isolated(G)
    if n < 2:
        raise PreconditionError(f"need n >= 2, got {n}")


def symbolic_witness(G: SimpleGraph, n: int) -> str | None:
    _require_power(G, n)
    shape = small_shape(G)
    if shape in ("P2", "P3", "2K2") or (shape == "C3" and n % 2 == 0):
        return shape
    return None


def predict_symbolic_scarf(G: SimpleGraph, n: int) -> bool:
    return symbolic_witness(G, n) is not None


def ordinary_witness(G: SimpleGraph, n: int) -> str | None:
    _require_power(G, n)
    shape = small_shape(G)
    return shape if shape in ("P2", "P3", "2K2") else None


def predict_ordinary_scarf(G: SimpleGraph, n: int) -> bool:
    return ordinary_witness(G, n) is not None


# --- cover ideals -----------------------------------------------------------------

def scarf_cover_pairs(G: SimpleGraph) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Pairs of minimal covers whose union contains no third minimal cover."""
    covers = minimal_vertex_covers(G)
    out = []
    for a, b in itertools.combinations(range(len(covers)), 2):
        U = covers[a] | covers[b]
        if not any(c <= U for k, c in enumerate(covers) if k != a and k != b):
            out.append((covers[a], covers[b]))
    return out


def count_scarf_cover_pairs(G: SimpleGraph) -> int:
    _require_no_isolated(G)
    return len(scarf_cover_pairs(G))


def cover_witness(G: SimpleGraph) -> dict | None:
    _require_no_isolated(G)
    if not is_co_chordal(G):
        return None
    mu = len(minimal_vertex_covers(G))
    pairs = scarf_cover_pairs(G)
    if len(pairs) >= mu - 1:
        names = G.names
        return {"mu": mu, "pairs": [["".join(names[i] for i in sorted(c)) for c in p] for p in pairs]}
    return None


def predict_cover_scarf(G: SimpleGraph) -> bool:
    return cover_witness(G) is not None


def split_partition_witness(G: SimpleGraph) -> tuple[list[int], list[int]] | None:
    """A clique A / independent set B partition with every x in A adjacent to
    B and the traces N(x) & B pairwise incomparable, or None."""
    _require_no_isolated(G)
    if not is_chordal(G):
        raise PreconditionError("graph is not chordal")
    full = (1 << G.n) - 1
    for amask in range(1, full + 1):
        A = [i for i in range(G.n) if amask >> i & 1]
        if any(not G.has_edge(a, b) for a, b in itertools.combinations(A, 2)):
            continue
        bmask = full & ~amask
        if any(G.adj[b] & bmask for b in range(G.n) if bmask >> b & 1):
            continue
        traces = [G.adj[a] & bmask for a in A]
        if not all(traces):
            continue
        if any(s & ~t == 0 or t & ~s == 0 for s, t in itertools.combinations(traces, 2)):
            continue
        return A, [i for i in range(G.n) if bmask >> i & 1]
    return None


def predict_cover_scarf_chordal(G: SimpleGraph) -> bool:
    return split_partition_witness(G) is not None


def predict_cover_scarf_bipartite(G: SimpleGraph) -> bool:
    _require_no_isolated(G)
    if not is_bipartite(G):
        raise PreconditionError("graph is not bipartite")
    return ferrers_chain(G) is not None


# --- oracle pairing ----------------------------------------------------------------

def family_ideal(family: str, G: SimpleGraph, n: int | None) -> MonomialIdeal:
    if family == "sqfree":
        return squarefree_power(G, n)
    if family == "symbolic":
        return symbolic_power(G, n)
    if family == "ordinary":
        return power(edge_ideal(G), n)
    if family == "cover":
        return cover_ideal(G)
    raise ValueError(f"unknown family {family!r}")


def witness(family: str, G: SimpleGraph, n: int | None):
    if family == "sqfree":
        return sqfree_witness(G, n)
    if family == "symbolic":
        return symbolic_witness(G, n)
    if family == "ordinary":
        return ordinary_witness(G, n)
    if family == "cover":
        return cover_witness(G)
    raise ValueError(f"unknown family {family!r}")


def verdict(
    family: str,
    G: SimpleGraph,
    n: int | None = None,
    field: FieldSpec = QQ,
    cap: int = SCARF_GENERATOR_CAP,
) -> ScarfVerdict:
    w = witness(family, G, n)
    oracle = is_scarf(family_ideal(family, G, n), field, cap=cap)
    return ScarfVerdict(predicted=w is not None, oracle=oracle, witness=w)
