"""Finite simple graphs and the ideals built from them."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .monomials import (
    Monomial,
    MonomialIdeal,
    VariableSet,
    intersect,
    variable_power_ideal,
)


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Vertices are named; ``adj[i]`` is the neighbour bitmask of vertex i."""

    vertices: VariableSet
    adj: tuple[int, ...]

    def __post_init__(self):
        adj = tuple(self.adj)
        object.__setattr__(self, "adj", adj)
        n = self.vertices.size
        if len(adj) != n:
            raise ValueError("adjacency rows do not match the vertex count")
        for i, row in enumerate(adj):
            if row >> i & 1:
                raise ValueError(f"loop at vertex {self.vertices.names[i]}")
            if row >> n:
                raise ValueError("adjacency refers to a missing vertex")
            for j in _bits(row):
                if not adj[j] >> i & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, names: Sequence[str] | VariableSet | int, edges: Iterable) -> "SimpleGraph":
        """Build from vertex names (or a count, giving x0, x1, ...) and edges
        given as name or index pairs."""
        if isinstance(names, int):
            names = [f"x{i}" for i in range(names)]
        V = names if isinstance(names, VariableSet) else VariableSet(tuple(names))
        adj = [0] * V.size
        for u, v in edges:
            i = u if isinstance(u, int) else V.index(u)
            j = v if isinstance(v, int) else V.index(v)
            if i == j:
                raise ValueError(f"loop at {V.names[i]}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(V, tuple(adj))

    @property
    def n(self) -> int:
        return self.vertices.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.vertices.names

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return bin(self.adj[i]).count("1")

    def neighbors(self, i: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[i]))

    def no_isolated_vertices(self) -> bool:
        return all(self.adj)

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.vertices, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp, stack = [], [s]
            seen |= 1 << s
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in _bits(self.adj[v] & ~seen):
                    seen |= 1 << w
                    stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.vertices == other.vertices and self.adj == other.adj

    def __hash__(self):
        return hash((self.vertices.names, self.adj))

    def __repr__(self):
        es = ", ".join(f"{self.names[i]}{self.names[j]}" if _short(self) else f"{self.names[i]}-{self.names[j]}"
                       for i, j in self.edges)
        return f"SimpleGraph(V={list(self.names)}, E=[{es}])"

    def edge_list_text(self) -> str:
        lines = [" ".join(self.names)]
        lines += [f"{self.names[i]} {self.names[j]}" for i, j in self.edges]
        return "\n".join(lines) + "\n"


def _short(G: SimpleGraph) -> bool:
    return all(len(n) == 1 for n in G.names)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def parse_edge_list(text: str) -> SimpleGraph:
    """First line lists vertex names; each further line is one edge ``u v``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    names = lines[0].split()
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must have two vertices: {ln!r}")
        edges.append(tuple(parts))
    return SimpleGraph.from_edges(names, edges)


# --- small named graphs -------------------------------------------------------

def path_graph(k: int, prefix: str = "x") -> SimpleGraph:
    """Path on k vertices."""
    return SimpleGraph.from_edges([f"{prefix}{i}" for i in range(1, k + 1)], [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int, prefix: str = "x") -> SimpleGraph:
    return SimpleGraph.from_edges([f"{prefix}{i}" for i in range(1, k + 1)], [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int, prefix: str = "x") -> SimpleGraph:
    return SimpleGraph.from_edges(
        [f"{prefix}{i}" for i in range(1, k + 1)], itertools.combinations(range(k), 2)
    )


def star_graph(leaves: int, prefix: str = "x") -> SimpleGraph:
    return SimpleGraph.from_edges([f"{prefix}{i}" for i in range(leaves + 1)], [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    names, edges, off = [], [], 0
    for k, G in enumerate(graphs):
        clash = set(names) & set(G.names)
        names += [f"{nm}_{k}" if clash else nm for nm in G.names]
        edges += [(i + off, j + off) for i, j in G.edges]
        off += G.n
    return SimpleGraph.from_edges(names, edges)


# --- graph ideals -----------------------------------------------------------------

def _edge_exps(G: SimpleGraph, i: int, j: int) -> tuple[int, ...]:
    e = [0] * G.n
    e[i] = e[j] = 1
    return tuple(e)


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    return MonomialIdeal._from_minimal(G.vertices, [_edge_exps(G, i, j) for i, j in G.edges])


def matchings_of_size(G: SimpleGraph, n: int) -> list[tuple[tuple[int, int], ...]]:
    """All sets of n pairwise disjoint edges, by backtracking in edge order."""
    if n < 1:
        raise ValueError(f"matching size must be positive, got {n}")
    edges = G.edges
    out = []
    chosen: list[tuple[int, int]] = []

    def extend(start: int, used: int):
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        need = n - len(chosen)
        for k in range(start, len(edges) - need + 1):
            i, j = edges[k]
            if used >> i & 1 or used >> j & 1:
                continue
            chosen.append(edges[k])
            extend(k + 1, used | 1 << i | 1 << j)
            chosen.pop()

    extend(0, 0)
    return out


def matching_number(G: SimpleGraph) -> int:
    best = 0

    def grow(free: int, size: int):
        nonlocal best
        best = max(best, size)
        # pick the lowest free vertex that still has a free neighbour
        rest = free
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            nb = G.adj[v] & free
            if nb:
                break
        else:
            return
        if size + bin(free).count("1") // 2 <= best:
            return
        for w in _bits(nb):
            grow(free & ~(1 << v) & ~(1 << w), size + 1)
        grow(free & ~(1 << v), size)  # leave v unmatched

    grow((1 << G.n) - 1, 0)
    return best


def squarefree_power(G: SimpleGraph, n: int) -> MonomialIdeal:
    """Ideal of matching products of size n (zero when n exceeds m(G))."""
    gens = []
    for M in matchings_of_size(G, n):
        e = [0] * G.n
        for i, j in M:
            e[i] = e[j] = 1
        gens.append(tuple(e))
    # distinct matchings may cover the same vertex set
    return MonomialIdeal._from_minimal(G.vertices, gens)


def _maximal_independent_sets(G: SimpleGraph) -> list[int]:
    """Bron-Kerbosch with pivoting on the complement graph; bitmasks."""
    comp = G.complement().adj
    out: list[int] = []

    def bk(R: int, P: int, X: int):
        if not P and not X:
            out.append(R)
            return
        pivot = ((P | X) & -(P | X)).bit_length() - 1  # lowest index
        for v in _bits(P & ~comp[pivot]):
            bk(R | 1 << v, P & comp[v], X & comp[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, (1 << G.n) - 1, 0)
    return out


def _cover_key(mask: int):
    return (bin(mask).count("1"), [i for i in _bits(mask)])


def minimal_vertex_covers(G: SimpleGraph) -> list[frozenset[int]]:
    """Inclusion-minimal vertex covers, as complements of maximal independent
    sets; sorted by size then index list."""
    full = (1 << G.n) - 1
    covers = sorted((full & ~s for s in _maximal_independent_sets(G)), key=_cover_key)
    return [frozenset(_bits(c)) for c in covers]


def minimal_vertex_covers_bruteforce(G: SimpleGraph) -> list[frozenset[int]]:
    """Subset enumeration; exponential, used as a cross-check."""
    if G.n > 16:
        raise ValueError("brute-force cover enumeration limited to 16 vertices")
    covers = []
    for mask in range(1 << G.n):
        if all(mask >> i & 1 or mask >> j & 1 for i, j in G.edges):
            covers.append(mask)
    cover_set = set(covers)
    minimal = [c for c in covers if not any((c & ~(1 << v)) in cover_set for v in _bits(c))]
    return [frozenset(_bits(c)) for c in sorted(minimal, key=_cover_key)]


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    gens = [Monomial.from_support(G.vertices, C).exponents for C in minimal_vertex_covers(G)]
    return MonomialIdeal._from_minimal(G.vertices, gens)


def symbolic_power(G: SimpleGraph, n: int) -> MonomialIdeal:
    """Intersection of the n-th powers of the primes of the minimal covers."""
    if n < 1:
        raise ValueError(f"symbolic power exponent must be positive, got {n}")
    if not G.edges:
        raise ValueError("symbolic power of an edgeless graph is not defined here")
    return intersect(*(variable_power_ideal(G.vertices, C, n) for C in minimal_vertex_covers(G)))


def induced_subgraph(G: SimpleGraph, W: Iterable) -> SimpleGraph:
    """Induced subgraph on ``W`` (names or indices), keeping names and order."""
    idx = sorted({w if isinstance(w, int) else G.vertices.index(w) for w in W})
    for i in idx:
        if not 0 <= i < G.n:
            raise KeyError(f"vertex index {i} out of range")
    pos = {v: k for k, v in enumerate(idx)}
    adj = []
    for v in idx:
        row = 0
        for w in _bits(G.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        adj.append(row)
    return SimpleGraph(VariableSet(tuple(G.names[i] for i in idx)), tuple(adj))


def vertex_product(G: SimpleGraph, W: Iterable | None = None, power: int = 1) -> Monomial:
    """(prod of the vertices in W)^power over G's variables; all of V by default."""
    idx = range(G.n) if W is None else [w if isinstance(w, int) else G.vertices.index(w) for w in W]
    e = [0] * G.n
    for i in idx:
        e[i] = power
    return Monomial(tuple(e), G.vertices)


# --- predicates --------------------------------------------------------------------

def max_cardinality_search(G: SimpleGraph) -> list[int]:
    """Visit order of maximum cardinality search (ties to the lowest index)."""
    weight = [0] * G.n
    unvisited = set(range(G.n))
    order = []
    while unvisited:
        v = max(sorted(unvisited), key=lambda u: weight[u])
        order.append(v)
        unvisited.discard(v)
        for w in _bits(G.adj[v]):
            if w in unvisited:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(G: SimpleGraph, order: Sequence[int]) -> bool:
    """Each vertex's later neighbours form a clique."""
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in _bits(G.adj[v]) if pos[w] > pos[v]]
        for a, b in itertools.combinations(later, 2):
            if not G.has_edge(a, b):
                return False
    return True


def is_chordal(G: SimpleGraph) -> bool:
    # reversed MCS order is a perfect elimination ordering iff G is chordal
    return is_perfect_elimination_ordering(G, max_cardinality_search(G)[::-1])


def has_induced_long_cycle(G: SimpleGraph) -> bool:
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    for k in range(4, G.n + 1):
        for W in itertools.combinations(range(G.n), k):
            H = induced_subgraph(G, W)
            if all(H.degree(i) == 2 for i in range(k)) and H.is_connected():
                return True
    return False


def is_co_chordal(G: SimpleGraph) -> bool:
    return is_chordal(G.complement())


def bipartition(G: SimpleGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring by breadth-first search, or None for odd cycles."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _bits(G.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return (frozenset(i for i in range(G.n) if color[i] == 0),
            frozenset(i for i in range(G.n) if color[i] == 1))


def is_bipartite(G: SimpleGraph) -> bool:
    return bipartition(G) is not None


def ferrers_chain(G: SimpleGraph) -> tuple[list[int], list[int]] | None:
    """(X ordered by growing neighbourhood, Y) when G is Ferrers, else None."""
    if G.n == 0 or not G.no_isolated_vertices() or not G.is_connected():
        return None
    parts = bipartition(G)
    if parts is None:
        return None
    # connected: the 2-colouring is unique up to swapping sides
    for X, Y in (parts, parts[::-1]):
        ordered = sorted(X, key=lambda x: (G.degree(x), x))
        chain = all(G.adj[a] & ~G.adj[b] == 0 for a, b in zip(ordered, ordered[1:]))
        ymask = sum(1 << y for y in Y)
        if chain and G.adj[ordered[-1]] == ymask:
            return ordered, sorted(Y)
    return None


def is_ferrers(G: SimpleGraph) -> bool:
    return ferrers_chain(G) is not None


def ferrers_covers(G: SimpleGraph) -> list[frozenset[int]]:
    """Minimal covers of a Ferrers graph from its neighbourhood chain.

    With Y ordered by shrinking neighbourhoods, the candidates are
    {y_1..y_{t-1}} + N(y_t) for each t, plus Y itself; the inclusion-minimal
    candidates are the minimal covers.
    """
    chain = ferrers_chain(G)
    if chain is None:
        raise ValueError("graph is not a Ferrers graph")
    _, Y = chain
    Y = sorted(Y, key=lambda y: (-G.degree(y), y))
    cands = []
    for t in range(len(Y)):
        cands.append(frozenset(Y[:t]) | G.neighbors(Y[t]))
    cands.append(frozenset(Y))
    cands = set(cands)
    minimal = [c for c in cands if not any(d < c for d in cands)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def ferrers_covers_strict(G: SimpleGraph) -> list[frozenset[int]]:
    """The same covers, taking only the indices where the neighbourhood of
    the next y shrinks strictly."""
    chain = ferrers_chain(G)
    if chain is None:
        raise ValueError("graph is not a Ferrers graph")
    _, Y = chain
    Y = sorted(Y, key=lambda y: (-G.degree(y), y))
    out = [G.neighbors(Y[0])]
    for t in range(1, len(Y)):
        if G.neighbors(Y[t]) < G.neighbors(Y[t - 1]):
            out.append(frozenset(Y[:t]) | G.neighbors(Y[t]))
    out.append(frozenset(Y))
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def leaves_with_joint(G: SimpleGraph, v) -> frozenset[int]:
    i = v if isinstance(v, int) else G.vertices.index(v)
    return frozenset(w for w in _bits(G.adj[i]) if G.degree(w) == 1)


def has_perfect_matching_of_size(G: SimpleGraph, n: int) -> bool:
    return G.n == 2 * n and bool(matchings_of_size(G, n))


def is_tree(G: SimpleGraph) -> bool:
    return G.is_connected() and len(G.edges) == G.n - 1


def is_isomorphic(G: SimpleGraph, H: SimpleGraph) -> bool:
    """Degree sequence filter, then brute-force permutation search."""
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    if sorted(map(G.degree, range(G.n))) != sorted(map(H.degree, range(H.n))):
        return False
    hedges = {frozenset(e) for e in H.edges}
    for perm in itertools.permutations(range(H.n)):
        if all(G.degree(i) == H.degree(perm[i]) for i in range(G.n)):
            if all(frozenset((perm[i], perm[j])) in hedges for i, j in G.edges):
                return True
    return False
