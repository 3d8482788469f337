"""graph6 encoding and exhaustive catalogs of small graphs up to isomorphism."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from . import _kernels
from .graphs import SimpleGraph

MAX_CATALOG_VERTICES = 8
MAX_GRAPH6_VERTICES = 62
# exact lex-min canonical forms get expensive on symmetric graphs beyond this
MAX_CANONICAL_VERTICES = 10


class Graph6Error(ValueError):
    pass


def _upper_pairs(n: int):
    # graph6 bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: bytes | str) -> SimpleGraph:
    """Decode a graph6 string with a one-byte header (at most 62 vertices)."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the graph6 range [63, 126]")
    n = data[0] - 63
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6Error("multi-byte graph6 headers are not supported")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    payload = data[1:]
    if len(payload) < nbytes:
        raise Graph6Error(f"truncated payload: need {nbytes} bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise Graph6Error(f"trailing bytes after {nbytes}-byte payload")
    bits = []
    for b in payload:
        v = b - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = [p for p, bit in zip(_upper_pairs(n), bits) if bit]
    return SimpleGraph.from_edges(n, edges)


def emit_graph6(G: SimpleGraph) -> str:
    n = G.n
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6Error("multi-byte graph6 headers are not supported")
    bits = [int(G.has_edge(i, j)) for i, j in _upper_pairs(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def relabel(G: SimpleGraph, order: list[int]) -> SimpleGraph:
    """Graph on x0..x(n-1) where new vertex k is old vertex order[k]."""
    pos = {v: k for k, v in enumerate(order)}
    return SimpleGraph.from_edges(G.n, [(pos[i], pos[j]) for i, j in G.edges])


def canonical_form(G: SimpleGraph) -> SimpleGraph:
    """The relabelling with the lexicographically smallest graph6 bit string."""
    if G.n > MAX_CANONICAL_VERTICES:
        raise ValueError(f"canonical forms limited to {MAX_CANONICAL_VERTICES} vertices")
    return relabel(G, _kernels.canonical_permutation(G.n, list(G.adj)))


def canonical_graph6(G: SimpleGraph) -> str:
    return emit_graph6(canonical_form(G))


def canonical_graph6_bruteforce(G: SimpleGraph) -> str:
    """Minimum over all n! relabellings; exponential cross-check."""
    best = None
    for perm in itertools.permutations(range(G.n)):
        bits = tuple(int(G.has_edge(perm[i], perm[j])) for i, j in _upper_pairs(G.n))
        if best is None or bits < best[0]:
            best = (bits, perm)
    if best is None:
        return emit_graph6(G)
    return emit_graph6(relabel(G, list(best[1])))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings of every graph on exactly n vertices.

    Each graph on n vertices arises by adding a vertex (joined to some subset)
    to a graph on n - 1 vertices, so extending one representative per class
    and deduplicating by canonical form reaches every class.
    """
    if n == 0:
        return ("?",)
    if n == 1:
        return ("@",)
    found = set()
    for g6 in _all_graphs(n - 1):
        H = parse_graph6(g6)
        for mask in range(1 << (n - 1)):
            adj = list(H.adj) + [mask]
            for i in range(n - 1):
                if mask >> i & 1:
                    adj[i] |= 1 << (n - 1)
            G = SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1])
            found.add(canonical_graph6(G))
    return tuple(sorted(found))


def enumerate_graphs(max_vertices: int, min_vertices: int = 2) -> Iterator[SimpleGraph]:
    """Isomorphism classes of graphs without isolated vertices, by vertex
    count then canonical graph6 string."""
    if max_vertices > MAX_CATALOG_VERTICES:
        raise ValueError(f"catalog limited to {MAX_CATALOG_VERTICES} vertices")
    for n in range(max(min_vertices, 1), max_vertices + 1):
        for g6 in _all_graphs(n):
            G = parse_graph6(g6)
            if G.no_isolated_vertices():
                yield G


def enumerate_graphs_bruteforce(max_vertices: int) -> list[str]:
    """Every labelled graph, deduplicated by brute-force canonical form."""
    out = set()
    for n in range(2, max_vertices + 1):
        pairs = list(_upper_pairs(n))
        for mask in range(1 << len(pairs)):
            G = SimpleGraph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
            if G.no_isolated_vertices():
                out.add(canonical_graph6_bruteforce(G))
    return sorted(out, key=lambda s: (len(s) and ord(s[0]), s))
