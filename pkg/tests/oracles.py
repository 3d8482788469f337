"""Slow, obviously-correct reference computations used only by the tests.

Nothing here calls the package's algorithms beyond plain data constructors,
so agreement with the package is independent evidence.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(*vs):
    return tuple(max(c) for c in zip(*vs))


def minimal(exps) -> set:
    exps = set(exps)
    return {e for e in exps if not any(f != e and divides(f, e) for f in exps)}


def monomials_up_to(nvars: int, bound):
    """All exponent vectors entrywise <= bound."""
    return itertools.product(*(range(b + 1) for b in bound))


def ideal_members(gens, candidates) -> set:
    return {c for c in candidates if any(divides(g, c) for g in gens)}


def intersect_by_membership(gens_list, nvars: int) -> set:
    """Minimal generators of an intersection, found by testing every monomial
    below the lcm of all generators (which contains every minimal generator)."""
    top = lcm(*[g for gens in gens_list for g in gens])
    cands = list(monomials_up_to(nvars, top))
    inside = [c for c in cands if all(any(divides(g, c) for g in gens) for gens in gens_list)]
    return minimal(inside)


def power_by_products(gens, n: int) -> set:
    out = set()
    for combo in itertools.product(gens, repeat=n):
        out.add(tuple(sum(c) for c in zip(*combo)))
    return minimal(out)


def label_census(gens) -> dict:
    """Label -> non-empty subsets carrying it."""
    q = len(gens)
    out: dict = {}
    for r in range(1, q + 1):
        for s in itertools.combinations(range(q), r):
            out.setdefault(lcm(*[gens[i] for i in s]), []).append(s)
    return out


def scarf_faces(gens) -> set:
    """Non-empty subsets whose label no other non-empty subset shares."""
    return {subs[0] for subs in label_census(gens).values() if len(subs) == 1}


def rank_fraction(mat) -> int:
    """Rank over Q by Gauss-Jordan with Fractions."""
    m = [[Fraction(x) for x in row] for row in mat]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def rank_gf2(mat) -> int:
    rows = [sum((x & 1) << i for i, x in enumerate(row)) for row in mat]
    rank = 0
    while rows:
        piv = rows.pop()
        if piv:
            rank += 1
            low = piv & -piv
            rows = [r ^ piv if r & low else r for r in rows]
    return rank


def reduced_betti(faces, characteristic: int = 0) -> list[int]:
    """Reduced homology ranks of the closure of ``faces`` (empty face included)."""
    closed = {()}
    for f in faces:
        f = tuple(sorted(f))
        for r in range(len(f) + 1):
            closed.update(itertools.combinations(f, r))
    by_dim: dict[int, list] = {}
    for f in closed:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for v in by_dim.values():
        v.sort()
    top = max(by_dim)
    rank = rank_gf2 if characteristic == 2 else rank_fraction
    ranks = {}
    for d in range(0, top + 1):
        rows = {f: i for i, f in enumerate(by_dim[d - 1])}
        mat = [[0] * len(by_dim[d]) for _ in rows]
        for j, f in enumerate(by_dim[d]):
            for k in range(len(f)):
                mat[rows[f[:k] + f[k + 1:]]][j] = (-1) ** k
        ranks[d] = rank(mat)
    return [len(by_dim[d]) - ranks[d] - ranks.get(d + 1, 0) for d in range(0, top + 1)]


def is_scarf_bruteforce(gens, characteristic: int = 0) -> bool:
    """Scarfness checked at every divisor of the top lcm, not only lattice
    elements, with homology from scratch."""
    gens = sorted(minimal(gens))
    if len(gens) <= 1:
        return True
    faces = scarf_faces(gens)
    labels = {f: lcm(*[gens[i] for i in f]) for f in faces}
    top = lcm(*gens)
    for m in monomials_up_to(len(top), top):
        sub = [f for f in faces if divides(labels[f], m)]
        if not sub:
            continue
        if any(reduced_betti(sub, characteristic)):
            return False
    return True


def graph_from_edges(n: int, edges):
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def isomorphic_bruteforce(n: int, adj_a, adj_b) -> bool:
    ea = {(i, j) for i in range(n) for j in range(i + 1, n) if adj_a[i] >> j & 1}
    eb = {(i, j) for i in range(n) for j in range(i + 1, n) if adj_b[i] >> j & 1}
    if len(ea) != len(eb):
        return False
    for p in itertools.permutations(range(n)):
        if {tuple(sorted((p[i], p[j]))) for i, j in ea} == eb:
            return True
    return False


def vertex_covers_bruteforce(n: int, edges) -> list[frozenset]:
    covers = [frozenset(s) for r in range(n + 1) for s in itertools.combinations(range(n), r)
              if all(i in s or j in s for i, j in edges)]
    return [c for c in covers if not any(d < c for d in covers)]


def matchings_bruteforce(edges, n: int) -> set:
    out = set()
    for combo in itertools.combinations(sorted(edges), n):
        verts = [v for e in combo for v in e]
        if len(set(verts)) == 2 * n:
            out.add(frozenset(combo))
    return out


def has_induced_cycle_ge4(n: int, adj) -> bool:
    for k in range(4, n + 1):
        for S in itertools.combinations(range(n), k):
            deg = [bin(adj[v] & sum(1 << u for u in S)).count("1") for v in S]
            if all(d == 2 for d in deg):
                # 2-regular; connected means one cycle
                seen, stack = {S[0]}, [S[0]]
                while stack:
                    v = stack.pop()
                    for u in S:
                        if adj[v] >> u & 1 and u not in seen:
                            seen.add(u)
                            stack.append(u)
                if len(seen) == k:
                    return True
    return False
