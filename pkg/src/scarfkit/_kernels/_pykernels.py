"""Pure-Python kernels.  Reference semantics for the compiled twin in
``_ckernels.pyx``; both must return identical results."""

from __future__ import annotations


def rank_mod_p(rows: list[list[int]], ncols: int, p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    nrows = len(m)
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = pow(prow[c], p - 2, p)
        if inv != 1:
            prow = m[rank] = [(x * inv) % p for x in prow]
        for r in range(rank + 1, nrows):
            f = m[r][c]
            if f:
                row = m[r]
                m[r] = [(a - f * b) % p for a, b in zip(row, prow)]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_fraction_free(rows: list[list[int]], ncols: int) -> int:
    """Rank over the rationals by Bareiss elimination; entries stay integral."""
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[c]
            # exact division: Bareiss invariant
            m[r] = [(pv * a - f * b) // prev for a, b in zip(row, pr)]
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def lcm_closure(gens: list[tuple[int, ...]], cap: int):
    """All lcms of non-empty generator subsets, or None past ``cap`` elements."""
    seen = set(gens)
    if len(seen) > cap:
        return None
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(map(max, a, g))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        if len(seen) > cap:
            return None
        frontier = nxt
    return sorted(seen, key=lambda e: (sum(e), tuple(-x for x in e)))


def divisor_masks(labels: list[tuple[int, ...]], targets: list[tuple[int, ...]]) -> list[int]:
    """For each target, the bitmask of label indices dividing it."""
    out = []
    for t in targets:
        mask = 0
        for i, lab in enumerate(labels):
            for x, y in zip(lab, t):
                if x > y:
                    break
            else:
                mask |= 1 << i
        out.append(mask)
    return out


def scarf_faces(gens: list[tuple[int, ...]], max_faces: int):
    """Non-empty faces with a unique lcm label, in lexicographic order.

    A face sigma is unique iff no outside generator divides lcm(sigma) and no
    member can be dropped without lowering the lcm.  Faces grow one generator
    at a time since the unique-label faces form a simplicial complex.
    Returns ``(faces, labels)`` or None when more than ``max_faces`` exist.
    """
    q = len(gens)
    out_faces: list[tuple[int, ...]] = []
    out_labels: list[tuple[int, ...]] = []
    level = []
    for i, g in enumerate(gens):
        # labels are compared over non-empty subsets, so a singleton is
        # unique unless another generator divides it
        if _unique(gens, (i,), g):
            level.append(((i,), g))
    while level:
        for f, lab in level:
            out_faces.append(f)
            out_labels.append(lab)
        if len(out_faces) > max_faces:
            return None
        nxt = []
        for f, lab in level:
            for j in range(f[-1] + 1, q):
                face = f + (j,)
                new = tuple(map(max, lab, gens[j]))
                if _unique(gens, face, new):
                    nxt.append((face, new))
        level = nxt
    return out_faces, out_labels


def _unique(gens, face, label) -> bool:
    members = set(face)
    for j, g in enumerate(gens):
        if j in members:
            continue
        for x, y in zip(g, label):
            if x > y:
                break
        else:
            return False
    if len(face) == 1:
        return True
    for k in face:
        # dropping k keeps the lcm iff every coordinate where gens[k]
        # attains the label is also attained by another member
        gk = gens[k]
        needed = False
        for v, e in enumerate(gk):
            if e == label[v] and e > 0:
                if not any(gens[o][v] == e for o in face if o != k):
                    needed = True
                    break
        if not needed:
            return False
    return True


def canonical_permutation(n: int, adj: list[int]) -> list[int]:
    """Vertex order whose upper-triangle bit string (graph6 column order) is
    lexicographically smallest over all n! orderings.

    ``adj[v]`` is the neighbour bitmask of v.  Branch and bound: column j only
    depends on the first j+1 chosen vertices, so prefixes worse than the best
    found so far are cut.
    """
    if n <= 1:
        return list(range(n))
    best_cols: list[int] = [0] * n
    best_perm: list[int] = []
    have_best = False
    perm = [0] * n
    used = [False] * n

    def column(j: int, v: int) -> int:
        a = adj[v]
        c = 0
        for i in range(j):
            c = (c << 1) | ((a >> perm[i]) & 1)
        return c

    def dfs(j: int, less: bool) -> bool:
        # returns True if best was replaced inside this subtree
        nonlocal have_best, best_perm
        cands = sorted((column(j, v), v) for v in range(n) if not used[v])
        updated = False
        for col, v in cands:
            if have_best and not less:
                if col > best_cols[j]:
                    break
                child_less = col < best_cols[j]
            else:
                child_less = True
            perm[j] = v
            cols_j_saved = col
            if j == n - 1:
                if not have_best or child_less:
                    # record a strictly better (or first) leaf
                    have_best = True
                    best_perm = perm[:]
                    _store_cols(j, cols_j_saved)
                    updated = True
                    less = False
                continue
            used[v] = True
            pending[j] = col
            if dfs(j + 1, child_less):
                updated = True
                less = False
            used[v] = False
        return updated

    pending = [0] * n

    def _store_cols(j: int, last: int) -> None:
        for k in range(1, j):
            best_cols[k] = pending[k]
        best_cols[j] = last

    dfs(0, True)
    return best_perm
