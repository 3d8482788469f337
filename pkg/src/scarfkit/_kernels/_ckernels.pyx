# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and results as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport int64_t, uint64_t

from . import _pykernels

cdef extern from *:
    """
    static inline int sk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int sk_mul_ovf(long long a, long long b, long long *r) nogil
    int sk_sub_ovf(long long a, long long b, long long *r) nogil


cdef int64_t* _matrix(rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef int64_t* m = <int64_t*> malloc(max(nrows * ncols, 1) * sizeof(int64_t))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c
    try:
        for r in range(nrows):
            row = rows[r]
            for c in range(ncols):
                m[r * ncols + c] = row[c]
    except BaseException:
        free(m)
        raise
    return m


cdef inline void _swap_rows(int64_t* m, Py_ssize_t a, Py_ssize_t b, Py_ssize_t ncols) nogil:
    cdef Py_ssize_t c
    cdef int64_t t
    if a == b:
        return
    for c in range(ncols):
        t = m[a * ncols + c]
        m[a * ncols + c] = m[b * ncols + c]
        m[b * ncols + c] = t


cdef int64_t _inv_mod(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(rows, Py_ssize_t ncols, long long p):
    if p >= (1 << 31):
        raise OverflowError("modulus too large for the compiled kernel")
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef int64_t* m = _matrix(rows, nrows, ncols)
    cdef Py_ssize_t rank = 0, r, c, k, piv
    cdef int64_t inv, f
    try:
        for r in range(nrows * ncols):
            m[r] %= p
            if m[r] < 0:
                m[r] += p
        for c in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if m[r * ncols + c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            _swap_rows(m, rank, piv, ncols)
            inv = _inv_mod(m[rank * ncols + c], p)
            for k in range(c, ncols):
                m[rank * ncols + k] = (m[rank * ncols + k] * inv) % p
            for r in range(rank + 1, nrows):
                f = m[r * ncols + c]
                if f != 0:
                    for k in range(c, ncols):
                        m[r * ncols + k] = (m[r * ncols + k] - f * m[rank * ncols + k]) % p
                        if m[r * ncols + k] < 0:
                            m[r * ncols + k] += p
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(m)


def rank_fraction_free(rows, Py_ssize_t ncols):
    """Bareiss elimination in 64-bit words; raises OverflowError when an
    intermediate does not fit."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef int64_t* m = _matrix(rows, nrows, ncols)
    cdef Py_ssize_t rank = 0, r, c, k, piv
    cdef long long prev = 1, pv, f, a, b, d
    cdef int ovf = 0
    try:
        for c in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if m[r * ncols + c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            _swap_rows(m, rank, piv, ncols)
            pv = m[rank * ncols + c]
            for r in range(rank + 1, nrows):
                f = m[r * ncols + c]
                for k in range(ncols):
                    ovf |= sk_mul_ovf(pv, m[r * ncols + k], &a)
                    ovf |= sk_mul_ovf(f, m[rank * ncols + k], &b)
                    ovf |= sk_sub_ovf(a, b, &d)
                    m[r * ncols + k] = d // prev
                if ovf:
                    raise OverflowError("Bareiss intermediate exceeds 64 bits")
            prev = pv
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(m)


# --- packed exponent vectors -------------------------------------------------------

cdef int _field_bits(gens, Py_ssize_t nvars):
    cdef long mx = 0
    for g in gens:
        for e in g:
            if e > mx:
                mx = e
    cdef int b = 1
    while (1 << b) <= mx:
        b += 1
    return b


cdef inline uint64_t _lcm_packed(uint64_t a, uint64_t b, int bits, Py_ssize_t nvars) nogil:
    cdef uint64_t mask = (<uint64_t>1 << bits) - 1
    cdef uint64_t out = 0, x, y
    cdef Py_ssize_t v
    for v in range(nvars):
        x = (a >> (v * bits)) & mask
        y = (b >> (v * bits)) & mask
        out |= (x if x > y else y) << (v * bits)
    return out


cdef uint64_t _pack(g, int bits):
    cdef uint64_t out = 0
    cdef Py_ssize_t v = 0
    for e in g:
        out |= (<uint64_t>e) << (v * bits)
        v += 1
    return out


cdef tuple _unpack(uint64_t key, int bits, Py_ssize_t nvars):
    cdef uint64_t mask = (<uint64_t>1 << bits) - 1
    return tuple([<long>((key >> (v * bits)) & mask) for v in range(nvars)])


cdef struct HashSet:
    uint64_t* keys
    char* used
    Py_ssize_t size
    Py_ssize_t count


cdef int _hs_init(HashSet* hs, Py_ssize_t size) except -1:
    hs.size = size
    hs.count = 0
    hs.keys = <uint64_t*> calloc(size, sizeof(uint64_t))
    hs.used = <char*> calloc(size, 1)
    if hs.keys == NULL or hs.used == NULL:
        free(hs.keys)
        free(hs.used)
        raise MemoryError()
    return 0


cdef void _hs_free(HashSet* hs) nogil:
    free(hs.keys)
    free(hs.used)


cdef int _hs_add(HashSet* hs, uint64_t key) nogil:
    # returns 1 when newly inserted; table is sized so it never fills
    cdef uint64_t h = key * <uint64_t>0x9E3779B97F4A7C15
    cdef Py_ssize_t i = <Py_ssize_t>(h % <uint64_t>hs.size)
    while hs.used[i]:
        if hs.keys[i] == key:
            return 0
        i += 1
        if i == hs.size:
            i = 0
    hs.used[i] = 1
    hs.keys[i] = key
    hs.count += 1
    return 1


def lcm_closure(gens, Py_ssize_t cap):
    cdef Py_ssize_t q = len(gens)
    if q == 0:
        return []
    cdef Py_ssize_t nvars = len(gens[0])
    cdef int bits = _field_bits(gens, nvars)
    if nvars * bits > 64 or cap > (1 << 26):
        return _pykernels.lcm_closure(gens, cap)
    cdef uint64_t* g = <uint64_t*> malloc(q * sizeof(uint64_t))
    cdef uint64_t* elems = <uint64_t*> malloc((cap + q + 1) * sizeof(uint64_t))
    cdef HashSet hs
    hs.keys = NULL
    hs.used = NULL
    cdef Py_ssize_t i, j, start, end, n
    cdef uint64_t c
    cdef bint over = False
    if g == NULL or elems == NULL:
        free(g)
        free(elems)
        raise MemoryError()
    try:
        _hs_init(&hs, 2 * (cap + q) + 17)
        n = 0
        for i in range(q):
            g[i] = _pack(gens[i], bits)
            if _hs_add(&hs, g[i]):
                elems[n] = g[i]
                n += 1
        if n > cap:
            return None
        start = 0
        with nogil:
            while start < n and not over:
                end = n
                for i in range(start, end):
                    for j in range(q):
                        c = _lcm_packed(elems[i], g[j], bits, nvars)
                        if _hs_add(&hs, c):
                            if n >= cap:
                                over = True
                                break
                            elems[n] = c
                            n += 1
                    if over:
                        break
                start = end
        if over:
            return None
        out = [_unpack(elems[i], bits, nvars) for i in range(n)]
    finally:
        _hs_free(&hs)
        free(g)
        free(elems)
    return sorted(out, key=_pykernels_sort_key)


def _pykernels_sort_key(e):
    return (sum(e), tuple([-x for x in e]))


cdef int* _int_matrix(seqs, Py_ssize_t n, Py_ssize_t nvars) except NULL:
    cdef int* m = <int*> malloc(max(n * nvars, 1) * sizeof(int))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, v
    try:
        for i in range(n):
            s = seqs[i]
            for v in range(nvars):
                m[i * nvars + v] = s[v]
    except BaseException:
        free(m)
        raise
    return m


def divisor_masks(labels, targets):
    cdef Py_ssize_t F = len(labels), T = len(targets)
    if T == 0:
        return []
    if F == 0:
        return [0] * T
    cdef Py_ssize_t nvars = len(labels[0])
    cdef int* L = _int_matrix(labels, F, nvars)
    cdef int* M = NULL
    cdef unsigned char* buf = NULL
    cdef Py_ssize_t nbytes = (F + 7) // 8
    cdef Py_ssize_t t, f, v
    cdef bint ok
    out = []
    try:
        M = _int_matrix(targets, T, nvars)
        buf = <unsigned char*> malloc(nbytes)
        if buf == NULL:
            raise MemoryError()
        for t in range(T):
            memset(buf, 0, nbytes)
            for f in range(F):
                ok = True
                for v in range(nvars):
                    if L[f * nvars + v] > M[t * nvars + v]:
                        ok = False
                        break
                if ok:
                    buf[f >> 3] |= <unsigned char>(1 << (f & 7))
            out.append(int.from_bytes(buf[:nbytes], "little"))
    finally:
        free(L)
        free(M)
        free(buf)
    return out


cdef bint _unique_c(int* G, Py_ssize_t q, Py_ssize_t nvars, int* face, Py_ssize_t k, int* label) nogil:
    cdef Py_ssize_t j, v, a, o, kk
    cdef bint member, divides, needed, other
    cdef int e
    for j in range(q):
        member = False
        for a in range(k):
            if face[a] == j:
                member = True
                break
        if member:
            continue
        divides = True
        for v in range(nvars):
            if G[j * nvars + v] > label[v]:
                divides = False
                break
        if divides:
            return False
    if k == 1:
        return True
    for a in range(k):
        kk = face[a]
        needed = False
        for v in range(nvars):
            e = G[kk * nvars + v]
            if e > 0 and e == label[v]:
                other = False
                for o in range(k):
                    if o != a and G[face[o] * nvars + v] == e:
                        other = True
                        break
                if not other:
                    needed = True
                    break
        if not needed:
            return False
    return True


def scarf_faces(gens, Py_ssize_t max_faces):
    cdef Py_ssize_t q = len(gens)
    if q == 0:
        return [], []
    cdef Py_ssize_t nvars = len(gens[0])
    cdef int* G = _int_matrix(gens, q, nvars)
    cdef int* face = <int*> malloc((q + 1) * sizeof(int))
    cdef int* label = <int*> malloc((nvars + 1) * sizeof(int))
    cdef Py_ssize_t i, j, v, k
    out_faces = []
    out_labels = []
    try:
        if face == NULL or label == NULL:
            raise MemoryError()
        level = []
        for i in range(q):
            face[0] = i
            for v in range(nvars):
                label[v] = G[i * nvars + v]
            if _unique_c(G, q, nvars, face, 1, label):
                level.append(((i,), gens[i]))
        while level:
            for f, lab in level:
                out_faces.append(f)
                out_labels.append(lab)
            if len(out_faces) > max_faces:
                return None
            nxt = []
            for f, lab in level:
                k = len(f)
                for i in range(k):
                    face[i] = f[i]
                for j in range(f[k - 1] + 1, q):
                    face[k] = j
                    for v in range(nvars):
                        label[v] = lab[v] if lab[v] > G[j * nvars + v] else G[j * nvars + v]
                    if _unique_c(G, q, nvars, face, k + 1, label):
                        nxt.append((f + (j,), tuple([label[v] for v in range(nvars)])))
            level = nxt
    finally:
        free(G)
        free(face)
        free(label)
    return out_faces, out_labels


# --- canonical labelling ---------------------------------------------------------

cdef struct CanonState:
    int n
    uint64_t* adj
    int* perm
    int* best_perm
    uint64_t* best_cols
    uint64_t* cur_cols
    char* used
    bint have_best


cdef inline uint64_t _column(CanonState* s, int j, int v) nogil:
    cdef uint64_t a = s.adj[v], c = 0
    cdef int i
    for i in range(j):
        c = (c << 1) | ((a >> s.perm[i]) & 1)
    return c


cdef bint _canon_dfs(CanonState* s, int j, bint less) nogil:
    cdef int n = s.n
    cdef int cnt = 0, v, a, b, k
    cdef bint updated = False, child_less
    cdef uint64_t col
    # candidates sorted by (column, vertex); n <= 62 so stack arrays suffice
    cdef uint64_t cols[64]
    cdef int verts[64]
    cdef uint64_t tc
    cdef int tv
    for v in range(n):
        if not s.used[v]:
            cols[cnt] = _column(s, j, v)
            verts[cnt] = v
            cnt += 1
    for a in range(1, cnt):
        tc = cols[a]
        tv = verts[a]
        b = a - 1
        while b >= 0 and (cols[b] > tc or (cols[b] == tc and verts[b] > tv)):
            cols[b + 1] = cols[b]
            verts[b + 1] = verts[b]
            b -= 1
        cols[b + 1] = tc
        verts[b + 1] = tv
    for a in range(cnt):
        col = cols[a]
        v = verts[a]
        if s.have_best and not less:
            if col > s.best_cols[j]:
                break
            child_less = col < s.best_cols[j]
        else:
            child_less = True
        s.perm[j] = v
        s.cur_cols[j] = col
        if j == n - 1:
            if not s.have_best or child_less:
                s.have_best = True
                for k in range(n):
                    s.best_perm[k] = s.perm[k]
                    s.best_cols[k] = s.cur_cols[k]
                updated = True
                less = False
            continue
        s.used[v] = 1
        if _canon_dfs(s, j + 1, child_less):
            updated = True
            less = False
        s.used[v] = 0
    return updated


def canonical_permutation(int n, adj):
    if n <= 1:
        return list(range(n))
    if n > 62:
        raise ValueError("canonical labelling limited to 62 vertices")
    cdef CanonState s
    s.n = n
    s.have_best = False
    s.adj = <uint64_t*> calloc(n, sizeof(uint64_t))
    s.perm = <int*> calloc(n, sizeof(int))
    s.best_perm = <int*> calloc(n, sizeof(int))
    s.best_cols = <uint64_t*> calloc(n, sizeof(uint64_t))
    s.cur_cols = <uint64_t*> calloc(n, sizeof(uint64_t))
    s.used = <char*> calloc(n, 1)
    cdef int i
    try:
        if (s.adj == NULL or s.perm == NULL or s.best_perm == NULL or s.best_cols == NULL
                or s.cur_cols == NULL or s.used == NULL):
            raise MemoryError()
        for i in range(n):
            s.adj[i] = adj[i]
        with nogil:
            _canon_dfs(&s, 0, True)
        return [s.best_perm[i] for i in range(n)]
    finally:
        free(s.adj)
        free(s.perm)
        free(s.best_perm)
        free(s.best_cols)
        free(s.cur_cols)
        free(s.used)
