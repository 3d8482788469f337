"""Reduced simplicial homology ranks over Q or GF(p).

Ranks are computed exactly: fraction-free elimination over the integers for
characteristic 0, plain elimination modulo p otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _kernels


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"field characteristic must be 0 or a prime, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = str(text).strip().lower()
        if t in {"q", "qq", "0", "rationals"}:
            return cls(0)
        if t.startswith("gf"):
            t = t[2:]
        return cls(int(t))

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


class SimplicialComplex:
    """A finite simplicial complex on integer vertices.

    Faces are sorted tuples.  ``SimplicialComplex([])`` is the void complex
    (no faces at all); ``SimplicialComplex([()])`` has only the empty face.
    Any non-void input is closed downward, so the empty face is included.
    """

    __slots__ = ("faces", "_by_dim")

    def __init__(self, faces: Iterable[Iterable[int]] = (), *, closed: bool = False):
        fs = {tuple(sorted(f)) for f in faces}
        if fs and not closed:
            closure = set()
            for f in fs:
                if f in closure:
                    continue
                for mask in range(1 << len(f)):
                    closure.add(tuple(v for b, v in enumerate(f) if mask >> b & 1))
            fs = closure
        self.faces: frozenset[tuple[int, ...]] = frozenset(fs)
        by_dim: dict[int, list[tuple[int, ...]]] = {}
        for f in self.faces:
            by_dim.setdefault(len(f) - 1, []).append(f)
        self._by_dim = {d: sorted(v) for d, v in by_dim.items()}

    @property
    def dimension(self) -> int:
        """Largest face size minus one; -1 for {empty face}, -2 if void."""
        return max(self._by_dim) if self._by_dim else -2

    @property
    def vertices(self) -> list[int]:
        return [f[0] for f in self._by_dim.get(0, [])]

    def is_void(self) -> bool:
        return not self.faces

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        return list(self._by_dim.get(d, []))

    def f_vector(self) -> list[int]:
        return [len(self._by_dim.get(d, [])) for d in range(-1, self.dimension + 1)]

    def is_downward_closed(self) -> bool:
        for f in self.faces:
            for k in range(len(f)):
                if f[:k] + f[k + 1 :] not in self.faces:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        facets = [f for f in self.faces if not any(set(f) < set(g) for g in self.faces)]
        return f"SimplicialComplex(facets={sorted(facets, key=lambda f: (-len(f), f))})"


def boundary_matrix(K: SimplicialComplex, i: int) -> list[list[int]]:
    """Matrix of the i-th boundary map: rows are (i-1)-faces, columns i-faces.

    Removing the j-th vertex (0-based) of a face carries sign (-1)^j.  For
    i = 0 the single row is the empty face (augmented complex).
    """
    rows = K.faces_of_dim(i - 1)
    cols = K.faces_of_dim(i)
    row_index = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, f in enumerate(cols):
        for j in range(len(f)):
            mat[row_index[f[:j] + f[j + 1 :]]][c] = -1 if j % 2 else 1
    return mat


def matrix_rank(mat: list[list[int]], ncols: int, field: FieldSpec = QQ) -> int:
    if not mat or ncols == 0:
        return 0
    if field.characteristic == 0:
        return _kernels.rank_fraction_free(mat, ncols)
    return _kernels.rank_mod_p(mat, ncols, field.characteristic)


def _boundary_rank(K: SimplicialComplex, i: int, field: FieldSpec) -> int:
    cols = len(K.faces_of_dim(i))
    if cols == 0 or not K.faces_of_dim(i - 1):
        return 0
    return matrix_rank(boundary_matrix(K, i), cols, field)


def reduced_homology_ranks(K: SimplicialComplex, field: FieldSpec = QQ) -> list[int]:
    """Ranks of reduced homology in dimensions 0..dim(K)."""
    if K.is_void():
        raise ValueError("reduced homology of the void complex is undefined here")
    top = K.dimension
    ranks = [_boundary_rank(K, i, field) for i in range(0, top + 2)]
    return [len(K.faces_of_dim(i)) - ranks[i] - ranks[i + 1] for i in range(0, top + 1)]


def _connected(K: SimplicialComplex) -> bool:
    verts = K.vertices
    if not verts:
        return False
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in K.faces_of_dim(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in verts}) == 1


def is_acyclic(K: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Non-empty, connected, and no reduced homology in positive degrees.

    Complexes without vertices are "empty" and return False; the caller
    decides what that means.
    """
    if not K.vertices:
        return False
    if not _connected(K):
        return False
    if K.dimension <= 1:
        # a connected graph has first Betti number E - V + 1
        return len(K.faces_of_dim(1)) == len(K.vertices) - 1
    return all(r == 0 for r in reduced_homology_ranks(K, field))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic, counting the empty face."""
    return sum((-1) ** (d) * len(K.faces_of_dim(d)) for d in range(-1, K.dimension + 1))
