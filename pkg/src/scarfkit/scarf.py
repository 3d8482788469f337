"""Scarf complexes, lcm lattices and the resolution test for Scarfness.

An ideal is Scarf when its Scarf complex supports a resolution.  That is
decided with the acyclicity criterion: every label-restricted subcomplex
must be acyclic or empty.  The restricted complex only changes at lcms of
generator subsets, so the lcm lattice is a complete finite test set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from . import _kernels
from .homology import QQ, FieldSpec, SimplicialComplex, is_acyclic
from .monomials import Monomial, MonomialIdeal, _check_same, _divides, _lcm

SCARF_GENERATOR_CAP = 24
TAYLOR_GENERATOR_CAP = 20
LATTICE_ELEMENT_CAP = 2**16
SCARF_FACE_CAP = 2**16


class CapExceeded(RuntimeError):
    """An exponential enumeration hit its configured limit."""


@dataclass(frozen=True)
class LabeledFace:
    members: tuple[int, ...]
    label: Monomial


@dataclass(frozen=True)
class ScarfComplex:
    ideal: MonomialIdeal
    faces: tuple[LabeledFace, ...]  # non-empty faces, lexicographic by size

    @property
    def dimension(self) -> int:
        return max((len(f.members) for f in self.faces), default=0) - 1

    def member_sets(self) -> frozenset[tuple[int, ...]]:
        return frozenset(f.members for f in self.faces)

    def faces_of_dim(self, d: int) -> list[LabeledFace]:
        return [f for f in self.faces if len(f.members) == d + 1]

    def simplicial_complex(self) -> SimplicialComplex:
        if self.ideal.is_zero():
            return SimplicialComplex()
        return SimplicialComplex([()] + [f.members for f in self.faces], closed=True)

    def is_tree(self) -> bool:
        """Connected, at most one-dimensional, edges = vertices - 1."""
        return self.dimension <= 1 and is_acyclic(self.simplicial_complex())


@dataclass(frozen=True)
class LcmLattice:
    elements: tuple[Monomial, ...]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return m in self.elements


def _check_cap(I: MonomialIdeal, cap: int) -> None:
    if len(I) > cap:
        raise CapExceeded(f"ideal has {len(I)} generators, cap is {cap}")


def _subset_lcm(gens, members) -> tuple[int, ...]:
    lab = (0,) * (len(gens[0]) if gens else 0)
    for i in members:
        lab = _lcm(lab, gens[i])
    return lab


def is_scarf_face(I: MonomialIdeal, sigma: Iterable[int]) -> bool:
    """True iff no other generator subset has the same lcm as ``sigma``."""
    face = tuple(sorted(set(sigma)))
    gens = I.exponent_vectors
    if any(i < 0 or i >= len(gens) for i in face):
        raise IndexError(f"face {face} out of range for {len(gens)} generators")
    if not face:
        return True
    return _kernels._pykernels._unique(gens, face, _subset_lcm(gens, face))


def scarf_complex(I: MonomialIdeal, cap: int = SCARF_GENERATOR_CAP) -> ScarfComplex:
    _check_cap(I, cap)
    gens = list(I.exponent_vectors)
    if not gens:
        return ScarfComplex(I, ())
    res = _kernels.scarf_faces(gens, SCARF_FACE_CAP)
    if res is None:
        raise CapExceeded(f"more than {SCARF_FACE_CAP} Scarf faces")
    faces, labels = res
    V = I.variables
    out = tuple(LabeledFace(tuple(f), Monomial(tuple(l), V)) for f, l in zip(faces, labels))
    D = ScarfComplex(I, out)
    _assert_scarf_invariants(D)
    return D


def _assert_scarf_invariants(D: ScarfComplex) -> None:
    members = D.member_sets()
    labels = [f.label.exponents for f in D.faces]
    if len(set(labels)) != len(labels):
        raise AssertionError("Scarf complex has repeated labels")
    for f in members:
        if len(f) > 1:
            for k in range(len(f)):
                if f[:k] + f[k + 1 :] not in members:
                    raise AssertionError(f"Scarf complex not closed under faces at {f}")


def lcm_lattice(
    I: MonomialIdeal, cap: int = SCARF_GENERATOR_CAP, element_cap: int = LATTICE_ELEMENT_CAP
) -> LcmLattice:
    """All lcms of non-empty generator subsets."""
    _check_cap(I, cap)
    gens = list(I.exponent_vectors)
    if not gens:
        return LcmLattice(())
    elems = _kernels.lcm_closure(gens, element_cap)
    if elems is None:
        raise CapExceeded(f"lcm lattice exceeds {element_cap} elements")
    return LcmLattice(tuple(Monomial(tuple(e), I.variables) for e in elems))


def restrict_complex(D: ScarfComplex, m: Monomial) -> SimplicialComplex:
    """Faces of ``D`` whose label divides ``m`` (plus the empty face)."""
    _check_same(D.ideal.variables, m.variables)
    me = m.exponents
    keep = [f.members for f in D.faces if _divides(f.label.exponents, me)]
    if D.ideal.is_zero():
        return SimplicialComplex()
    return SimplicialComplex([()] + keep, closed=True)


def _subcomplex_ok(members: list[tuple[int, ...]], field: FieldSpec) -> bool:
    if not members:
        return True  # empty
    return is_acyclic(SimplicialComplex([()] + members, closed=True), field)


def bps_failures(
    I: MonomialIdeal,
    field: FieldSpec = QQ,
    cap: int = SCARF_GENERATOR_CAP,
    element_cap: int = LATTICE_ELEMENT_CAP,
    first_only: bool = True,
    D: ScarfComplex | None = None,
) -> list[Monomial]:
    """Lattice elements whose restricted Scarf complex is neither acyclic nor empty."""
    if len(I) <= 1:
        return []
    if D is None:
        D = scarf_complex(I, cap)
    lattice = _kernels.lcm_closure(list(I.exponent_vectors), element_cap)
    if lattice is None:
        raise CapExceeded(f"lcm lattice exceeds {element_cap} elements")
    labels = [f.label.exponents for f in D.faces]
    members = [f.members for f in D.faces]
    masks = _kernels.divisor_masks(labels, lattice)
    verdict: dict[int, bool] = {}
    bad = []
    for m, mask in zip(lattice, masks):
        ok = verdict.get(mask)
        if ok is None:
            sub = [members[i] for i in range(len(members)) if mask >> i & 1]
            ok = verdict[mask] = _subcomplex_ok(sub, field)
        if not ok:
            bad.append(Monomial(m, I.variables))
            if first_only:
                break
    return bad


def is_scarf(
    I: MonomialIdeal,
    field: FieldSpec = QQ,
    cap: int = SCARF_GENERATOR_CAP,
    element_cap: int = LATTICE_ELEMENT_CAP,
) -> bool:
    """Whether the Scarf complex of ``I`` is its minimal free resolution.

    Zero and principal ideals are Scarf by convention.
    """
    _check_cap(I, cap)
    return not bps_failures(I, field, cap, element_cap)


def is_taylor(I: MonomialIdeal, cap: int = TAYLOR_GENERATOR_CAP) -> bool:
    """Whether all 2^q subset labels are distinct.

    Equivalent to: no generator divides the lcm of all the others, since
    g | lcm(sigma - g) for some sigma forces g | lcm(all - g).
    """
    _check_cap(I, cap)
    gens = I.exponent_vectors
    q = len(gens)
    if q <= 1:
        return True
    for k in range(q):
        rest = _subset_lcm(gens, [i for i in range(q) if i != k])
        if _divides(gens[k], rest):
            return False
    return True


def is_generic(I: MonomialIdeal) -> bool:
    """Genericity: any two generators sharing a positive degree in some
    variable admit a third generator dividing their lcm with every exponent of
    the lcm's support strictly lowered."""
    gens = I.exponent_vectors
    for a, b in itertools.combinations(range(len(gens)), 2):
        ga, gb = gens[a], gens[b]
        if not any(x == y and x > 0 for x, y in zip(ga, gb)):
            continue
        L = _lcm(ga, gb)
        found = False
        for c, gc in enumerate(gens):
            if c == a or c == b:
                continue
            if all(z < l if l > 0 else z == 0 for z, l in zip(gc, L)):
                found = True
                break
        if not found:
            return False
    return True


def label_census(I: MonomialIdeal, cap: int = TAYLOR_GENERATOR_CAP) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Map each label to the non-empty generator subsets carrying it."""
    _check_cap(I, cap)
    gens = I.exponent_vectors
    q = len(gens)
    census: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for r in range(1, q + 1):
        for sigma in itertools.combinations(range(q), r):
            census.setdefault(_subset_lcm(gens, sigma), []).append(sigma)
    return census
