import pytest
from hypothesis import given
from hypothesis import strategies as st

from scarfkit.homology import GF2, QQ
from scarfkit.monomials import Monomial, MonomialIdeal, VariableSet, parse_ideal, parse_monomial, restrict, scale
from scarfkit.scarf import (
    CapExceeded,
    bps_failures,
    is_generic,
    is_scarf,
    is_scarf_face,
    is_taylor,
    label_census,
    lcm_lattice,
    restrict_complex,
    scarf_complex,
)

import oracles
from strategies import exponent_vectors, ideals, variables

XYZ = VariableSet(("x", "y", "z"))
TRI = parse_ideal("(x*y, x*z, y*z)", XYZ)
SQ = parse_ideal("(x^2*y^2, x^2*z^2, y^2*z^2, x*y*z)", XYZ)


def idx(I, *texts):
    return [I.exponent_vectors.index(parse_monomial(t, I.variables).exponents) for t in texts]


class TestScarfFace:
    def test_examples(self):
        assert not is_scarf_face(TRI, idx(TRI, "x*y", "x*z"))
        for i in range(3):
            assert is_scarf_face(TRI, [i])
        assert is_scarf_face(SQ, idx(SQ, "x^2*y^2", "x*y*z"))

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            is_scarf_face(TRI, [5])

    @given(ideals(max_vars=4, max_gens=8, max_exp=2))
    def test_local_criterion_matches_census(self, I):
        gens = I.exponent_vectors
        census = label_census(I)
        unique = {subs[0] for subs in census.values() if len(subs) == 1}
        for sigma in (s for subs in census.values() for s in subs):
            assert is_scarf_face(I, sigma) == (sigma in unique)
        assert scarf_complex(I).member_sets() == oracles.scarf_faces(list(gens))


class TestScarfComplex:
    def test_examples(self):
        assert scarf_complex(TRI).member_sets() == {(0,), (1,), (2,)}
        XY = parse_ideal("(x, y)")
        assert scarf_complex(XY).member_sets() == {(0,), (1,), (0, 1)}
        D = scarf_complex(SQ)
        center = idx(SQ, "x*y*z")[0]
        edges = {f for f in D.member_sets() if len(f) == 2}
        assert len(D.faces_of_dim(0)) == 4 and D.dimension == 1
        assert edges == {tuple(sorted((center, k))) for k in range(4) if k != center}

    def test_cap(self):
        V = VariableSet(tuple(f"v{i}" for i in range(25)))
        big = MonomialIdeal(V, [tuple(int(i == j) for i in range(25)) for j in range(25)])
        with pytest.raises(CapExceeded):
            scarf_complex(big)
        with pytest.raises(CapExceeded):
            is_scarf(big)
        # raising the generator cap still stops at the face cap (2^25 - 1 faces)
        with pytest.raises(CapExceeded):
            scarf_complex(big, cap=25)

    def test_zero_ideal(self):
        Z = MonomialIdeal(XYZ)
        assert scarf_complex(Z).faces == ()
        assert is_scarf(Z) and is_taylor(Z)

    def test_deterministic_order(self):
        faces = [f.members for f in scarf_complex(SQ).faces]
        assert faces == sorted(faces, key=lambda f: (len(f), f))


class TestLattice:
    def test_examples(self):
        XY = parse_ideal("(x, y)")
        assert {str(m) for m in lcm_lattice(XY).elements} == {"x", "y", "x*y"}
        assert {str(m) for m in lcm_lattice(TRI).elements} == {"x*y", "x*z", "y*z", "x*y*z"}
        assert len(lcm_lattice(SQ)) == 8

    def test_element_cap(self):
        with pytest.raises(CapExceeded):
            lcm_lattice(SQ, element_cap=5)

    @given(ideals(max_gens=6))
    def test_closed_and_generated(self, I):
        L = set(m.exponents for m in lcm_lattice(I).elements)
        census = set(label_census(I))
        assert L == census
        for a in L:
            for b in L:
                assert oracles.lcm(a, b) in L


class TestRestrictComplex:
    def test_examples(self):
        XY = parse_ideal("(x, y)")
        K = restrict_complex(scarf_complex(XY), parse_monomial("x", XY.variables))
        assert K.vertices == [0] and K.dimension == 0
        K = restrict_complex(scarf_complex(TRI), parse_monomial("x*y*z", XYZ))
        assert K.vertices == [0, 1, 2] and K.dimension == 0
        D = scarf_complex(SQ)
        assert restrict_complex(D, SQ.top_lcm()) == D.simplicial_complex()


class TestIsScarf:
    def test_examples(self):
        assert is_scarf(parse_ideal("(x, y)"))
        assert not is_scarf(TRI)
        assert is_scarf(SQ)
        assert bps_failures(TRI) == [parse_monomial("x*y*z", XYZ)]

    def test_trivial_ideals(self):
        assert is_scarf(parse_ideal("(x^3*y)"))
        assert is_scarf(MonomialIdeal(XYZ, [(0, 0, 0)]))

    @given(ideals(max_vars=3, max_gens=5, max_exp=2), st.sampled_from([0, 2]))
    def test_lattice_reduction_matches_divisor_sweep(self, I, p):
        F = QQ if p == 0 else GF2
        assert is_scarf(I, F) == oracles.is_scarf_bruteforce(I.exponent_vectors, p)

    @given(ideals(max_vars=5, max_gens=6))
    def test_taylor_and_generic_imply_scarf(self, I):
        s = is_scarf(I)
        if is_taylor(I) or is_generic(I):
            assert s

    @given(st.data())
    def test_scaling(self, data):
        n = data.draw(st.integers(1, 5))
        I = data.draw(ideals(nvars=n, max_gens=6))
        m = Monomial(data.draw(exponent_vectors(n)), variables(n))
        mI = scale(m, I)
        assert is_scarf(I) == is_scarf(mI)
        assert scarf_complex(I).member_sets() == scarf_complex(mI).member_sets()

    @given(st.data())
    def test_restriction_preserves(self, data):
        n = data.draw(st.integers(1, 5))
        I = data.draw(ideals(nvars=n, max_gens=6))
        m = Monomial(data.draw(exponent_vectors(n, 4)), variables(n))
        R = restrict(I, m)
        if is_scarf(I):
            assert is_scarf(R)
        if is_taylor(I):
            assert is_taylor(R)


class TestTaylorGeneric:
    def test_taylor_examples(self):
        assert is_taylor(parse_ideal("(x, y)"))
        assert not is_taylor(TRI)
        V = VariableSet(("x1", "x2", "x3", "x4", "y1"))
        assert is_taylor(parse_ideal("(x1*x2*x3*x4, x1*x2*x3*y1)", V))

    def test_taylor_cap(self):
        V = VariableSet(tuple(f"v{i}" for i in range(21)))
        with pytest.raises(CapExceeded):
            is_taylor(MonomialIdeal(V, [tuple(int(i == j) for i in range(21)) for j in range(21)]))

    @given(ideals(max_gens=7, max_exp=2))
    def test_taylor_matches_census(self, I):
        census = label_census(I)
        assert is_taylor(I) == all(len(s) == 1 for s in census.values())

    def test_generic_examples(self):
        WXYZ = VariableSet(("w", "x", "y", "z"))
        assert is_generic(parse_ideal("(w*x, y*z)", WXYZ))
        assert not is_generic(parse_ideal("(x*y, x*z)", XYZ))
        assert is_generic(SQ)
