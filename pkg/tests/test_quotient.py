import random
from fractions import Fraction

import pytest

from symlab.fields import GF, QQ, FieldError
from symlab.linalg import Matrix
from symlab.poly import FunctionField, UniPoly
from symlab.quotient import (
    AlgebraHom,
    MonogenicAlgebra,
    SubstitutionMap,
    aut_description,
    brute_force_automorphisms,
    fpa_decompose,
    idempotents,
    split_roots,
    vandermonde_pair,
)


def algebra(field, coeffs):
    return MonogenicAlgebra(field, UniPoly(field, coeffs))


X3 = algebra(QQ, [0, 0, 0, 1])  # Q[X]/(X^3)
X3X2 = algebra(QQ, [0, 0, -1, 1])  # Q[X]/(X^3 - X^2)


class TestElementArithmetic:
    def test_mul_mod_examples(self):
        x = X3.gen()
        assert ((x * x) * (x * x)).is_zero()  # X^4 = 0 mod X^3
        y = X3X2.gen()
        assert (y * y) * (y * y) == y * y  # X^2 is idempotent mod X^3 - X^2
        # oracle: reduce X^4 by long division mod X^3 - 3X^2
        a = algebra(QQ, [0, 0, -3, 1])
        x4 = UniPoly(QQ, [0, 0, 0, 0, 1])
        _, r = divmod(x4, a.modulus)
        assert r == UniPoly(QQ, [0, 0, 9])
        z = a.gen()
        assert (z * z) * (z * z) == a.element([0, 0, 9])

    def test_unit_and_commutativity(self):
        x = X3X2.gen()
        one = X3X2.one()
        assert one * x == x and x * one == x
        u = X3X2.element([1, 2, 3])
        v = X3X2.element([-1, 0, Fraction(1, 2)])
        assert u * v == v * u

    def test_owner_mismatch(self):
        with pytest.raises(ValueError):
            X3.gen() * X3X2.gen()


class TestSubstitutionMaps:
    def test_apply_examples(self):
        # X -> aX on Q(a)[X]/(X^2)
        ff = FunctionField(QQ, ("a",))
        a2 = algebra(ff, [0, 0, 1])
        amap = SubstitutionMap(a2, [ff.zero, ff.symbol("a")])
        assert amap(a2.gen()) == a2.element([0, ff.symbol("a")])
        # X -> -X + 2X^2 fixes X^2 in Q[X]/(X^3 - X^2)
        g = SubstitutionMap(X3X2, [0, -1, 2])
        x = X3X2.gen()
        assert g(x * x) == x * x
        assert SubstitutionMap.identity(X3X2)(x) == x

    def test_apply_is_ring_hom_when_endomorphism(self):
        g = SubstitutionMap(X3X2, [0, -1, 2])
        assert g.is_endomorphism()
        rng = random.Random(3)
        for _ in range(50):
            u = X3X2.element([Fraction(rng.randint(-5, 5)) for _ in range(3)])
            v = X3X2.element([Fraction(rng.randint(-5, 5)) for _ in range(3)])
            assert g(u + v) == g(u) + g(v)
            assert g(u * v) == g(u) * g(v)

    def test_is_endomorphism_examples(self):
        # on Q[X]/(X^3): c + aX + bX^2 is an endomorphism iff c = 0
        ff = FunctionField(QQ, ("a", "b", "c"))
        a3 = algebra(ff, [0, 0, 0, 1])
        a, b, c = ff.symbol("a"), ff.symbol("b"), ff.symbol("c")
        assert SubstitutionMap(a3, [ff.zero, a, b]).is_endomorphism()
        assert not SubstitutionMap(a3, [c, a, b]).is_endomorphism()
        # X -> aX + (1-a)X^2 with a = 5 on Q[X]/(X^3 - X^2)
        assert SubstitutionMap(X3X2, [0, 5, -4]).is_endomorphism()
        # X -> aX + (1-a)/t X^2 on Q(a,t)[X]/(X^3 - tX^2)
        fft = FunctionField(QQ, ("a", "t"))
        at, tt = fft.symbol("a"), fft.symbol("t")
        famalg = MonogenicAlgebra(fft, UniPoly(fft, [fft.zero, fft.zero, -tt, fft.one]))
        g = SubstitutionMap(famalg, [fft.zero, at, (fft.one - at) / tt])
        assert g.is_endomorphism()

    def test_is_automorphism_examples(self):
        assert not SubstitutionMap(X3, [0, 0, 5]).is_automorphism()  # a = 0
        assert SubstitutionMap(X3X2, [0, -1, 2]).is_automorphism()
        assert SubstitutionMap.identity(X3).is_automorphism()
        assert SubstitutionMap(X3, [0, 0, 1]).is_endomorphism()  # X -> X^2

    def test_inverse_examples(self):
        # symbolic: X -> aX inverts to X -> X/a
        ff = FunctionField(QQ, ("a",))
        a3 = algebra(ff, [0, 0, 0, 1])
        amap = SubstitutionMap(a3, [ff.zero, ff.symbol("a")])
        assert amap.inverse().image == UniPoly(ff, [ff.zero, ff.symbol("a").inverse()])
        # involution is self-inverse
        g = SubstitutionMap(X3X2, [0, -1, 2])
        assert g.inverse() == g
        # oracle: (X - X^2) + (X - X^2)^2 = X mod X^3
        h = SubstitutionMap(X3, [0, 1, 1])
        hinv = h.inverse()
        assert hinv.image == UniPoly(QQ, [0, 1, -1])
        assert h.compose(hinv).is_identity() and hinv.compose(h).is_identity()

    def test_inverse_of_non_automorphism(self):
        with pytest.raises(ValueError):
            SubstitutionMap(X3, [0, 0, 1]).inverse()

    def test_order_examples(self):
        assert SubstitutionMap(X3X2, [0, -1, 2]).order() == 2
        assert SubstitutionMap.identity(X3).order() == 1
        f7 = GF(7)
        a3 = algebra(f7, [0, 0, 0, 1])
        assert SubstitutionMap(a3, [0, 2, 0]).order() == 3  # 2^3 = 1 mod 7

    def test_automorphism_implies_endomorphism_randomized(self):
        rng = random.Random(5)
        f5 = GF(5)
        a = MonogenicAlgebra.from_roots(f5, [0, 1, 2])
        elems = list(f5.elements())
        for _ in range(100):
            g = SubstitutionMap(a, [elems[rng.randrange(5)] for _ in range(3)])
            if g.is_automorphism():
                assert g.is_endomorphism()
                inv = g.inverse()
                assert g.compose(inv).is_identity()


class TestIdempotents:
    def test_degree_one_lagrange(self):
        a = MonogenicAlgebra.from_roots(QQ, [0, 1])
        e1, e2 = idempotents(a, [0, 1])
        assert e1 == a.element([1, -1]) and e2 == a.element([0, 1])

    def test_cubic_example(self):
        a = MonogenicAlgebra.from_roots(QQ, [0, 1, 2])
        es = idempotents(a, [0, 1, 2])
        # oracle: e0 = (X^2 - 3X + 2)/2, then e0^2 = e0
        assert es[0] == a.element([1, Fraction(-3, 2), Fraction(1, 2)])
        assert es[0] * es[0] == es[0]

    def test_symbolic_family_idempotent(self):
        ff = FunctionField(QQ, ("t",))
        t = ff.symbol("t")
        a = MonogenicAlgebra.from_roots(ff, [ff.zero, t, ff.one])
        es = idempotents(a, [ff.zero, t, ff.one])
        # e_t = (X^2 - X)/(t^2 - t)
        d = (t * t - t).inverse()
        assert es[1] == a.element([ff.zero, -d, d])

    def test_idempotent_suite_randomized(self):
        rng = random.Random(42)
        done = 0
        while done < 200:
            n = rng.choice([3, 4])
            roots = rng.sample(range(-5, 6), n)
            a = MonogenicAlgebra.from_roots(QQ, roots)
            es = idempotents(a, roots)
            for i in range(n):
                for j in range(n):
                    expected = es[i] if i == j else a.zero()
                    assert es[i] * es[j] == expected
            assert sum(es[1:], es[0]) == a.one()
            x = a.gen()
            for z, e in zip(roots, es):
                assert x * e == QQ.coerce(z) * e
            # coordinates of X in the idempotent basis equal the root vector
            # (idempotent coords of a power-basis vector c are M * c)
            m, _ = vandermonde_pair(QQ, roots)
            coords = m.mul_vec([QQ.coerce(c) for c in x.coeffs])
            assert coords == [QQ.coerce(z) for z in roots]
            done += 1

    def test_errors(self):
        a = MonogenicAlgebra.from_roots(QQ, [0, 1, 2])
        with pytest.raises(ValueError):
            idempotents(a, [0, 1, 1])
        with pytest.raises(ValueError):
            idempotents(a, [0, 1, 3])


class TestVandermonde:
    def test_symbolic_inverse_of_three_roots(self):
        ff = FunctionField(QQ, ("t",))
        t = ff.symbol("t")
        m, m_inv = vandermonde_pair(ff, [ff.zero, t, ff.one])
        assert m * m_inv == Matrix.identity(ff, 3)
        # published inverse: (1/((1-t)t)) [[t-t^2,0,0],[-(1-t^2),1,-t^2],[1-t,-1,t]]
        s = ((ff.one - t) * t).inverse()
        expected = Matrix(
            ff,
            [
                [(t - t * t) * s, ff.zero, ff.zero],
                [-(ff.one - t * t) * s, s, -(t * t) * s],
                [(ff.one - t) * s, -s, t * s],
            ],
        )
        assert m_inv == expected

    def test_det_of_geometric_roots(self):
        ff = FunctionField(QQ, ("t",))
        t = ff.symbol("t")
        m, m_inv = vandermonde_pair(ff, [ff.zero, t, t * t])
        assert m.det() == t**4 * (t - ff.one)
        assert m * m_inv == Matrix.identity(ff, 3)
        # published inverse (1/(t^4(t-1))) [[t^5-t^4,0,0],[-(t^4-t^2),t^4,-t^2],[t^2-t,-t^2,t]]
        s = (t**4 * (t - ff.one)).inverse()
        expected = Matrix(
            ff,
            [
                [(t**5 - t**4) * s, ff.zero, ff.zero],
                [-(t**4 - t * t) * s, t**4 * s, -(t * t) * s],
                [(t * t - t) * s, -(t * t) * s, t * s],
            ],
        )
        assert m_inv == expected

    def test_identity_round_trip(self):
        m, m_inv = vandermonde_pair(QQ, [2, 3, 5, 7])
        assert m * m_inv == Matrix.identity(QQ, 4)

    def test_repeated_roots_rejected(self):
        with pytest.raises(ValueError):
            vandermonde_pair(QQ, [1, 1, 2])


class TestDecomposition:
    def test_examples(self):
        d = fpa_decompose([(0, 2), (1, 3), (2, 3)])
        assert d.parts == ((2, 1), (3, 2)) and d.degree == 8
        assert fpa_decompose([(0, 1), (1, 1), (2, 1)]).parts == ((1, 3),)
        assert fpa_decompose([(0, 3)]).parts == ((3, 1),)

    def test_repeated_roots_rejected(self):
        with pytest.raises(ValueError):
            fpa_decompose([(0, 2), (0, 3)])
        with pytest.raises(ValueError):
            fpa_decompose([(0, 0)])

    def test_aut_description(self):
        d = aut_description(fpa_decompose([(0, 1), (1, 1), (2, 1)]))
        assert d.permutation_part == "S3"
        assert d.finite_order == 6
        assert d.factors[0].connected == "trivial"

        d = aut_description(fpa_decompose([(0, 3)]))
        assert d.permutation_part == "S1"
        assert d.finite_order is None
        assert d.factors[0].connected_dim == 2
        assert "extended 1 time" in d.factors[0].connected

        d = aut_description(fpa_decompose([(0, 2), (1, 3), (2, 3)]))
        assert d.permutation_part == "S1 x S2"
        assert d.finite_order is None

    def test_finite_order_matches_brute_force(self):
        f5 = GF(5)
        for roots in [[0], [0, 1], [0, 1, 2]]:
            a = MonogenicAlgebra.from_roots(f5, roots)
            desc = aut_description(fpa_decompose([(z, 1) for z in roots]))
            assert desc.finite_order == len(brute_force_automorphisms(a))


class TestBruteForce:
    def test_s3_over_f5(self):
        # full 125-candidate enumeration is the oracle
        a = MonogenicAlgebra.from_roots(GF(5), [0, 1, 2])
        auts = brute_force_automorphisms(a)
        assert len(auts) == 6
        profile = {}
        for g in auts:
            profile[g.order()] = profile.get(g.order(), 0) + 1
        assert profile == {1: 1, 2: 3, 3: 2}  # the S3 order profile
        # closed under composition
        for g in auts:
            for h in auts:
                assert g.compose(h) in auts

    def test_infinite_field_rejected(self):
        with pytest.raises(FieldError):
            brute_force_automorphisms(X3)


class TestAlgebraHom:
    def test_cross_algebra_iso(self):
        # X -> 2X: Q[X]/(X^3) -> itself is an algebra map; scaling roots
        ff = FunctionField(QQ, ("t",))
        t = ff.symbol("t")
        src = MonogenicAlgebra(ff, UniPoly(ff, [ff.zero, ff.zero, -t, ff.one]))
        tgt = MonogenicAlgebra(ff, UniPoly(ff, [ff.zero, ff.zero, -ff.one, ff.one]))
        iso = AlgebraHom(src, tgt, UniPoly(ff, [ff.zero, t]))
        assert iso.is_homomorphism() and iso.is_isomorphism()
        back = iso.inverse_image()
        assert back == UniPoly(ff, [ff.zero, t.inverse()])
        assert iso.inverse_hom().is_isomorphism()

    def test_non_hom_detected(self):
        hom = AlgebraHom(X3, X3X2, UniPoly(QQ, [0, 1]))
        assert not hom.is_homomorphism()


def test_split_roots():
    f5 = GF(5)
    a = MonogenicAlgebra.from_roots(f5, [0, 1, 1, 3])
    rm = split_roots(a)
    assert rm == [(f5.coerce(0), 1), (f5.coerce(1), 2), (f5.coerce(3), 1)]
    # X^2 + 2 does not split over F5 (squares are 0,1,4)
    b = algebra(f5, [2, 0, 1])
    assert split_roots(b) is None
