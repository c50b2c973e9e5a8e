"""Polynomial layer: gcd, factorization, root counting, Sturm, resultants."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from modcurve.fields import GF, QQ
from modcurve.poly import (
    Poly,
    cauchy_root_bound,
    count_roots_in_field,
    discriminant,
    factor,
    factor_rational_limited,
    frobenius_power,
    is_irreducible,
    is_squarefree,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    resultant,
    roots_in_field,
    series_inv,
    series_mul,
    series_sqrt,
    squarefree_part,
    sturm_real_roots,
)


def P(K, *coeffs):
    """Poly from ascending coefficients."""
    return Poly(K, list(coeffs))


class TestGcd:
    def test_gcd_with_zero_is_monic(self):
        F3 = GF(3)
        f = P(F3, 2, 0, 1)  # t^2 + 2
        assert poly_gcd(f, Poly.zero(F3)) == f.monic()
        assert poly_gcd(Poly.zero(F3), Poly.zero(F3)).is_zero()

    def test_hand_division_example_f3(self):
        # t^3 + t = t (t^2 + 1) over F_3
        F3 = GF(3)
        a = P(F3, 1, 0, 1)      # t^2 + 1
        b = P(F3, 0, 1, 0, 1)   # t^3 + t
        assert poly_gcd(a, b) == P(F3, 1, 0, 1)

    def test_coprime_linear_over_q(self):
        f = P(QQ, -1, 1)
        g = P(QQ, -2, 1)
        assert poly_gcd(f, g).is_one()

    def test_gcd_divides_both(self):
        F5 = GF(5)
        rng = random.Random(0)
        for _ in range(25):
            a = Poly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 7))])
            b = Poly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 7))])
            if a.is_zero() or b.is_zero():
                continue
            g = poly_gcd(a, b)
            if g.is_zero():
                continue
            assert (a % g).is_zero() and (b % g).is_zero()

    def test_xgcd_identity(self):
        F7 = GF(7)
        a = P(F7, 1, 2, 3)
        b = P(F7, 4, 5)
        g, s, t = poly_xgcd(a, b)
        assert s * a + t * b == g


class TestRootCounting:
    def test_t2_plus_1_over_f3_and_f9(self):
        F3 = GF(3)
        f = P(F3, 1, 0, 1)
        assert count_roots_in_field(f, 1) == 0
        assert count_roots_in_field(f, 2) == 2  # -1 is a square in F_9

    def test_full_splitting(self):
        for K in (GF(5), GF(3, 2)):
            q = K.order
            # t^q - t
            coeffs = [K.zero] * (q + 1)
            coeffs[1] = K.neg(K.one)
            coeffs[q] = K.one
            f = Poly(K, coeffs)
            assert count_roots_in_field(f, 1) == q

    def test_eta_minpoly_mod3_has_no_roots(self):
        F3 = GF(3)
        f = P(F3, 1, 1, 2, 1)  # t^3 + 2t^2 + t + 1
        assert count_roots_in_field(f, 1) == 0

    @pytest.mark.parametrize("K", [GF(3), GF(5), GF(7), GF(3, 2), GF(3, 4), GF(17)], ids=repr)
    def test_matches_brute_force(self, K):
        rng = random.Random(42)
        for _ in range(20):
            deg = rng.randrange(1, 7)
            coeffs = [K.random(rng) for _ in range(deg)] + [K.one]
            f = Poly(K, coeffs)
            brute = sum(1 for a in K.elements() if K.is_zero(f.eval(a)))
            assert count_roots_in_field(f, 1) == brute

    def test_roots_in_field_values(self):
        F5 = GF(5)
        f = P(F5, 2, 0, 1) * P(F5, 3, 1)  # (t^2+2)(t+3)
        rs = roots_in_field(f)
        assert set(rs) == {a for a in range(5) if F5.is_zero(f.eval(a))}

    def test_frobenius_power_composition(self):
        F9 = GF(3, 2)
        f = Poly(F9, [F9.gen, F9.one, F9.one, F9.zero, F9.one])
        direct = Poly.x(F9).powmod(9**3, f)
        assert frobenius_power(f, 3) == direct


class TestFactor:
    def test_irreducible_quadratic_f3(self):
        F3 = GF(3)
        f = P(F3, 1, 0, 1)
        assert factor(f) == [(P(F3, 1, 0, 1), 1)]

    def test_constructed_multiplicities_f5(self):
        F5 = GF(5)
        f = P(F5, -1, 1) * P(F5, -1, 1) * P(F5, -2, 1)
        fac = factor(f)
        assert (P(F5, 4, 1), 2) in fac and (P(F5, 3, 1), 1) in fac
        assert len(fac) == 2

    def test_fermat_f7(self):
        F7 = GF(7)
        coeffs = [F7.zero] * 8
        coeffs[1] = F7.neg(F7.one)
        coeffs[7] = F7.one
        f = Poly(F7, coeffs)
        fac = factor(f)
        assert len(fac) == 7 and all(g.degree == 1 and e == 1 for g, e in fac)

    @pytest.mark.parametrize("K", [GF(3), GF(3, 2), GF(17)], ids=repr)
    def test_product_reconstructs_and_factors_irreducible(self, K):
        rng = random.Random(7)
        for _ in range(15):
            deg = rng.randrange(2, 8)
            coeffs = [K.random(rng) for _ in range(deg)] + [K.one]
            f = Poly(K, coeffs)
            fac = factor(f)
            prod = Poly.one(K)
            for g, e in fac:
                for _ in range(e):
                    prod = prod * g
                # irreducibility: no roots in F_{q^d} for proper d < deg g
                # that would come from a smaller-degree factor
                for d in range(1, g.degree):
                    if g.degree % d == 0:
                        assert poly_gcd(
                            frobenius_power(g, d) - Poly.x(K), g
                        ).degree == 0
            assert prod == f.monic()

    def test_is_irreducible(self):
        F3 = GF(3)
        assert is_irreducible(P(F3, 1, 2, 0, 1))
        assert not is_irreducible(P(F3, 0, 1, 0, 1))


class TestSturm:
    def test_no_real_roots(self):
        assert sturm_real_roots(P(QQ, 1, 0, 1)) == 0

    def test_eta_minpoly_totally_real(self):
        mu = P(QQ, 7, 7, -7, 1)
        assert sturm_real_roots(mu) == 3

    def test_one_real_cube_root(self):
        assert sturm_real_roots(P(QQ, -2, 0, 0, 1)) == 1

    def test_interval_counts(self):
        mu = P(QQ, 7, 7, -7, 1)
        # sign changes locate roots in (-1,0), (2,6) ... just check splits
        total = sturm_real_roots(mu)
        a = sturm_real_roots(mu, -10, 0)
        b = sturm_real_roots(mu, 0, 10)
        assert a + b == total

    def test_rejects_non_squarefree(self):
        f = P(QQ, 1, 1) * P(QQ, 1, 1)
        with pytest.raises(ValueError):
            sturm_real_roots(f)

    @given(
        roots=st.lists(
            st.integers(min_value=-20, max_value=20), min_size=1, max_size=4, unique=True
        ),
        extra_irreducible=st.booleans(),
    )
    def test_constructed_root_counts(self, roots, extra_irreducible):
        f = Poly.one(QQ)
        for r in roots:
            f = f * P(QQ, -r, 1)
        if extra_irreducible:
            f = f * P(QQ, 1, 0, 1)
        assert sturm_real_roots(f) == len(roots)

    def test_grid_refinement_oracle(self):
        # oracle: count sign changes on an integer grid finer than root gaps
        rng = random.Random(3)
        for _ in range(20):
            roots = rng.sample(range(-12, 12), rng.randrange(1, 4))
            f = Poly.one(QQ)
            for r in roots:
                f = f * P(QQ, Fraction(-r), Fraction(1))
            M = int(cauchy_root_bound(f)) + 1
            grid = [Fraction(i, 2) for i in range(-2 * M, 2 * M + 1)]
            vals = [f.eval(x) for x in grid]
            changes = 0
            for u, v in zip(vals, vals[1:]):
                if u * v < 0:
                    changes += 1
                elif u == 0:
                    changes += 0  # roots on grid hit exactly
            exact_on_grid = sum(1 for v in vals if v == 0)
            assert sturm_real_roots(f) == changes + exact_on_grid


class TestResultant:
    def test_resultant_vanishes_iff_common_root(self):
        F7 = GF(7)
        f = P(F7, -2, 1) * P(F7, -3, 1)
        g = P(F7, -2, 1) * P(F7, -4, 1)
        assert F7.is_zero(resultant(f, g))
        h = P(F7, -5, 1)
        assert not F7.is_zero(resultant(f, h))

    def test_resultant_product_of_evaluations(self):
        # Res(f, g) = lc(f)^deg g * prod g(alpha_i) over roots of f
        F11 = GF(11)
        f = P(F11, -1, 1) * P(F11, -2, 1) * P(F11, -3, 1)
        g = P(F11, 5, 0, 1)
        expected = F11.one
        for r in (1, 2, 3):
            expected = F11.mul(expected, g.eval(r))
        assert resultant(f, g) == expected

    def test_discriminant_quadratic(self):
        # disc(t^2 + bt + c) = b^2 - 4c
        f = P(QQ, 3, 5, 1)
        assert discriminant(f) == Fraction(25 - 12)


class TestRationalFactor:
    def test_rational_roots(self):
        f = P(QQ, Fraction(-1, 2), 1) * P(QQ, 3, 1) * P(QQ, 1, 0, 1)
        rs = rational_roots(f)
        assert rs == [Fraction(-3), Fraction(1, 2)]

    def test_limited_factor_cubic(self):
        f = P(QQ, 7, 7, -7, 1)
        fac = factor_rational_limited(f)
        assert fac == [(f, 1)]

    def test_limited_factor_mixed(self):
        f = P(QQ, -1, 1) * P(QQ, -1, 1) * P(QQ, 1, 1, 1)
        fac = factor_rational_limited(f)
        assert (P(QQ, -1, 1), 2) in fac and (P(QQ, 1, 1, 1), 1) in fac


class TestSeries:
    def test_sqrt_square_roundtrip(self):
        for K in (QQ, GF(3), GF(17)):
            a = [K.one, K.from_int(4), K.from_int(-2), K.from_int(7), K.zero, K.from_int(3)]
            s = series_sqrt(K, a, 12)
            sq = series_mul(K, s, s, 12)
            for i in range(12):
                want = a[i] if i < len(a) else K.zero
                assert sq[i] == want

    def test_inverse_roundtrip(self):
        K = QQ
        a = [Fraction(2), Fraction(1), Fraction(-3)]
        inv = series_inv(K, a, 10)
        prod = series_mul(K, a, inv, 10)
        assert prod[0] == 1 and all(c == 0 for c in prod[1:])


class TestSquarefree:
    def test_squarefree_part(self):
        F3 = GF(3)
        f = P(F3, 1, 1) * P(F3, 1, 1) * P(F3, 2, 1)
        sf = squarefree_part(f)
        assert sf == (P(F3, 1, 1) * P(F3, 2, 1)).monic()
        assert is_squarefree(sf) and not is_squarefree(f)

    def test_char_p_power(self):
        # (t+1)^3 over F_3 has zero derivative path
        F3 = GF(3)
        f = P(F3, 1, 1) * P(F3, 1, 1) * P(F3, 1, 1)
        fac = factor(f)
        assert fac == [(P(F3, 1, 1), 3)]
