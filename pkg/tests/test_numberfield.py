"""Q[t]/(m) arithmetic and the cusp-field minimal polynomial."""

import math

import pytest
from fractions import Fraction

from modcurve.errors import VerificationError
from modcurve.fields import GF
from modcurve.numberfield import NumberField, eta_field, minpoly_eta, minpoly_eta_mod3_is_inert
from modcurve.poly import Poly, is_irreducible
from modcurve.fields import QQ


def test_minpoly_eta_value():
    mu = minpoly_eta()
    assert list(mu.c) == [Fraction(7), Fraction(7), Fraction(-7), Fraction(1)]


def test_minpoly_eta_mod3():
    mu3 = minpoly_eta_mod3_is_inert()
    F3 = GF(3)
    assert mu3 == Poly(F3, [1, 1, 2, 1])
    assert is_irreducible(mu3)


def test_eta_float_sanity():
    # non-verdict numeric cross-check: eta = 4*cos(6*pi/7) + 3
    mu = minpoly_eta()
    eta = 4 * math.cos(6 * math.pi / 7) + 3
    val = sum(float(c) * eta**i for i, c in enumerate(mu.c))
    assert abs(val) < 1e-12


def test_number_field_arithmetic():
    K = eta_field()
    t = K.gen
    # t^3 = 7t^2 - 7t - 7
    t3 = K.pow(t, 3)
    expected = K.sub(
        K.mul(K.from_int(7), K.mul(t, t)), K.add(K.mul(K.from_int(7), t), K.from_int(7))
    )
    assert t3 == expected
    a = K.add(K.mul(t, t), K.from_int(1))
    assert K.mul(a, K.inv(a)) == K.one


def test_number_field_rejects_rational_root():
    with pytest.raises(ValueError):
        NumberField(Poly(QQ, [-1, 0, 1]))  # t^2 - 1


def test_reduce_mod_p():
    K = eta_field()
    F27 = GF(3, 3)
    t_img = K.reduce_mod_p(K.gen, F27)
    # image is a root of mu mod 3
    mu3 = Poly(F27, [F27.from_int(c.numerator % 3) for c in minpoly_eta().c])
    assert F27.is_zero(mu3.eval(t_img))
    # reduction is a ring hom on a sample
    a = K.add(K.mul(K.gen, K.gen), K.from_int(2))
    b = K.sub(K.gen, K.from_int(5))
    ra, rb = K.reduce_mod_p(a, F27), K.reduce_mod_p(b, F27)
    assert K.reduce_mod_p(K.mul(a, b), F27) == F27.mul(ra, rb)
