"""Exact kernels: Bareiss over Q and plain elimination over finite fields."""

import random
from fractions import Fraction

from hypothesis import given, strategies as st

from modcurve.fields import GF
from modcurve.linalg import (
    bareiss_echelon,
    echelon_field,
    kernel_basis_field,
    kernel_basis_rational,
    rank_field,
    rank_rational,
    solve_field,
)


def test_kernel_rational_simple():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = kernel_basis_rational(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(a * b for a, b in zip(rows[0], v)) == 0


def test_kernel_rational_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3), Fraction(2)]]
    basis = kernel_basis_rational(rows, 2)
    assert len(basis) == 1
    v = basis[0]
    assert Fraction(1, 2) * v[0] + Fraction(1, 3) * v[1] == 0


def test_kernel_rational_full_rank():
    rows = [[1, 0], [0, 1]]
    assert kernel_basis_rational(rows, 2) == []
    assert rank_rational(rows) == 2


@given(st.integers(min_value=0, max_value=10**6))
def test_kernel_rational_random_consistency(seed):
    rng = random.Random(seed)
    nrows, ncols = rng.randrange(1, 6), rng.randrange(1, 6)
    rows = [[rng.randrange(-9, 10) for _ in range(ncols)] for _ in range(nrows)]
    basis = kernel_basis_rational(rows, ncols)
    assert len(basis) == ncols - rank_rational(rows)
    for v in basis:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
        from math import gcd

        g = 0
        for x in v:
            g = gcd(g, x)
        assert g == 1  # primitive


def test_bareiss_integrality():
    rng = random.Random(5)
    rows = [[rng.randrange(-50, 50) for _ in range(6)] for _ in range(5)]
    ech, pivots = bareiss_echelon(rows)
    for row in ech:
        for x in row:
            assert isinstance(x, int)


def test_field_kernel_and_rank():
    F3 = GF(3)
    rows = [[1, 2, 0], [2, 1, 0]]
    basis = kernel_basis_field(F3, rows, 3)
    assert len(basis) == 3 - rank_field(F3, rows)
    for v in basis:
        for row in rows:
            acc = F3.zero
            for a, b in zip(row, v):
                acc = F3.add(acc, F3.mul(a, b))
            assert F3.is_zero(acc)


def test_field_kernel_extension():
    F9 = GF(3, 2)
    g = F9.gen
    rows = [[F9.one, g], [g, F9.mul(g, g)]]
    basis = kernel_basis_field(F9, rows, 2)
    assert len(basis) == 1
    v = basis[0]
    acc = F9.add(F9.mul(rows[0][0], v[0]), F9.mul(rows[0][1], v[1]))
    assert F9.is_zero(acc)


def test_solve_field():
    F5 = GF(5)
    rows = [[1, 2], [3, 4]]
    rhs = [1, 2]
    x = solve_field(F5, rows, rhs)
    for row, b in zip(rows, rhs):
        acc = F5.zero
        for a, xi in zip(row, x):
            acc = F5.add(acc, F5.mul(a, xi))
        assert acc == b
    # inconsistent system
    assert solve_field(F5, [[1, 2], [2, 4]], [1, 3]) is None


def test_echelon_field_reduced():
    F7 = GF(7)
    rows = [[2, 1, 3], [4, 2, 6], [1, 0, 1]]
    ech, pivots = echelon_field(F7, rows)
    for i, pc in enumerate(pivots):
        assert ech[i][pc] == F7.one
        for j in range(len(ech)):
            if j != i:
                assert F7.is_zero(ech[j][pc])
