"""Exact linear algebra: fraction-free (Bareiss) elimination over Q and
plain Gaussian elimination over finite fields.

Kernels are what the Riemann-Roch engines consume; all routines return
deterministic bases (pivots chosen left to right, first nonzero pivot row,
reduced echelon back-substitution).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _row_to_int(row):
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    ints = [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def bareiss_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon_rows, pivot_cols); input rows may contain Fractions,
    they are cleared to primitive integer rows first.  The echelon rows
    are integers (Bareiss keeps intermediate entries as exact minors).
    """
    m = [_row_to_int(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivot_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            if all(x == 0 for x in m[i]):
                continue
            for j in range(ncols):
                if j == c:
                    continue
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivot_cols


def kernel_basis_rational(rows, ncols):
    """Basis of {x : A x = 0} over Q for integer/Fraction rows.

    Returns primitive integer vectors (content 1, first nonzero entry
    positive), one per free column, in ascending free-column order.
    """
    if not rows:
        ident = []
        for j in range(ncols):
            v = [0] * ncols
            v[j] = 1
            ident.append(v)
        return ident
    ech, pivot_cols = bareiss_echelon(rows)
    pivset = set(pivot_cols)
    free_cols = [j for j in range(ncols) if j not in pivset]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        # back substitution over the echelon rows
        for i in range(len(pivot_cols) - 1, -1, -1):
            pc = pivot_cols[i]
            s = Fraction(0)
            row = ech[i]
            for j in range(pc + 1, ncols):
                if row[j] and x[j]:
                    s += Fraction(row[j]) * x[j]
            x[pc] = -s / row[pc]
        den = 1
        for v in x:
            den = lcm(den, v.denominator)
        ints = [int(v * den) for v in x]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        lead = next((v for v in ints if v != 0), 1)
        if lead < 0:
            ints = [-v for v in ints]
        basis.append(ints)
    return basis


def rank_rational(rows):
    if not rows:
        return 0
    _, pivots = bareiss_echelon(rows)
    return len(pivots)


# ----------------------------------------------------------------------
# Finite fields
# ----------------------------------------------------------------------

def echelon_field(K, rows):
    """Reduced row echelon form over a field object; returns (rows, pivots)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not K.is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = K.inv(m[r][c])
        m[r] = [K.mul(x, inv) for x in m[r]]
        for i in range(nrows):
            if i != r and not K.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def kernel_basis_field(K, rows, ncols):
    """Basis of the right kernel over a finite field, deterministic order."""
    if not rows:
        out = []
        for j in range(ncols):
            v = [K.zero] * ncols
            v[j] = K.one
            out.append(v)
        return out
    ech, pivots = echelon_field(K, rows)
    pivset = set(pivots)
    free_cols = [j for j in range(ncols) if j not in pivset]
    basis = []
    for fc in free_cols:
        x = [K.zero] * ncols
        x[fc] = K.one
        for i, pc in enumerate(pivots):
            # reduced echelon: x[pc] = -row[fc]
            x[pc] = K.neg(ech[i][fc])
        basis.append(x)
    return basis


def rank_field(K, rows):
    if not rows:
        return 0
    _, pivots = echelon_field(K, rows)
    return len(pivots)


def solve_field(K, rows, rhs):
    """One solution of A x = b over a field, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, pivots = echelon_field(K, aug)
    for row in ech:
        if all(K.is_zero(x) for x in row[:-1]) and not K.is_zero(row[-1]):
            return None
    x = [K.zero] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = ech[i][-1]
    return x
