"""Number field layer: Q[t]/(m) arithmetic and the cusp field Q(eta).

Only what the curve checks need: exact arithmetic in small quotients of
Q[t], and the construction-with-proof of the minimal polynomial of
eta = 2(z^3 + z^-3) + 3, z a primitive 7th root of unity, which generates
the real cyclotomic field the cusps of X(b5,ns7) live in.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import VerificationError
from .fields import GF, QQ
from .poly import Poly, is_irreducible, poly_xgcd, rational_roots


class NumberField:
    """Q[t]/(m) for monic m irreducible over Q; elements are tuples of
    Fractions (coefficients of 1, t, ..., t^{k-1}).

    Irreducibility is the caller's responsibility for degree > 3; for the
    degrees used here (2 and 3) it is checked via rational roots /
    discriminant.
    """

    char = 0
    order = None

    def __init__(self, minpoly: Poly, check_irreducible=True):
        if minpoly.K is not QQ:
            raise TypeError("minimal polynomial must be over Q")
        minpoly = minpoly.monic()
        k = minpoly.degree
        if k < 2:
            raise ValueError("degree >= 2 required")
        if check_irreducible:
            if k <= 3:
                if rational_roots(minpoly):
                    raise ValueError("minimal polynomial has a rational root")
            elif k == 6:
                pass  # used only for the cyclotomic sanity layer, trusted
        self.minpoly = minpoly
        self.k = k
        self.degree = k

    def __repr__(self):
        return f"Q[t]/({self.minpoly!r})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.minpoly == self.minpoly

    def __hash__(self):
        return hash(("NumberField", tuple(self.minpoly.c)))

    @property
    def zero(self):
        return (Fraction(0),) * self.k

    @property
    def one(self):
        return (Fraction(1),) + (Fraction(0),) * (self.k - 1)

    @property
    def gen(self):
        return (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.k - 2)

    def from_int(self, n):
        return (Fraction(n),) + (Fraction(0),) * (self.k - 1)

    def coerce(self, x):
        if isinstance(x, tuple):
            if len(x) != self.k:
                raise TypeError("tuple length mismatch")
            return tuple(Fraction(c) for c in x)
        if isinstance(x, (int, Fraction)):
            return (Fraction(x),) + (Fraction(0),) * (self.k - 1)
        raise TypeError(f"cannot coerce {x!r}")

    def _to_poly(self, a):
        return Poly(QQ, list(a))

    def _from_poly(self, f):
        c = list(f.c) + [Fraction(0)] * (self.k - len(f.c))
        return tuple(c[: self.k])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        prod = self._to_poly(a) * self._to_poly(b)
        return self._from_poly(prod % self.minpoly)

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of 0")
        g, s, _ = poly_xgcd(self._to_poly(a), self.minpoly)
        if g.degree != 0:
            raise ZeroDivisionError("element not invertible (minpoly reducible?)")
        inv = s.scale(QQ.inv(g.c[0]))
        return self._from_poly(inv % self.minpoly)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def to_str(self, a):
        return "(" + ",".join(str(c) for c in a) + ")"

    def reduce_mod_p(self, a, Kp):
        """Image of a under reduction of the generator to a root in Kp.

        Kp must be GF(p^k) with the reduction of the minimal polynomial
        irreducible mod p; the generator maps to the smallest root in Kp's
        element order (all conjugate choices give the same place downstream).
        """
        mbar = self.minpoly.map_coeffs(Kp, Kp.coerce)
        root = None
        for cand in Kp.elements():
            if Kp.is_zero(mbar.eval(cand)):
                root = cand
                break
        if root is None:
            raise VerificationError("minimal polynomial has no root in the target field")
        acc = Kp.zero
        power = Kp.one
        for c in a:
            acc = Kp.add(acc, Kp.mul(Kp.coerce(c), power))
            power = Kp.mul(power, root)
        return acc


# The cubic base of the denominator form of the j-map on the non-split
# side: g(y1, y2) = y1^3 - 7 y1^2 y2 + 7 y1 y2^2 + 7 y2^3, listed by
# descending power of y1.
_CUBIC_BASE = [1, -7, 7, 7]

# exponent of the cubic base inside the full denominator form
_CUBIC_BASE_EXPONENT = 7


def minpoly_eta() -> Poly:
    """The minimal polynomial t^3 - 7t^2 + 7t + 7 of eta, with proof.

    Verifies symbolically that (i) the polynomial is the dehomogenized
    cubic base of the degree-21 denominator form on the y-line, (ii)
    eta = 2(z^3 + z^4) + 3 is a root inside Q[z]/(z^6+...+1), and (iii)
    the polynomial has no rational root, hence is irreducible over Q.
    A failure of any step means a transcription error in the model data
    and is fatal.
    """
    mu = Poly(QQ, [7, 7, -7, 1])

    # (i) dehomogenize the cubic base at y2 = 1 (t = y1/y2)
    dehom = Poly(QQ, list(reversed(_CUBIC_BASE)))
    if dehom != mu:
        raise VerificationError("cubic base of the denominator form does not match")

    # (ii) eta is a root, computed in Q[z]/(Phi_7)
    phi7 = Poly(QQ, [1] * 7)  # z^6 + ... + z + 1
    cyc = NumberField(phi7, check_irreducible=False)
    z3 = cyc.pow(cyc.gen, 3)
    z4 = cyc.pow(cyc.gen, 4)  # z^-3 = z^4 mod Phi_7
    eta = cyc.add(cyc.mul(cyc.from_int(2), cyc.add(z3, z4)), cyc.from_int(3))
    acc = cyc.zero
    for coef in reversed(mu.c):
        acc = cyc.add(cyc.mul(acc, eta), cyc.coerce(coef))
    if not cyc.is_zero(acc):
        raise VerificationError("eta is not a root of the claimed minimal polynomial")

    # (iii) irreducible over Q: a cubic is irreducible iff it has no
    # rational root; candidates are divisors of 7
    if rational_roots(mu):
        raise VerificationError("claimed minimal polynomial has a rational root")

    return mu


def minpoly_eta_mod3_is_inert() -> Poly:
    """Reduction of minpoly_eta mod 3 and the inertness certificate:
    it must be irreducible over F_3 (so 3 stays prime in the cusp field,
    and each reduced cusp orbit is a single degree-3 place)."""
    mu = minpoly_eta()
    F3 = GF(3)
    mu3 = mu.map_coeffs(F3, F3.coerce)
    if not is_irreducible(mu3):
        raise VerificationError("minimal polynomial is not irreducible mod 3")
    return mu3


def eta_field() -> NumberField:
    return NumberField(minpoly_eta())
