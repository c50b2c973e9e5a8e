"""Univariate polynomial algebra over the exact fields.

A Poly is a coefficient list (ascending powers, no trailing zeros) bound
to a field object from modcurve.fields.  Includes Euclidean arithmetic,
gcd/xgcd, resultants, finite-field factorization (squarefree + distinct
degree + equal degree), root counting via Frobenius powers computed by
modular composition, Sturm chains over Q, and the limited factorization
over Q that the divisor pipelines need (degree <= 3 splitting).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .fields import QQ, PrimeField, ExtField


class Poly:
    __slots__ = ("K", "c")

    def __init__(self, K, coeffs, normalize=True):
        self.K = K
        if normalize:
            coeffs = [K.coerce(x) for x in coeffs]
            while coeffs and K.is_zero(coeffs[-1]):
                coeffs.pop()
        self.c = coeffs

    @classmethod
    def zero(cls, K):
        return cls(K, [], normalize=False)

    @classmethod
    def one(cls, K):
        return cls(K, [K.one], normalize=False)

    @classmethod
    def x(cls, K):
        return cls(K, [K.zero, K.one], normalize=False)

    @classmethod
    def const(cls, K, a):
        a = K.coerce(a)
        return cls(K, [] if K.is_zero(a) else [a], normalize=False)

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def is_one(self):
        return len(self.c) == 1 and self.c[0] == self.K.one

    def lc(self):
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.c):
            return self.c[i]
        return self.K.zero

    def __eq__(self, other):
        return isinstance(other, Poly) and self.K == other.K and self.c == other.c

    def __hash__(self):
        return hash((tuple(self.c),))

    def __repr__(self):
        if not self.c:
            return "Poly(0)"
        terms = []
        for i, a in enumerate(self.c):
            if not self.K.is_zero(a):
                terms.append(f"{self.K.to_str(a)}*t^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    def __add__(self, other):
        K = self.K
        n = max(len(self.c), len(other.c))
        out = [K.add(self[i], other[i]) for i in range(n)]
        return Poly(K, out)

    def __sub__(self, other):
        K = self.K
        n = max(len(self.c), len(other.c))
        out = [K.sub(self[i], other[i]) for i in range(n)]
        return Poly(K, out)

    def __neg__(self):
        K = self.K
        return Poly(K, [K.neg(a) for a in self.c], normalize=False)

    def __mul__(self, other):
        K = self.K
        if isinstance(other, Poly):
            if not self.c or not other.c:
                return Poly.zero(K)
            out = [K.zero] * (len(self.c) + len(other.c) - 1)
            for i, a in enumerate(self.c):
                if K.is_zero(a):
                    continue
                for j, b in enumerate(other.c):
                    out[i + j] = K.add(out[i + j], K.mul(a, b))
            return Poly(K, out)
        a = K.coerce(other)
        return Poly(K, [K.mul(x, a) for x in self.c])

    __rmul__ = __mul__

    def scale(self, a):
        K = self.K
        a = K.coerce(a)
        return Poly(K, [K.mul(x, a) for x in self.c])

    def shift(self, n):
        """Multiply by t^n."""
        if not self.c:
            return self
        return Poly(self.K, [self.K.zero] * n + list(self.c), normalize=False)

    def divmod(self, other):
        K = self.K
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.c)
        b = other.c
        db = len(b) - 1
        inv = K.inv(b[-1])
        q = [K.zero] * max(0, len(a) - db)
        for i in range(len(a) - db - 1, -1, -1):
            coef = K.mul(a[i + db], inv)
            if not K.is_zero(coef):
                q[i] = coef
                for j in range(db + 1):
                    a[i + j] = K.sub(a[i + j], K.mul(coef, b[j]))
        return Poly(K, q), Poly(K, a[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if not self.c:
            return self
        K = self.K
        inv = K.inv(self.c[-1])
        return Poly(K, [K.mul(a, inv) for a in self.c], normalize=False)

    def derivative(self):
        K = self.K
        out = [K.mul(K.from_int(i), self.c[i]) for i in range(1, len(self.c))]
        return Poly(K, out)

    def eval(self, a):
        K = self.K
        acc = K.zero
        for coef in reversed(self.c):
            acc = K.add(K.mul(acc, a), coef)
        return acc

    def compose(self, other):
        """self(other)."""
        K = self.K
        acc = Poly.zero(K)
        for coef in reversed(self.c):
            acc = acc * other + Poly.const(K, coef)
        return acc

    def compose_mod(self, other, mod):
        """self(other) mod mod, by Horner."""
        K = self.K
        acc = Poly.zero(K)
        for coef in reversed(self.c):
            acc = (acc * other + Poly.const(K, coef)) % mod
        return acc

    def powmod(self, e, mod):
        K = self.K
        r = Poly.one(K) % mod
        b = self % mod
        while e:
            if e & 1:
                r = (r * b) % mod
            b = (b * b) % mod
            e >>= 1
        return r

    def map_coeffs(self, L, f):
        """New polynomial over field L with coefficients f(c)."""
        return Poly(L, [f(a) for a in self.c])

    def reverse(self, n=None):
        """Coefficient reversal t^n * self(1/t); n defaults to degree."""
        if n is None:
            n = self.degree
        out = [self[n - i] for i in range(n + 1)]
        return Poly(self.K, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    if a.K != b.K:
        raise ValueError("polynomials over different fields")
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """(g, s, t) with g = s*a + t*b, g monic (or zero)."""
    K = a.K
    r0, r1 = a, b
    s0, s1 = Poly.one(K), Poly.zero(K)
    t0, t1 = Poly.zero(K), Poly.one(K)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = K.inv(r0.lc())
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_part(f: Poly) -> Poly:
    g = poly_gcd(f, f.derivative())
    if g.degree <= 0:
        return f.monic()
    return (f // g).monic()


def is_squarefree(f: Poly) -> bool:
    return poly_gcd(f, f.derivative()).degree <= 0


# ----------------------------------------------------------------------
# Frobenius powers and root counting over finite fields
# ----------------------------------------------------------------------

def frobenius_power(f: Poly, n: int = 1) -> Poly:
    """t^(q^n) mod f over F_q, via one q-power plus modular composition.

    phi(t) = t^q mod f is computed by square and multiply; t^(q^n) is then
    assembled by composing phi with itself along the binary expansion of n
    (x -> x^q fixes F_q, so phi_{a+b} = phi_a o phi_b mod f).  This keeps
    the exponent work logarithmic in n instead of n*log q.
    """
    K = f.K
    q = K.order
    phi = Poly.x(K).powmod(q, f)
    acc = Poly.x(K) % f
    base = phi
    e = n
    while e:
        if e & 1:
            acc = acc.compose_mod(base, f)
        e >>= 1
        if e:
            base = base.compose_mod(base, f)
    return acc


def count_roots_in_field(f: Poly, n: int = 1) -> int:
    """Number of distinct roots of f in F_{q^n}, f over F_q."""
    if f.is_zero():
        raise ValueError("zero polynomial rejected")
    if f.degree == 0:
        return 0
    fq = frobenius_power(f, n)
    g = poly_gcd(fq - Poly.x(f.K), f)
    return g.degree


def roots_in_field(f: Poly):
    """Distinct roots of f in its coefficient field (finite fields)."""
    if f.is_zero():
        raise ValueError("zero polynomial rejected")
    K = f.K
    linear = poly_gcd(frobenius_power(f, 1) - Poly.x(K), f)
    out = []
    for g, _ in factor(linear):
        if g.degree == 1:
            out.append(K.neg(g.c[0]))
    return out


# ----------------------------------------------------------------------
# Factorization over finite fields
# ----------------------------------------------------------------------

def _squarefree_decomposition(f: Poly):
    """Yields (g_i, i) with f = lc * prod g_i^i, g_i squarefree, char p aware."""
    K = f.K
    p = K.char
    f = f.monic()
    out = []
    e_mult = 1

    def pth_root(g):
        # g = h(t^p) with coefficients in F_q; h has coeffs c^(q/p)
        q = K.order
        coeffs = [K.pow(g.c[i], q // p) for i in range(0, len(g.c), p)]
        return Poly(K, coeffs)

    while f.degree > 0:
        d = f.derivative()
        if d.is_zero():
            f = pth_root(f)
            e_mult *= p
            continue
        g = poly_gcd(f, d)
        w = f // g
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, g)
            z = w // y
            if z.degree > 0:
                out.append((z.monic(), i * e_mult))
            w = y
            g = g // y
            i += 1
        f = g
    return out


def _ddf(f: Poly):
    """Distinct-degree: yields (product of irreducibles of degree d, d)."""
    K = f.K
    out = []
    x = Poly.x(K)
    h = x % f
    fstar = f
    d = 0
    while fstar.degree > 2 * (d + 1) - 1 and fstar.degree > 0:
        d += 1
        h = frobenius_power_step(h, fstar, K)
        g = poly_gcd(h - x, fstar)
        if g.degree > 0:
            out.append((g, d))
            fstar = fstar // g
            h = h % fstar
    if fstar.degree > 0:
        out.append((fstar, fstar.degree))
    return out


def frobenius_power_step(h: Poly, f: Poly, K) -> Poly:
    """h^q mod f (one q-power Frobenius step on an element of F_q[t]/f)."""
    return h.powmod(K.order, f)


def _edf(f: Poly, d: int, rng) -> list:
    """Equal-degree splitting (Cantor–Zassenhaus, odd characteristic)."""
    K = f.K
    n = f.degree
    if n == d:
        return [f.monic()]
    q = K.order
    exp = (q**d - 1) // 2
    while True:
        rc = [K.random(rng) for _ in range(n)]
        r = Poly(K, rc)
        if r.degree < 1:
            continue
        g = poly_gcd(r, f)
        if 0 < g.degree < n:
            break
        h = r.powmod(exp, f) - Poly.one(K)
        g = poly_gcd(h, f)
        if 0 < g.degree < n:
            break
    return _edf(g, d, rng) + _edf(f // g, d, rng)


def factor(f: Poly):
    """Complete factorization over a finite field: [(monic irreducible, e)].

    Deterministic across runs: the equal-degree splitting uses an RNG
    seeded from the input coefficients.
    """
    K = f.K
    if not isinstance(K, (PrimeField, ExtField)):
        raise TypeError("finite-field factorization only")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    seed = hash((K.char, K.degree) + tuple(hash(c) for c in f.c)) & 0xFFFFFFFF
    rng = random.Random(seed)
    out = []
    for g, e in _squarefree_decomposition(f):
        for part, d in _ddf(g):
            if part.degree == d:
                out.append((part.monic(), e))
            else:
                for irr in _edf(part, d, rng):
                    out.append((irr, e))
    out.sort(key=lambda pair: (pair[0].degree, [_coeff_sort_key(c) for c in pair[0].c]))
    return out


def _coeff_sort_key(c):
    if isinstance(c, tuple):
        return tuple(c)
    return (c,)


def is_irreducible(f: Poly) -> bool:
    if f.degree <= 0:
        return False
    if f.degree == 1:
        return True
    fac = factor(f)
    return len(fac) == 1 and fac[0][1] == 1 and fac[0][0].degree == f.degree


# ----------------------------------------------------------------------
# Sturm chains over Q
# ----------------------------------------------------------------------

def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sturm_chain(f: Poly):
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sign_at_minus_inf(g: Poly) -> int:
    if g.is_zero():
        return 0
    s = _sign(g.lc())
    return s if g.degree % 2 == 0 else -s


def sturm_real_roots(f: Poly, a=None, b=None) -> int:
    """Exact count of distinct real roots of squarefree f over Q in (a, b].

    a = None means -infinity, b = None means +infinity.
    """
    if f.is_zero():
        raise ValueError("zero polynomial rejected")
    if not is_squarefree(f):
        raise ValueError("input must be squarefree")
    if f.degree == 0:
        return 0
    chain = _sturm_chain(f)
    if a is None:
        va = _variations([_sign_at_minus_inf(g) for g in chain])
    else:
        va = _variations([_sign(g.eval(Fraction(a))) for g in chain])
    if b is None:
        vb = _variations([_sign(g.lc()) if not g.is_zero() else 0 for g in chain])
    else:
        vb = _variations([_sign(g.eval(Fraction(b))) for g in chain])
    return va - vb


def cauchy_root_bound(f: Poly) -> Fraction:
    """Rational M with all real roots of f in (-M, M)."""
    lc = abs(Fraction(f.lc()))
    m = max((abs(Fraction(c)) for c in f.c[:-1]), default=Fraction(0))
    return 1 + m / lc


# ----------------------------------------------------------------------
# Resultants and discriminants
# ----------------------------------------------------------------------

def resultant(f: Poly, g: Poly):
    """Res(f, g) over any field, by the Euclidean recurrence."""
    K = f.K
    if f.is_zero() or g.is_zero():
        return K.zero
    res = K.one
    a, b = f, g
    while True:
        if b.degree == 0:
            res = K.mul(res, K.pow(b.c[0], a.degree))
            return res
        r = a % b
        if r.is_zero():
            return K.zero
        # Res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * Res(b, r)
        da, db, dr = a.degree, b.degree, r.degree
        res = K.mul(res, K.pow(b.lc(), da - dr))
        if (da * db) % 2 == 1:
            res = K.neg(res)
        a, b = b, r


def discriminant(f: Poly):
    K = f.K
    n = f.degree
    if n < 1:
        raise ValueError("degree >= 1 required")
    r = resultant(f, f.derivative())
    r = K.div(r, f.lc())
    if (n * (n - 1) // 2) % 2 == 1:
        r = K.neg(r)
    return r


# ----------------------------------------------------------------------
# Limited factorization over Q (pipeline envelope: full split of deg <= 3
# after pulling out rational roots)
# ----------------------------------------------------------------------

def rational_roots(f: Poly):
    """All rational roots (with multiplicity stripped), via the classical
    divisor test on the primitive integer model."""
    if f.K is not QQ:
        raise TypeError("rational root extraction is over Q")
    if f.is_zero():
        raise ValueError("zero polynomial rejected")
    # clear denominators
    from math import gcd, lcm

    den = lcm(*[Fraction(c).denominator for c in f.c]) if f.c else 1
    ints = [int(Fraction(c) * den) for c in f.c]
    # strip t^k factor
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    roots = set()
    if k > 0:
        roots.add(Fraction(0))
    ints = ints[k:]
    if len(ints) <= 1:
        return sorted(roots)
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return out

    for p in divisors(a0):
        for q in divisors(an):
            if gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if f.eval(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def factor_rational_limited(f: Poly):
    """Factor f over Q into irreducibles when the non-linear part has
    degree <= 3 after removing rational roots; returns [(irreducible, e)].

    Raises NotImplementedError outside that envelope — the pipelines never
    need more (divisor degrees are bounded by 3), and anything bigger
    signals a logic error upstream.
    """
    if f.is_zero():
        raise ValueError("zero polynomial rejected")
    out = []
    rem = f.monic()
    for r in rational_roots(f):
        lin = Poly(QQ, [-r, 1])
        e = 0
        while True:
            q, rr = rem.divmod(lin)
            if not rr.is_zero():
                break
            rem = q
            e += 1
        if e:
            out.append((lin, e))
    if rem.degree == 0:
        return out
    if rem.degree in (2, 3):
        # no rational roots left => irreducible (degree 2 and 3 over Q)
        out.append((rem, 1))
        return out
    if rem.degree == 4:
        # try splitting as two quadratics is out of scope; only accept
        # a perfect square of an irreducible quadratic
        sq = _perfect_square_root(rem)
        if sq is not None:
            out.append((sq, 2))
            return out
    raise NotImplementedError(
        f"factorization over Q of residual degree {rem.degree} is outside the pipeline envelope"
    )


def _perfect_square_root(f: Poly):
    g = poly_gcd(f, f.derivative())
    if 2 * g.degree == f.degree and (g * g).monic() == f.monic():
        return g.monic()
    return None


# ----------------------------------------------------------------------
# Generic quotient fields K[x]/(m)
# ----------------------------------------------------------------------

class QuotientField:
    """K[x]/(m) for m irreducible over a field K; elements are tuples of
    K-elements of length deg m.  Used for residue fields of affine places
    (K finite or Q); the finite-field protocol (order, is_square, sqrt)
    is available when K is finite."""

    def __init__(self, m: Poly):
        K = m.K
        self.base = K
        self.m = m.monic()
        self.k = m.degree
        self.char = K.char
        self.degree = getattr(K, "degree", 1) * self.k
        self.order = None if K.order is None else K.order**self.k

    def __repr__(self):
        return f"{self.base!r}[x]/(deg {self.k})"

    def __eq__(self, other):
        return isinstance(other, QuotientField) and other.m == self.m

    def __hash__(self):
        return hash(("QuotientField", tuple(self.m.c)))

    @property
    def zero(self):
        return (self.base.zero,) * self.k

    @property
    def one(self):
        return (self.base.one,) + (self.base.zero,) * (self.k - 1)

    @property
    def gen(self):
        if self.k == 1:
            return (self.base.neg(self.m.c[0]),)
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.k - 2)

    def from_int(self, n):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.k - 1)

    def from_poly(self, f: Poly):
        r = f % self.m
        c = list(r.c) + [self.base.zero] * (self.k - len(r.c))
        return tuple(c[: self.k])

    def to_poly(self, a):
        return Poly(self.base, list(a))

    def coerce(self, x):
        if isinstance(x, tuple) and len(x) == self.k:
            return tuple(self.base.coerce(c) for c in x)
        if isinstance(x, Poly):
            return self.from_poly(x)
        return self.from_int(x) if isinstance(x, int) else self.from_poly(Poly(self.base, [x]))

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        return self.from_poly(self.to_poly(a) * self.to_poly(b))

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of 0")
        g, s, _ = poly_xgcd(self.to_poly(a), self.m)
        if g.degree != 0:
            raise ZeroDivisionError("element not invertible; modulus reducible")
        return self.from_poly(s.scale(self.base.inv(g.c[0])))

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

    def elements(self):
        import itertools

        for rev in itertools.product(list(self.base.elements()), repeat=self.k):
            yield tuple(reversed(rev))

    def random(self, rng):
        return tuple(self.base.random(rng) for _ in range(self.k))

    def is_square(self, a):
        if self.order is None:
            raise TypeError("squareness test needs a finite field")
        if self.is_zero(a):
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def sqrt(self, a):
        a = self.coerce(a)
        if self.is_zero(a):
            return self.zero
        if not self.is_square(a):
            raise ValueError("not a square")
        q = self.order
        if q % 4 == 3:
            return self.pow(a, (q + 1) // 4)
        m, s = q - 1, 0
        while m % 2 == 0:
            m //= 2
            s += 1
        z = None
        for cand in self.elements():
            if not self.is_zero(cand) and not self.is_square(cand):
                z = cand
                break
        c = self.pow(z, m)
        x = self.pow(a, (m + 1) // 2)
        t = self.pow(a, m)
        mexp = s
        while t != self.one:
            i, tt = 0, t
            while tt != self.one:
                tt = self.mul(tt, tt)
                i += 1
            b = self.pow(c, 1 << (mexp - i - 1))
            x = self.mul(x, b)
            t = self.mul(t, self.mul(b, b))
            c = self.mul(b, b)
            mexp = i
        return x

    def to_str(self, a):
        return "(" + ",".join(self.base.to_str(c) for c in a) + ")"


# ----------------------------------------------------------------------
# Truncated power series helpers (coefficient lists over a field)
# ----------------------------------------------------------------------

def series_mul(K, a, b, n):
    out = [K.zero] * n
    for i, x in enumerate(a[:n]):
        if K.is_zero(x):
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return out


def series_inv(K, a, n):
    if K.is_zero(a[0]):
        raise ZeroDivisionError("series has zero constant term")
    inv0 = K.inv(a[0])
    out = [K.zero] * n
    out[0] = inv0
    for i in range(1, n):
        acc = K.zero
        for j in range(1, min(i, len(a) - 1) + 1):
            acc = K.add(acc, K.mul(a[j], out[i - j]))
        out[i] = K.neg(K.mul(acc, inv0))
    return out


def series_sqrt(K, a, n):
    """Square root of a series with a[0] = 1 (char != 2)."""
    if a[0] != K.one:
        raise ValueError("series sqrt requires constant term 1")
    out = [K.zero] * n
    out[0] = K.one
    half = K.inv(K.from_int(2))
    for i in range(1, n):
        # coefficient of t^i in out^2 must equal a[i]
        acc = K.zero
        for j in range(1, i):
            acc = K.add(acc, K.mul(out[j], out[i - j]))
        target = a[i] if i < len(a) else K.zero
        out[i] = K.mul(K.sub(target, acc), half)
    return out
