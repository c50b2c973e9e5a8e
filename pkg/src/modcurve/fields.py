"""Exact coefficient fields: Q, F_p and F_{p^k}.

Field elements are plain Python values (Fraction for Q, int for F_p,
tuple-of-int for F_{p^k}); all arithmetic goes through a field object.
This keeps elements hashable, picklable and cheap, while letting the
polynomial and linear-algebra layers stay generic over the field.

Extension fields are constructed from fixed defining polynomials:
F_9 = F_3[t]/(t^2+1), F_27 = F_3[t]/(t^3+2t+1), and otherwise the
monic irreducible of the requested degree whose coefficient tuple
(c_{k-1}, ..., c_1, c_0) is smallest in lexicographic order.  All
facts verified downstream are basis independent.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = 41
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field Q; elements are fractions.Fraction (always normalized)."""

    char = 0
    order = None
    degree = 1

    def __repr__(self):
        return "QQ"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def pow(self, a, e):
        return a**e

    def to_str(self, a):
        return str(a)


QQ = RationalField()


class PrimeField:
    """F_p for a machine-word prime p; elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.degree = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} not invertible mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def frobenius(self, a):
        return a

    def elements(self):
        return range(self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def is_square(self, a):
        a %= self.p
        if a == 0:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        """A square root of a, found by scanning (fields here are tiny)."""
        a %= self.p
        for y in range(self.p):
            if y * y % self.p == a:
                return y
        raise ValueError(f"{a} is not a square in GF({self.p})")

    def to_str(self, a):
        return str(a % self.p)


def _poly_mod_mul(a, b, mod_tail, p):
    # product of coefficient tuples modulo the monic poly with tail mod_tail
    k = len(mod_tail)
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i] % p
        if c:
            prod[i] = 0
            for j, mj in enumerate(mod_tail):
                prod[i - k + j] -= c * mj
    return tuple(c % p for c in prod[:k]) + (0,) * (k - min(k, len(prod)))


def _tuple_is_irreducible(tail, p):
    # crude irreducibility test for t^k + tail over F_p: t^(p^d) == t mod f
    # must fail for all d < k and hold for d = k.
    k = len(tail)
    t = (0, 1) + (0,) * (k - 2) if k >= 2 else (0,)

    def powp(x):
        # x^p mod f by square and multiply
        r = (1,) + (0,) * (k - 1)
        base = x
        e = p
        while e:
            if e & 1:
                r = _poly_mod_mul(r, base, tail, p)
            base = _poly_mod_mul(base, base, tail, p)
            e >>= 1
        return r

    x = t
    for d in range(1, k):
        x = powp(x)
        if x == t:
            return False
        # gcd(x - t, f) must be 1 for a genuine test; the cheap version above
        # can accept composites, so check gcd too.
        diff = tuple((a - b) % p for a, b in zip(x, t))
        if _tuple_gcd_nontrivial(diff, tail, p):
            return False
    x = powp(x)
    return x == t


def _tuple_gcd_nontrivial(g, mod_tail, p):
    # True iff gcd(g(t), f(t)) nontrivial, f = t^k + mod_tail
    k = len(mod_tail)
    f = list(mod_tail) + [1]
    a = [c % p for c in f]
    b = [c % p for c in g]
    while any(b):
        while b and b[-1] % p == 0:
            b.pop()
        if not b:
            break
        if len(b) == 1:
            return False
        inv = pow(b[-1], -1, p)
        b = [c * inv % p for c in b]
        while len(a) >= len(b):
            if a[-1] % p:
                c = a[-1]
                off = len(a) - len(b)
                for i, bc in enumerate(b):
                    a[off + i] = (a[off + i] - c * bc) % p
            a.pop()
        a, b = b, a
    while a and a[-1] % p == 0:
        a.pop()
    return len(a) > 1


_PINNED_MODULI = {
    (3, 2): (1, 0),        # t^2 + 1
    (3, 3): (1, 2, 0),     # t^3 + 2t + 1
}


def _smallest_irreducible_tail(p, k):
    if (p, k) in _PINNED_MODULI:
        return _PINNED_MODULI[(p, k)]  # already constant-first
    # tails ordered lexicographically on (c_{k-1}, ..., c_0)
    for rev_tail in itertools.product(range(p), repeat=k):
        tail = tuple(reversed(rev_tail))
        if tail[0] == 0:
            continue  # t | f
        if _tuple_is_irreducible(tail, p):
            return tail
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


class ExtField:
    """F_{p^k} = F_p[t]/(m(t)); elements are k-tuples of ints (coefficients
    of 1, t, ..., t^{k-1})."""

    def __init__(self, p: int, k: int, modulus_tail=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2:
            raise ValueError("use PrimeField for k = 1")
        self.p = p
        self.k = k
        self.char = p
        self.degree = k
        self.order = p**k
        if modulus_tail is None:
            modulus_tail = _smallest_irreducible_tail(p, k)
        modulus_tail = tuple(c % p for c in modulus_tail)
        if len(modulus_tail) != k:
            raise ValueError("modulus tail must have length k")
        if not _tuple_is_irreducible(modulus_tail, p):
            raise ValueError("defining polynomial is reducible")
        self.modulus_tail = modulus_tail  # m = t^k + sum tail[i] t^i

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus_tail == self.modulus_tail
        )

    def __hash__(self):
        return hash(("ExtField", self.p, self.k, self.modulus_tail))

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    @property
    def gen(self):
        return (0, 1) + (0,) * (self.k - 2)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def coerce(self, x):
        if isinstance(x, tuple):
            if len(x) != self.k:
                raise TypeError("tuple length mismatch")
            return tuple(c % self.p for c in x)
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} is 0 mod {self.p}")
            return self.from_int(x.numerator * pow(x.denominator, -1, self.p))
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        return _poly_mod_mul(a, b, self.modulus_tail, self.p)

    def is_zero(self, a):
        return not any(c % self.p for c in a)

    def inv(self, a):
        # extended Euclid in F_p[t] against the defining polynomial
        p = self.p
        if self.is_zero(a):
            raise ZeroDivisionError(f"inverse of 0 in {self!r}")
        r0 = list(self.modulus_tail) + [1]
        r1 = [c % p for c in a]
        s0, s1 = [0], [1]
        while True:
            while r1 and r1[-1] % p == 0:
                r1.pop()
            if len(r1) == 1:
                c = pow(r1[0], -1, p)
                res = [x * c % p for x in s1]
                res += [0] * (self.k - len(res))
                return tuple(res[: self.k])
            q, r = _poly_divmod_int(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_int(s0, _poly_mul_int(q, s1, p), p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a):
        return self.pow(a, self.p)

    def frobenius_iter(self, a, i):
        for _ in range(i % self.k):
            a = self.frobenius(a)
        return a

    def elements(self):
        for rev in itertools.product(range(self.p), repeat=self.k):
            yield tuple(reversed(rev))

    def random(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def is_square(self, a):
        if self.is_zero(a):
            return True
        return self.pow(a, (self.order - 1) // 2) == self.one

    def sqrt(self, a):
        """A square root of a (Tonelli–Shanks would be overkill at these sizes:
        search via the multiplicative structure)."""
        a = self.coerce(a)
        if self.is_zero(a):
            return self.zero
        if not self.is_square(a):
            raise ValueError(f"{a} is not a square in {self!r}")
        q = self.order
        if q % 4 == 3:
            return self.pow(a, (q + 1) // 4)
        # general case: factor q-1 = 2^s * m and walk the 2-Sylow
        m, s = q - 1, 0
        while m % 2 == 0:
            m //= 2
            s += 1
        # find a non-square deterministically
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

    def minimal_subfield_degree(self, a):
        """Degree over F_p of the subfield generated by a."""
        x = a
        for d in range(1, self.k + 1):
            x = self.frobenius(x)
            if x == a and self.k % d == 0:
                return d
        return self.k

    def to_str(self, a):
        return "(" + ",".join(str(c) for c in a) + ")"


def _poly_divmod_int(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    while b and b[-1] == 0:
        b.pop()
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv % p
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                a[i + j] = (a[i + j] - c * bc) % p
    r = a[: len(b) - 1]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _poly_mul_int(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_sub_int(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


@functools.lru_cache(maxsize=None)
def GF(p: int, k: int = 1):
    """Field factory with caching; GF(p) is F_p, GF(p, k) is F_{p^k}."""
    if k == 1:
        return PrimeField(p)
    return ExtField(p, k)


@functools.lru_cache(maxsize=None)
def embedding_image(src_key, dst_key):
    """Image of the generator of src under the fixed embedding src -> dst.

    The embedding sends the generator of src to the root of src's defining
    polynomial in dst that is smallest in the element enumeration order;
    it is fixed once per field pair.
    """
    src, dst = field_from_key(src_key), field_from_key(dst_key)
    if src.char != dst.char:
        raise ValueError("different characteristics")
    if dst.degree % src.degree != 0:
        raise ValueError(f"no embedding {src!r} -> {dst!r}: degree {src.degree} does not divide {dst.degree}")
    if src.degree == 1:
        return dst.one
    # roots of src's defining polynomial in dst, smallest first
    tail = src.modulus_tail
    for cand in dst.elements():
        acc = dst.zero
        power = dst.one
        for c in tail:
            if c:
                acc = dst.add(acc, dst.mul(dst.from_int(c), power))
            power = dst.mul(power, cand)
        acc = dst.add(acc, power)  # + cand^k
        if dst.is_zero(acc):
            return cand
    raise RuntimeError("no root found; fields inconsistent")  # pragma: no cover


def embed(src, dst, a):
    """Embed element a of src into dst along the fixed embedding."""
    if src == dst:
        return a
    if isinstance(src, PrimeField):
        if isinstance(dst, PrimeField):
            if src.p != dst.p:
                raise ValueError("different characteristics")
            return a
        return dst.from_int(a)
    if isinstance(dst, PrimeField):
        raise ValueError(f"no embedding {src!r} -> {dst!r}: degree {src.degree} does not divide 1")
    img = embedding_image(field_key(src), field_key(dst))
    acc = dst.zero
    power = dst.one
    for c in a:
        if c:
            acc = dst.add(acc, dst.mul(dst.from_int(c), power))
        power = dst.mul(power, img)
    return acc


def field_key(K):
    """Picklable key identifying a finite field."""
    if isinstance(K, PrimeField):
        return (K.p, 1, None)
    return (K.p, K.k, K.modulus_tail)


def field_from_key(key):
    p, k, tail = key
    if k == 1:
        return GF(p)
    return ExtField(p, k, tail)
