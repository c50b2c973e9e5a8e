"""Divisors: finite formal integer combinations of places.

Place objects only need a .degree attribute, hashability and a
.sort_key() giving a deterministic total order; both curve modules
provide such places.
"""

from __future__ import annotations


class Divisor:
    __slots__ = ("_d",)

    def __init__(self, data=None):
        d = {}
        if data:
            for place, n in (data.items() if isinstance(data, dict) else data):
                if n:
                    d[place] = d.get(place, 0) + n
                    if d[place] == 0:
                        del d[place]
        self._d = d

    @classmethod
    def of(cls, *pairs):
        return cls(list(pairs))

    @classmethod
    def zero(cls):
        return cls()

    def items(self):
        return sorted(self._d.items(), key=lambda kv: kv[0].sort_key())

    def support(self):
        return [p for p, _ in self.items()]

    def __getitem__(self, place):
        return self._d.get(place, 0)

    def __contains__(self, place):
        return place in self._d

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._d == other._d

    def __hash__(self):
        return hash(tuple(sorted(((p.sort_key(), n) for p, n in self._d.items()))))

    def __add__(self, other):
        d = dict(self._d)
        for p, n in other._d.items():
            d[p] = d.get(p, 0) + n
            if d[p] == 0:
                del d[p]
        out = Divisor()
        out._d = d
        return out

    def __neg__(self):
        out = Divisor()
        out._d = {p: -n for p, n in self._d.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        if k == 0:
            return Divisor()
        out = Divisor()
        out._d = {p: k * n for p, n in self._d.items()}
        return out

    __mul__ = __rmul__

    def degree(self):
        return sum(n * p.degree for p, n in self._d.items())

    def positive_part(self):
        out = Divisor()
        out._d = {p: n for p, n in self._d.items() if n > 0}
        return out

    def negative_part(self):
        """The effective divisor D_- with self = D_+ - D_-."""
        out = Divisor()
        out._d = {p: -n for p, n in self._d.items() if n < 0}
        return out

    def is_effective(self):
        return all(n > 0 for n in self._d.values())

    def map_places(self, f):
        """Pushforward along a place map (used for automorphisms)."""
        return Divisor([(f(p), n) for p, n in self._d.items()])

    def __repr__(self):
        if not self._d:
            return "Div(0)"
        parts = []
        for p, n in self.items():
            parts.append(f"{n}*{p!r}" if n != 1 else f"{p!r}")
        return "Div(" + " + ".join(parts) + ")"
