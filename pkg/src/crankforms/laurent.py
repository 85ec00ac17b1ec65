"""Laurent polynomials in z with integer coefficients, as a series coefficient ring."""

from __future__ import annotations

from .errors import NonUnitError
from .rings import Ring


class LaurentPoly:
    """Immutable sparse Laurent polynomial sum_m c_m z^m."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        self.terms = {int(m): int(c) for m, c in dict(terms).items() if c}

    def _other(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __getitem__(self, m: int) -> int:
        return self.terms.get(m, 0)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*z^{m}" for m, c in sorted(self.terms.items()))

    def support(self) -> tuple[int, int] | None:
        if not self.terms:
            return None
        return min(self.terms), max(self.terms)

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())


class LaurentRing(Ring):
    tag = "Laurent"

    @property
    def zero(self):
        return LaurentPoly()

    @property
    def one(self):
        return LaurentPoly(1)

    def coerce(self, x):
        if isinstance(x, LaurentPoly):
            return x
        return LaurentPoly(int(x))

    def is_unit(self, x) -> bool:
        return len(x.terms) == 1 and next(iter(x.terms.values())) in (1, -1)

    def inverse(self, x):
        if not self.is_unit(x):
            raise NonUnitError(f"{x!r} is not a unit")
        (m, c), = x.terms.items()
        return LaurentPoly({-m: c})

    def exact_div(self, a, b):
        return a * self.inverse(b)

    def encode(self, x):
        return {str(m): str(c) for m, c in sorted(x.terms.items())}

    def decode(self, obj):
        return LaurentPoly({int(m): int(c) for m, c in obj.items()})


LAURENT = LaurentRing()
