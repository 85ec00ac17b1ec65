"""Coefficient rings for truncated q-series.

Series store bare elements (Python ``int`` for the integer and residue rings,
``CycInt`` for cyclotomic integers, ``LaurentPoly`` for polynomials in z) and
carry one ring object that knows how to normalise, encode and invert them.
Keeping the modulus on the ring rather than on every coefficient keeps the
convolution kernels on plain integer arithmetic; scalar code that wants the
per-value check can use ``ModInt``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt, cyc_embed
from .errors import InexactDivision, ModulusMismatch, NonUnitError
from .numtheory import euler_phi


@dataclass(frozen=True)
class ModInt:
    """Residue class modulo ``modulus``, always stored in [0, modulus)."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else ModInt(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else ModInt(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else ModInt(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else ModInt(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __pow__(self, e: int):
        return ModInt(pow(self.value, e, self.modulus), self.modulus)

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> "ModInt":
        try:
            return ModInt(pow(self.value, -1, self.modulus), self.modulus)
        except ValueError:
            raise NonUnitError(f"{self.value} is not a unit mod {self.modulus}") from None


class Ring:
    """Interface shared by all coefficient rings."""

    tag: str

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, x):
        return x

    def reduce(self, x):
        return x

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def exact_div(self, a, b):
        raise NotImplementedError

    def encode(self, x):
        return str(x)

    def decode(self, obj):
        return self.coerce(int(obj))

    def __eq__(self, other):
        return type(self) is type(other) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


class IntegerRing(Ring):
    tag = "BigInt"

    def coerce(self, x):
        if isinstance(x, CycInt):
            from .cyclotomic import cyc_to_integer
            return cyc_to_integer(x)
        return int(x)

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def inverse(self, x):
        if x not in (1, -1):
            raise NonUnitError(f"{x} is not a unit in Z")
        return x

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{a} is not divisible by {b}")
        return q


class ModRing(Ring):
    def __init__(self, modulus: int):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        self.modulus = modulus
        self.tag = f"ModInt({modulus})"

    def coerce(self, x):
        if isinstance(x, ModInt):
            if x.modulus != self.modulus:
                raise ModulusMismatch(f"moduli differ: {self.modulus} vs {x.modulus}")
            return x.value
        return int(x) % self.modulus

    def reduce(self, x):
        return x % self.modulus

    def is_unit(self, x) -> bool:
        from math import gcd
        return gcd(x, self.modulus) == 1

    def inverse(self, x):
        return ModInt(x, self.modulus).inverse().value

    def exact_div(self, a, b):
        return (a * self.inverse(b)) % self.modulus

    def element(self, x) -> ModInt:
        return ModInt(x, self.modulus)


class CyclotomicRing(Ring):
    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.tag = f"CycInt({conductor})"

    @property
    def zero(self):
        return CycInt.constant(self.conductor, 0)

    @property
    def one(self):
        return CycInt.constant(self.conductor, 1)

    @property
    def degree(self) -> int:
        return euler_phi(self.conductor)

    def coerce(self, x):
        if isinstance(x, CycInt):
            if x.conductor == self.conductor:
                return x
            return cyc_embed(x, self.conductor)
        return CycInt.constant(self.conductor, int(x))

    def is_unit(self, x) -> bool:
        return x.is_unit()

    def inverse(self, x):
        if not x.is_unit():
            raise NonUnitError(f"{x!r} is not a unit in Z[zeta_{self.conductor}]")
        return self.one.exact_div(x)

    def exact_div(self, a, b):
        return a.exact_div(b)

    def encode(self, x):
        return x.to_json()

    def decode(self, obj):
        value = CycInt.from_json(obj)
        if value.conductor != self.conductor:
            raise ValueError(f"element of conductor {value.conductor} in {self.tag} series")
        return value


ZZ = IntegerRing()


def ring_from_tag(tag: str) -> Ring:
    if tag == "BigInt":
        return ZZ
    if tag.startswith("ModInt(") and tag.endswith(")"):
        return ModRing(int(tag[7:-1]))
    if tag.startswith("CycInt(") and tag.endswith(")"):
        return CyclotomicRing(int(tag[7:-1]))
    if tag == "Laurent":
        from .laurent import LAURENT
        return LAURENT
    raise ValueError(f"unknown ring tag {tag!r}")
