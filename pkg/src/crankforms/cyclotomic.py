"""Exact arithmetic in the cyclotomic integers Z[zeta_N].

Elements are stored as coefficient tuples of length phi(N) in the basis
1, x, ..., x^(phi(N)-1) of Z[x]/(Phi_N(x)), with x standing for
zeta_N = exp(2 pi i / N).  The representation is canonical, so equality is
plain tuple equality.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import ConductorMismatch, InexactDivision, NonIntegerError
from .numtheory import divisors, euler_phi, is_prime, legendre_symbol

__all__ = [
    "CycInt",
    "cyclotomic_polynomial",
    "cyc_arith",
    "cyc_embed",
    "cyc_to_integer",
    "gauss_sum",
    "zeta",
]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact_monic(num, den):
    """Quotient of num by the monic polynomial den; the remainder must vanish."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dn]
        q[i] = c
        if c:
            for j, y in enumerate(den):
                num[i + j] -= c * y
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in divisors(n):
        if d < n:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_divexact_monic(num, den))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical forms of x^k for 0 <= k < max(n, 2 phi(n))."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    table = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(max(n, 2 * phi)):
        table.append(tuple(cur))
        # multiply by x and fold the overflow with x^phi = -(Phi_n - x^phi)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(table)


def _reduce(n: int, poly) -> tuple[int, ...]:
    phi = euler_phi(n)
    if len(poly) <= phi:
        return tuple(poly) + (0,) * (phi - len(poly))
    table = _power_table(n)
    out = list(poly[:phi])
    for k in range(phi, len(poly)):
        c = poly[k]
        if c:
            row = table[k] if k < len(table) else _reduce(n, [0] * k + [1])
            for i, y in enumerate(row):
                if y:
                    out[i] += c * y
    return tuple(out)


class CycInt:
    """An element of Z[zeta_N] in canonical reduced form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.coeffs = _reduce(conductor, [int(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, conductor, coeffs):
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, conductor: int, value: int) -> "CycInt":
        phi = euler_phi(conductor)
        return cls._raw(conductor, (int(value),) + (0,) * (phi - 1))

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> "CycInt":
        return cls._raw(conductor, _power_table(conductor)[k % conductor])

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductors differ: {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, int):
            return CycInt.constant(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._raw(self.conductor,
                           tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._raw(self.conductor,
                           tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycInt._raw(self.conductor, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt._raw(self.conductor, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._raw(self.conductor,
                           _reduce(self.conductor, _poly_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in Z[zeta]")
        result = CycInt.constant(self.conductor, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, CycInt):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.conductor}^{i}")
        return "CycInt(" + (" + ".join(terms) or "0") + ")"

    # -- structure ------------------------------------------------------------

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def galois(self, k: int) -> "CycInt":
        """Image under the automorphism zeta -> zeta^k (k coprime to N)."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit mod {n}")
        table = _power_table(n)
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, y in enumerate(table[(i * k) % n]):
                    out[j] += c * y
        return CycInt._raw(n, tuple(out))

    def _conjugate_cofactor(self) -> tuple["CycInt", int]:
        """(b', norm) with self * b' == norm, norm a rational integer."""
        n = self.conductor
        cof = CycInt.constant(n, 1)
        for k in range(2, n + 1):
            if gcd(k, n) == 1 and k % n != 1:
                cof = cof * self.galois(k)
        norm = self * cof
        assert norm.is_integer()
        return cof, norm.coeffs[0]

    def norm(self) -> int:
        return self._conjugate_cofactor()[1]

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def exact_div(self, other) -> "CycInt":
        """Quotient self / other, which must lie in Z[zeta_N]."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[zeta]")
        if other.is_integer():
            return _divide_by_integer(self, other.coeffs[0])
        cof, norm = other._conjugate_cofactor()
        return _divide_by_integer(self * cof, norm)

    def embed(self, target: int) -> "CycInt":
        return cyc_embed(self, target)

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "CycInt":
        return cls(int(obj["conductor"]), [int(c) for c in obj["coeffs"]])


def _divide_by_integer(a: CycInt, d: int) -> CycInt:
    if d == 0:
        raise ZeroDivisionError("division by zero in Z[zeta]")
    if any(c % d for c in a.coeffs):
        raise InexactDivision(f"{a!r} is not divisible by {d}")
    return CycInt._raw(a.conductor, tuple(c // d for c in a.coeffs))


def zeta(conductor: int, k: int = 1) -> CycInt:
    return CycInt.zeta(conductor, k)


def cyc_arith(a: CycInt, b: CycInt, op: str) -> CycInt:
    if a.conductor != b.conductor:
        raise ConductorMismatch(f"conductors differ: {a.conductor} vs {b.conductor}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def cyc_embed(a: CycInt, target: int) -> CycInt:
    """Map Z[zeta_N] into Z[zeta_target] via zeta_N -> zeta_target^(target/N)."""
    n = a.conductor
    if target % n:
        raise ValueError(f"target conductor {target} is not a multiple of {n}")
    step = target // n
    table = _power_table(target)
    out = [0] * euler_phi(target)
    for i, c in enumerate(a.coeffs):
        if c:
            for j, y in enumerate(table[(i * step) % target]):
                out[j] += c * y
    return CycInt._raw(target, tuple(out))


def cyc_to_integer(a) -> int:
    if isinstance(a, int):
        return a
    if not a.is_integer():
        raise NonIntegerError(f"{a!r} is not a rational integer")
    return a.coeffs[0]


def gauss_sum(ell: int) -> CycInt:
    """The quadratic Gauss sum sum_{n=1}^{ell-1} (n/ell) zeta_ell^n."""
    if ell == 2 or not is_prime(ell):
        raise ValueError(f"{ell} is not an odd prime")
    total = CycInt.constant(ell, 0)
    for n in range(1, ell):
        total = total + legendre_symbol(n, ell) * CycInt.zeta(ell, n)
    return total
