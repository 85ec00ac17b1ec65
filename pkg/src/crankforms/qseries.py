"""Truncated q-expansions over a pluggable coefficient ring.

A ``QSeries`` holds the coefficients of q^(e/D) for offset <= e < offset + order.
Coefficients below the offset are zero; coefficients at or beyond the
precision ``offset + order`` are unknown and never treated as zero.  All
binary operations compute the precision of their result from the precisions
of their operands.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import LatticeError, NonUnitError, PrecisionError, RingMismatch
from .numtheory import lcm
from .rings import ZZ, ModRing, Ring

__all__ = [
    "QSeries",
    "EtaQuotient",
    "series_mul",
    "series_inv",
    "series_div",
    "series_dilate",
    "pochhammer",
    "eta_expansion",
    "extract_progression",
    "freshman_pow",
    "coincide_on_progression",
]


class QSeries:
    __slots__ = ("ring", "coeffs", "offset", "denominator")

    def __init__(self, coeffs, ring: Ring = ZZ, offset: int = 0, denominator: int = 1):
        if denominator < 1:
            raise LatticeError(f"denominator must be positive, got {denominator}")
        self.ring = ring
        self.coeffs = tuple(ring.reduce(ring.coerce(c)) for c in coeffs)
        self.offset = int(offset)
        self.denominator = int(denominator)

    @classmethod
    def _raw(cls, coeffs, ring, offset, denominator):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(coeffs)
        obj.offset = offset
        obj.denominator = denominator
        return obj

    @classmethod
    def from_dict(cls, terms: dict, order: int, ring: Ring = ZZ, offset: int = 0,
                  denominator: int = 1) -> "QSeries":
        """Build from {exponent numerator: coefficient}, known below offset + order."""
        coeffs = [ring.zero] * order
        for e, c in terms.items():
            if not offset <= e < offset + order:
                raise PrecisionError(f"exponent {e} outside [{offset}, {offset + order})")
            coeffs[e - offset] = ring.reduce(ring.coerce(c))
        # zeros are already canonical, so skip the per-entry coercion in __init__
        return cls._raw(tuple(coeffs), ring, offset, denominator)

    @classmethod
    def one(cls, order: int, ring: Ring = ZZ, denominator: int = 1) -> "QSeries":
        return cls._raw([ring.one] + [ring.zero] * (order - 1), ring, 0, denominator)

    # -- basic accessors ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def precision(self) -> int:
        """First exponent numerator whose coefficient is unknown."""
        return self.offset + len(self.coeffs)

    def __getitem__(self, e: int):
        if e >= self.precision:
            raise PrecisionError(
                f"coefficient of q^({e}/{self.denominator}) is beyond precision {self.precision}")
        if e < self.offset:
            return self.ring.zero
        return self.coeffs[e - self.offset]

    def coefficient(self, exponent) -> object:
        """Coefficient of q^exponent for a rational exponent."""
        x = Fraction(exponent) * self.denominator
        if x.denominator != 1:
            return self.ring.zero
        return self[int(x)]

    def terms(self):
        """Yield (exponent numerator, coefficient) for every nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + i, c

    def valuation(self) -> Fraction | None:
        for e, _ in self.terms():
            return Fraction(e, self.denominator)
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        shown = ", ".join(f"{e}: {c!r}" for e, c in list(self.terms())[:8])
        return (f"QSeries({self.ring.tag}, D={self.denominator}, offset={self.offset}, "
                f"order={self.order}, {{{shown}}})")

    # -- lattice and window manipulation ----------------------------------------

    def with_denominator(self, denominator: int) -> "QSeries":
        if denominator == self.denominator:
            return self
        if denominator % self.denominator:
            raise LatticeError(f"cannot refine 1/{self.denominator} lattice to 1/{denominator}")
        k = denominator // self.denominator
        out = [self.ring.zero] * (k * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return QSeries._raw(out, self.ring, self.offset * k, denominator)

    def reduce_denominator(self) -> "QSeries":
        """Coarsest lattice that still carries every nonzero coefficient."""
        g = self.denominator
        for e, _ in self.terms():
            g = gcd(g, e)
            if g == 1:
                return self
        if g == 1:
            return self
        offset = -((-self.offset) // g)
        prec = -((-self.precision) // g)
        return QSeries._raw([self[e * g] if e * g < self.precision else self.ring.zero
                             for e in range(offset, prec)],
                            self.ring, offset, self.denominator // g)

    def strip(self) -> "QSeries":
        """Drop leading zero coefficients (raise the offset)."""
        i = 0
        while i < len(self.coeffs) and not self.coeffs[i]:
            i += 1
        if i == 0:
            return self
        return QSeries._raw(self.coeffs[i:], self.ring, self.offset + i, self.denominator)

    def truncate(self, precision: int) -> "QSeries":
        """Forget coefficients at exponent numerators >= precision."""
        if precision >= self.precision:
            return self
        n = max(precision - self.offset, 0)
        return QSeries._raw(self.coeffs[:n], self.ring, self.offset, self.denominator)

    def extend_offset(self, offset: int) -> "QSeries":
        """Re-express with a lower offset by padding explicit zeros."""
        if offset > self.offset:
            raise ValueError("extend_offset can only lower the offset")
        pad = [self.ring.zero] * (self.offset - offset)
        return QSeries._raw(pad + list(self.coeffs), self.ring, offset, self.denominator)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^(k/D)."""
        return QSeries._raw(self.coeffs, self.ring, self.offset + k, self.denominator)

    def map(self, fn, ring: Ring | None = None) -> "QSeries":
        ring = ring or self.ring
        return QSeries(map(fn, self.coeffs), ring, self.offset, self.denominator)

    def change_ring(self, ring: Ring) -> "QSeries":
        return QSeries(self.coeffs, ring, self.offset, self.denominator)

    def map_exponents(self, fn) -> "QSeries":
        """Apply fn(exponent numerator, coefficient) -> coefficient."""
        return QSeries([fn(self.offset + i, c) for i, c in enumerate(self.coeffs)],
                       self.ring, self.offset, self.denominator)

    # -- arithmetic -------------------------------------------------------------

    def _align(self, other: "QSeries"):
        if self.ring != other.ring:
            raise RingMismatch(f"ring mismatch: {self.ring.tag} vs {other.ring.tag}")
        d = lcm(self.denominator, other.denominator)
        return self.with_denominator(d), other.with_denominator(d)

    def _scalar(self, c) -> "QSeries":
        # constants are exact, so give them the precision of this operand
        n = max(self.precision, 1)
        out = [self.ring.reduce(self.ring.coerce(c))] + [self.ring.zero] * (n - 1)
        return QSeries._raw(out, self.ring, 0, self.denominator)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = self._scalar(other)
        f, g = self._align(other)
        lo = min(f.offset, g.offset)
        hi = min(f.precision, g.precision)
        ring = f.ring
        out = [ring.reduce(f[e] + g[e]) for e in range(lo, hi)] if hi > lo else []
        return QSeries._raw(out, ring, lo, f.denominator)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw([self.ring.reduce(-c) for c in self.coeffs], self.ring,
                            self.offset, self.denominator)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = self._scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        c = self.ring.coerce(other)
        return QSeries._raw([self.ring.reduce(c * x) for x in self.coeffs], self.ring,
                            self.offset, self.denominator)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        return series_pow(self, e)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return series_div(self, other)
        div = self.ring.exact_div
        c = self.ring.coerce(other)
        return QSeries._raw([div(x, c) for x in self.coeffs], self.ring, self.offset,
                            self.denominator)

    def __eq__(self, other):
        """Same ring, same precision and same coefficients over the known window."""
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.ring != other.ring:
            return False
        f, g = self._align(other)
        if f.precision != g.precision:
            return False
        return all(f[e] == g[e] for e in range(min(f.offset, g.offset), f.precision))

    __hash__ = None

    def agrees(self, other: "QSeries") -> bool:
        """Equality on the common known window (precisions may differ)."""
        f, g = self._align(other)
        hi = min(f.precision, g.precision)
        return all(f[e] == g[e] for e in range(min(f.offset, g.offset), hi))


# -- kernels ---------------------------------------------------------------------


def _convolve(a, b, n, ring):
    """First n coefficients of the product of coefficient lists a and b."""
    zero = ring.zero
    out = [zero] * n
    nzb = [(j, y) for j, y in enumerate(b[:n]) if y]
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        lim = n - i
        for j, y in nzb:
            if j >= lim:
                break
            out[i + j] = out[i + j] + x * y
    return [ring.reduce(c) for c in out]


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    """Truncated product; the relative order is the smaller of the two."""
    f, g = f._align(g)
    n = min(f.order, g.order)
    return QSeries._raw(_convolve(f.coeffs, g.coeffs, n, f.ring), f.ring,
                        f.offset + g.offset, f.denominator)


def _divider(ring, b):
    from .rings import CyclotomicRing
    if isinstance(ring, CyclotomicRing) and not b.is_integer():
        from .cyclotomic import _divide_by_integer
        cof, norm = b._conjugate_cofactor()
        return lambda a: _divide_by_integer(a * cof, norm)
    if ring.is_unit(b):
        inv = ring.inverse(b)
        return lambda a: ring.reduce(a * inv)
    return lambda a: ring.exact_div(a, b)


def _quotient(num, den, n, ring):
    """First n coefficients of num/den for den[0] != 0 (exact division)."""
    divide = _divider(ring, den[0])
    nzd = [(k, y) for k, y in enumerate(den[:n]) if y and k]
    out = []
    for i in range(n):
        acc = num[i] if i < len(num) else ring.zero
        for k, y in nzd:
            if k > i:
                break
            acc = acc - y * out[i - k]
        out.append(ring.reduce(divide(ring.reduce(acc))))
    return out


def series_inv(f: QSeries) -> QSeries:
    """Multiplicative inverse; the leading nonzero coefficient must be a unit."""
    g = f.strip()
    if not g.coeffs:
        raise NonUnitError("cannot invert a series with no known nonzero coefficient")
    if not g.ring.is_unit(g.coeffs[0]):
        raise NonUnitError(f"leading coefficient {g.coeffs[0]!r} is not a unit in {g.ring.tag}")
    n = g.order
    out = _quotient([g.ring.one], g.coeffs, n, g.ring)
    return QSeries._raw(out, g.ring, -g.offset, g.denominator)


def series_div(f: QSeries, g: QSeries) -> QSeries:
    """Exact quotient f/g; every coefficient division must be exact in the ring."""
    f, g = f._align(g)
    g = g.strip()
    if not g.coeffs:
        raise NonUnitError("division by a series with no known nonzero coefficient")
    n = min(f.order, g.order)
    out = _quotient(f.coeffs, g.coeffs, n, f.ring)
    return QSeries._raw(out, f.ring, f.offset - g.offset, f.denominator)


def series_pow(f: QSeries, e: int) -> QSeries:
    if e < 0:
        return series_pow(series_inv(f), -e)
    result = QSeries.one(f.order, f.ring, f.denominator)
    base = f
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_dilate(f: QSeries, k: int) -> QSeries:
    """Substitute q -> q^k."""
    if k < 1:
        raise ValueError(f"dilation factor must be positive, got {k}")
    if k == 1:
        return f
    out = [f.ring.zero] * (k * f.order)
    for i, c in enumerate(f.coeffs):
        out[k * i] = c
    return QSeries._raw(out, f.ring, f.offset * k, f.denominator)


def pochhammer(a: int, b: int, order: int) -> QSeries:
    """prod_{n>=0} (1 - q^(a+bn)) over the integers, known below q^order."""
    if a < 1 or b < 1:
        raise ValueError("pochhammer needs a, b >= 1")
    c = [1] + [0] * (order - 1)
    k = a
    while k < order:
        for i in range(order - 1, k - 1, -1):
            if c[i - k]:
                c[i] -= c[i - k]
        k += b
    return QSeries._raw(c[:order], ZZ, 0, 1)


# -- eta quotients -------------------------------------------------------------------


class EtaQuotient:
    """prod eta(delta tau)^(r_delta) with an attached level."""

    __slots__ = ("factors", "level")

    def __init__(self, factors, level: int | None = None):
        items = list(factors.items()) if isinstance(factors, dict) else list(factors)
        seen: dict[int, int] = {}
        for delta, r in items:
            delta, r = int(delta), int(r)
            if delta < 1:
                raise ValueError(f"eta argument multiplier must be positive, got {delta}")
            if delta in seen:
                raise ValueError(f"repeated delta {delta} in eta quotient")
            seen[delta] = r
        self.factors = tuple(sorted((d, r) for d, r in seen.items() if r))
        if level is None:
            level = lcm(*(d for d, _ in self.factors)) if self.factors else 1
        bad = [d for d, _ in self.factors if level % d]
        if bad:
            raise ValueError(f"level {level} is not divisible by {bad}")
        self.level = level

    @classmethod
    def parse(cls, text: str, level: int | None = None) -> "EtaQuotient":
        """Parse the "delta:exponent,..." descriptor, e.g. "5:5,1:-1"."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            d, _, r = chunk.partition(":")
            pairs.append((int(d), int(r)))
        return cls(pairs, level)

    @classmethod
    def combine(cls, pairs, level: int | None = None) -> "EtaQuotient":
        """Like the constructor, but repeated deltas have their exponents added."""
        acc: dict[int, int] = {}
        for d, r in pairs:
            acc[d] = acc.get(d, 0) + r
        return cls(acc, level)

    def __str__(self):
        return ",".join(f"{d}:{r}" for d, r in self.factors)

    def __repr__(self):
        return f"EtaQuotient({str(self)!r}, level={self.level})"

    def __eq__(self, other):
        return (isinstance(other, EtaQuotient) and self.factors == other.factors
                and self.level == other.level)

    def __hash__(self):
        return hash((self.factors, self.level))

    @property
    def offset24(self) -> int:
        """Order at infinity in 24ths: sum delta * r_delta."""
        return sum(d * r for d, r in self.factors)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.factors), 2)


def eta_product(e: EtaQuotient, order: int) -> QSeries:
    """prod (q^delta; q^delta)^r_delta with integral exponents (no q^(1/24) prefactor)."""
    result = QSeries.one(order)
    for delta, r in e.factors:
        base = series_dilate(pochhammer(1, 1, -(-order // delta)), delta).truncate(order)
        power = series_pow(base, abs(r))
        result = series_mul(result, power if r > 0 else series_inv(power))
    return result


def eta_expansion(e: EtaQuotient, order: int) -> QSeries:
    """q-expansion on the 1/24 lattice, with ``order`` integral powers of q after the prefactor."""
    body = eta_product(e, order).with_denominator(24)
    return body.shift(e.offset24)


# -- progressions ----------------------------------------------------------------------


def extract_progression(f: QSeries, modulus: int, residue: int) -> QSeries:
    """Keep the coefficients whose exponent is congruent to residue mod modulus.

    On a 1/D lattice with D > 1 the congruence is read on exponent numerators,
    which requires D to divide the modulus.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if f.denominator != 1 and modulus % f.denominator:
        raise LatticeError(
            f"stride {modulus} is not compatible with the 1/{f.denominator} lattice")
    zero = f.ring.zero
    c = residue % modulus
    return QSeries._raw([x if (f.offset + i) % modulus == c else zero
                         for i, x in enumerate(f.coeffs)], f.ring, f.offset, f.denominator)


def freshman_pow(f: QSeries, ell: int, v: int) -> QSeries:
    """f^(ell^v) over Z/ell^v, computed by v successive ell-th powers."""
    if not isinstance(f.ring, ModRing) or f.ring.modulus != ell ** v:
        raise RingMismatch(f"freshman_pow needs coefficients mod {ell}^{v}, got {f.ring.tag}")
    g = f
    for _ in range(v):
        g = series_pow(g, ell)
    return g


def coincide_on_progression(f: QSeries, g: QSeries, ell: int, residue: int,
                            modulus: int) -> bool:
    """Do f and g agree modulo ``modulus`` at every known exponent = residue (mod ell)?"""
    if f.denominator != g.denominator:
        raise LatticeError("series live on different exponent lattices")
    lo = min(f.offset, g.offset)
    hi = min(f.precision, g.precision)
    c = residue % ell
    for e in range(lo, hi):
        if e % ell == c and (f[e] - g[e]) % modulus:
            return False
    return True
