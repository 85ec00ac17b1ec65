"""Crank-type generating functions and their residue-class dissections.

The family is

    F_{r,d,t}(z, q) = (q^r; q^r)^d / ((q; q)^t (zq; q) (q/z; q))

with M_{r,d,t}(m, n) the coefficient of z^m q^n.  The triple (1, 2, 1) gives the
crank, (1, 1, 1) the birank of pairs and (1, 1, k-1) the
k-crank of k-colored partitions, whose generating function carries
(q; q)^(2-k).

Two independent routes produce M_{r,d,t}(m, N, n): summing Laurent
coefficients over z-exponents in a residue class, and the root-of-unity
filter in Z[zeta_N].  The module also carries the Klein-form expansions at
the vectors (a1, s/N) used to rebuild the filter from modular objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycInt, cyc_to_integer
from .errors import IntegralityError, NonIntegerError
from .laurent import LAURENT, LaurentPoly
from .qseries import QSeries, pochhammer, series_dilate, series_div, series_inv, series_mul, series_pow
from .rings import ZZ, CyclotomicRing


@dataclass(frozen=True)
class CrankSpec:
    r: int
    d: int
    t: int

    def __post_init__(self):
        for name in ("r", "d", "t"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    def __str__(self):
        return f"({self.r},{self.d},{self.t})"


CRANK = CrankSpec(1, 2, 1)
BIRANK = CrankSpec(1, 1, 1)


def k_crank_spec(k: int) -> CrankSpec:
    """Family whose coefficients count k-colored partitions by k-crank.

    (1, k-1, 1) would give (q; q)^(k-2) in the numerator; the k-crank needs
    (q; q)^(2-k), which is (1, 1, k-1).
    """
    if k < 2:
        raise ValueError("k-crank needs k >= 2")
    return CrankSpec(1, 1, k - 1)


def zfree_factor(spec: CrankSpec, order: int) -> QSeries:
    """(q^r; q^r)^d / (q; q)^t."""
    qr = series_dilate(pochhammer(1, 1, -(-order // spec.r)), spec.r).truncate(order)
    return series_mul(series_pow(qr, spec.d), series_pow(series_inv(pochhammer(1, 1, order)),
                                                         spec.t))


def column_sum_series(spec: CrankSpec, order: int) -> QSeries:
    """F_{r,d,t}(1, q) = (q^r; q^r)^d / (q; q)^(t+2)."""
    return series_mul(zfree_factor(spec, order),
                      series_pow(series_inv(pochhammer(1, 1, order)), 2))


# -- Laurent route ----------------------------------------------------------------


@lru_cache(maxsize=32)
def _crank_rows(spec: CrankSpec, order: int) -> tuple[tuple[int, ...], ...]:
    """Rows n = 0..order-1 of M_{r,d,t}(m, n), indexed by m + order."""
    w = order
    width = 2 * w + 1
    rows = [[0] * width for _ in range(order)]
    if order:
        rows[0][w] = 1
    for k in range(1, order):
        # 1 / (1 - z q^k), then 1 / (1 - q^k / z)
        for n in range(k, order):
            src = rows[n - k]
            rows[n] = [a + b for a, b in zip(rows[n], [0] + src[:-1])]
        for n in range(k, order):
            src = rows[n - k]
            rows[n] = [a + b for a, b in zip(rows[n], src[1:] + [0])]
    a = zfree_factor(spec, order).coeffs
    out = []
    for n in range(order):
        acc = [0] * width
        for j in range(n + 1):
            if a[j]:
                aj = a[j]
                acc = [x + aj * y for x, y in zip(acc, rows[n - j])]
        lo, hi = w - n, w + n
        if any(acc[:lo]) or any(acc[hi + 1:]):
            raise IntegralityError(f"z-support at q^{n} escapes [-{n}, {n}]")
        out.append(tuple(acc))
    return tuple(out)


def crank_table(spec: CrankSpec, order: int) -> list[dict[int, int]]:
    """[{m: M_{r,d,t}(m, n)} for n < order], nonzero entries only."""
    w = order
    return [{m - w: c for m, c in enumerate(row) if c} for row in _crank_rows(spec, order)]


def crank_series_laurent(spec: CrankSpec, order: int) -> QSeries:
    """F_{r,d,t}(z, q) as a q-series whose coefficients are Laurent polynomials in z."""
    return QSeries._raw([LaurentPoly(row) for row in crank_table(spec, order)],
                        LAURENT, 0, 1)


def dissect_laurent(spec: CrankSpec, N: int, m: int, order: int) -> QSeries:
    """sum_n M_{r,d,t}(m, N, n) q^n by summing Laurent coefficients with k = m (mod N)."""
    if N < 1:
        raise ValueError("modulus must be positive")
    w = order
    c = m % N
    out = []
    for row in _crank_rows(spec, order):
        out.append(sum(x for i, x in enumerate(row) if (i - w) % N == c))
    return QSeries._raw(out, ZZ, 0, 1)


# -- root-of-unity filter ------------------------------------------------------------


def _inv_pochhammer_at(x, ring, order: int) -> list:
    """Coefficients of 1 / prod_{n>=1} (1 - x q^n)."""
    c = [ring.one] + [ring.zero] * (order - 1)
    for k in range(1, order):
        for n in range(k, order):
            if c[n - k]:
                c[n] = c[n] + x * c[n - k]
    return c


@lru_cache(maxsize=256)
def crank_at_root(spec: CrankSpec, N: int, s: int, order: int) -> QSeries:
    """F_{r,d,t}(zeta_N^s, q) over Z[zeta_N]."""
    ring = CyclotomicRing(N)
    a = _inv_pochhammer_at(CycInt.zeta(N, s), ring, order)
    b = _inv_pochhammer_at(CycInt.zeta(N, -s), ring, order)
    body = series_mul(QSeries._raw(a, ring, 0, 1), QSeries._raw(b, ring, 0, 1))
    return series_mul(zfree_factor(spec, order).change_ring(ring), body)


def _dft_divisor(N: int) -> int:
    return N


def crank_dissection_dft(spec: CrankSpec, N: int, m: int, order: int) -> QSeries:
    """sum_n M_{r,d,t}(m, N, n) q^n as (1/N) sum_s zeta^(-ms) F(zeta^s, q).

    The sum is formed in Z[zeta_N]; each coefficient must come out as a
    rational integer divisible by N, otherwise ``IntegralityError`` is raised.
    """
    if N < 2:
        raise ValueError("the root-of-unity filter needs N >= 2")
    ring = CyclotomicRing(N)
    total = [ring.zero] * order
    for s in range(N):
        term = crank_at_root(spec, N, s, order)
        w = CycInt.zeta(N, -m * s)
        total = [acc + w * c for acc, c in zip(total, term.coeffs)]
    divisor = _dft_divisor(N)
    out = []
    for n, c in enumerate(total):
        try:
            value = cyc_to_integer(c)
        except NonIntegerError as exc:
            raise IntegralityError(f"filter sum at q^{n} is not rational: {c!r}") from exc
        if value % divisor:
            raise IntegralityError(f"filter sum {value} at q^{n} is not divisible by {divisor}")
        out.append(value // divisor)
    return QSeries._raw(out, ZZ, 0, 1)


# -- Klein forms ------------------------------------------------------------------------


def omega(s: int, N: int) -> CycInt:
    """zeta_N^(s/2) (1 - zeta_N^(-s)) with the half power read as zeta_{2N}^s."""
    if not 1 <= s <= N - 1:
        raise ValueError(f"s must lie in [1, {N - 1}], got {s}")
    z = 2 * N
    return CycInt.zeta(z, s) * (1 - CycInt.zeta(z, -2 * s))


def klein_series(a1: int, s: int, N: int, order: int) -> QSeries:
    """Klein form at the vector (a1, s/N) for integer a1, over Z[zeta_{2N}].

        e(s (a1 - 1) / 2N) q^(a1 (a1 - 1) / 2)
            * prod_{n>=0} (1 - zeta^s q^(n + a1)) prod_{n>=1} (1 - zeta^-s q^(n - a1))
            / (q; q)^2

    with zeta = zeta_N.  The result carries ``order`` coefficients from its
    leading exponent.
    """
    if s % N == 0:
        raise ValueError("the Klein form degenerates when s = 0 (mod N)")
    z = 2 * N
    ring = CyclotomicRing(z)
    x = CycInt.zeta(z, 2 * s)
    xinv = CycInt.zeta(z, -2 * s)
    factors = [(n + a1, x) for n in range(0, order + abs(a1) + 1)]
    factors += [(n - a1, xinv) for n in range(1, order + abs(a1) + 1)]
    factors.sort(key=lambda f: f[0])
    low = sum(k for k, _ in factors if k < 0)
    cutoff = low + order
    poly = {0: ring.one}
    for k, root in factors:
        # factors are sorted, so once k >= 0 no later factor lowers an exponent
        if k >= order:
            break
        nxt = dict(poly)
        for e, c in poly.items():
            if k < 0 or e + k < cutoff:
                nxt[e + k] = nxt.get(e + k, ring.zero) - root * c
        poly = nxt
    body = QSeries([poly.get(e, ring.zero) for e in range(low, cutoff)], ring, low, 1)
    eta2 = series_pow(series_inv(pochhammer(1, 1, order)), 2).change_ring(ring)
    prefactor = CycInt.zeta(z, s * (a1 - 1))
    return (series_mul(body, eta2) * prefactor).shift(a1 * (a1 - 1) // 2)


def klein_expansion(s: int, N: int, order: int) -> QSeries:
    """Klein form at (0, s/N): zeta_{2N}^(-s) (zeta^s; q) (q/zeta^s; q) / (q; q)^2."""
    if s % N == 0:
        raise ValueError("the Klein form degenerates when s = 0 (mod N)")
    return klein_series(0, s, N, order)


def klein_shift_factor(s: int, N: int, n1: int, n2: int) -> CycInt:
    """(-1)^(n1 + n2 + n1 n2) e((a1 n2 - a2 n1) / 2) for the base vector (0, s/N)."""
    sign = -1 if (n1 + n2 + n1 * n2) % 2 else 1
    return sign * CycInt.zeta(2 * N, -s * n1)


def omega_over_klein(s: int, N: int, order: int) -> QSeries:
    """omega_s / k_(0, s/N) as an exact series quotient in Z[zeta_{2N}]."""
    k = klein_expansion(s, N, order)
    num = QSeries.one(order, k.ring) * omega(s, N)
    return series_div(num, k)
