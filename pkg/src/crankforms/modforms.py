"""Operators on q-expansions of modular forms and the crank modular-form builders.

Covers quadratic twists and the tilde construction f - eps (f twist psi),
the Gauss-sum slash realisation of the twist, the half-integral-weight Hecke
operator T(p^2), eta-quotient weight/character and cusp orders, the series
G_m and P whose sum rebuilds the crank dissection, and the parameter choices
(eps, alpha, beta, v) attached to a prime ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cranks import CrankSpec, crank_dissection_dft, omega_over_klein
from .cyclotomic import CycInt, cyc_to_integer, gauss_sum
from .errors import IntegralityError, LatticeError, NoAdmissibleExponent, NonIntegerError
from .numtheory import divisors, is_prime, jacobi_symbol, kronecker_symbol
from .qseries import EtaQuotient, QSeries, eta_expansion, pochhammer, series_dilate, series_mul, series_pow
from .rings import ZZ, CyclotomicRing

# G_m is built from omega_s / k_(0,s/N) with this constant in place of the
# analytic 1/(2 pi i).  With -1 every filter term enters with sign +1, so
# G_m + P = N * (dissection) * (eta factors); see ``assembly_target``.
KLEIN_NORMALIZATION = -1


@dataclass(frozen=True)
class QuadChar:
    """A quadratic character: n -> (n/ell) ("top") or n -> (D/n) ("bottom")."""

    kind: str
    parameter: int

    def __post_init__(self):
        if self.kind not in ("top", "bottom"):
            raise ValueError(f"character kind must be 'top' or 'bottom', got {self.kind!r}")
        if self.kind == "top" and (self.parameter == 2 or not is_prime(self.parameter)):
            raise ValueError(f"top characters need an odd prime, got {self.parameter}")

    @classmethod
    def parse(cls, text: str) -> "QuadChar":
        kind, _, value = text.partition(":")
        return cls(kind.strip(), int(value))

    def __call__(self, n: int) -> int:
        if self.kind == "top":
            return jacobi_symbol(n, self.parameter)
        return kronecker_symbol(self.parameter, n)

    def __str__(self):
        return f"{self.kind}:{self.parameter}"

    def agrees_with(self, other, modulus: int, upto: int = 500) -> bool:
        """Same values at every 1 <= n <= upto coprime to modulus."""
        return all(self(n) == other(n) for n in range(1, upto + 1) if gcd(n, modulus) == 1)


def _require_integral(f: QSeries):
    if f.denominator != 1:
        raise LatticeError("this operator needs integral exponents; reduce the lattice first")


def twist(f: QSeries, psi) -> QSeries:
    """a(n) -> psi(n) a(n)."""
    _require_integral(f)
    return f.map_exponents(lambda n, c: c * psi(n))


def tilde(f: QSeries, eps: int, psi) -> QSeries:
    """f - eps (f twist psi), i.e. a(n) -> (1 - eps psi(n)) a(n)."""
    _require_integral(f)
    return f.map_exponents(lambda n, c: c * (1 - eps * psi(n)))


def twist_slash(f: QSeries, ell: int) -> QSeries:
    """(e_ell / ell) sum_{n=1}^{ell-1} (n/ell) f | [[1, -n/ell], [0, 1]].

    The slash by the translation multiplies a(m) by zeta_ell^(-mn).  Integer
    input is lifted to Z[zeta_ell] and returned as integers again; cyclotomic
    input must have a conductor divisible by ell.
    """
    _require_integral(f)
    integral_input = f.ring == ZZ
    ring = CyclotomicRing(ell) if integral_input else f.ring
    if not isinstance(ring, CyclotomicRing) or ring.conductor % ell:
        raise ValueError(f"coefficients must embed in a cyclotomic ring containing zeta_{ell}")
    g = f.change_ring(ring) if integral_input else f
    cond = ring.conductor
    step = cond // ell
    total = [ring.zero] * g.order
    for n in range(1, ell):
        sign = jacobi_symbol(n, ell)
        for i, c in enumerate(g.coeffs):
            if c:
                m = g.offset + i
                total[i] = total[i] + sign * c * CycInt.zeta(cond, -m * n * step)
    e = ring.coerce(gauss_sum(ell))
    out = []
    for c in total:
        try:
            out.append((c * e).exact_div(ell))
        except ArithmeticError as exc:
            raise IntegralityError(f"division by {ell} is inexact: {c!r}") from exc
    if integral_input:
        return QSeries([cyc_to_integer(c) for c in out], ZZ, g.offset, 1)
    return QSeries._raw(out, ring, g.offset, 1)


# -- Hecke operator ----------------------------------------------------------------------


@dataclass(frozen=True)
class HeckeContext:
    """T(p^2) in weight lam + 1/2 with a quadratic nebentypus (None = trivial)."""

    p: int
    lam: int
    chi: QuadChar | None = None

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 5:
            raise ValueError(f"p must be a prime >= 5, got {self.p}")
        if self.lam < 1:
            raise ValueError("weight 1/2 (lam = 0) needs p^-1 and is not supported")

    def chi_at(self, n: int) -> int:
        return 1 if self.chi is None else self.chi(n)


def hecke_Tp2(f: QSeries, ctx: HeckeContext) -> QSeries:
    """Half-integral-weight T(p^2) on a q-expansion.

    b(n) = a(p^2 n) + chi(p) ((-1)^lam n / p) p^(lam-1) a(n)
           + chi(p^2) ((-1)^lam / p^2) p^(2 lam - 1) a(n / p^2)

    Only n with p^2 n below the input precision are returned.
    """
    _require_integral(f)
    p, lam = ctx.p, ctx.lam
    p2 = p * p
    sgn = -1 if lam % 2 else 1
    mid = ctx.chi_at(p) * p ** (lam - 1)
    last = ctx.chi_at(p2) * kronecker_symbol(sgn, p2) * p ** (2 * lam - 1)
    prec = f.precision
    if prec <= 0:
        raise ValueError("series has no known coefficients")
    out_prec = (prec - 1) // p2 + 1
    o = f.offset
    start = min(-((-o) // p2), o, p2 * o)
    if start >= out_prec:
        return QSeries._raw([], f.ring, out_prec, 1)
    out = []
    for n in range(start, out_prec):
        b = f[p2 * n]
        a_n = f[n]
        if a_n:
            b = b + a_n * (mid * jacobi_symbol(sgn * n, p))
        if n % p2 == 0:
            a_low = f[n // p2]
            if a_low:
                b = b + a_low * last
        out.append(f.ring.reduce(b))
    return QSeries._raw(out, f.ring, start, 1)


# -- eta quotient metadata -----------------------------------------------------------------


def eta_weight_char(e: EtaQuotient) -> tuple[Fraction, QuadChar]:
    """Weight and nebentypus of an eta quotient.

    The character is n -> ((-1)^k' s / n) with s = prod delta^(r_delta) and
    k' the weight, or the weight minus 1/2 when the weight is half-integral.
    Squares in s are kept as squares so the zero set of the character is not
    changed.
    """
    weight = e.weight
    kprime = weight if weight.denominator == 1 else weight - Fraction(1, 2)
    s = 1
    for delta, r in e.factors:
        s *= delta if r % 2 else delta * delta
    disc = -s if int(kprime) % 2 else s
    return weight, QuadChar("bottom", disc)


def lemma_character_eta_ell(ell: int) -> QuadChar:
    """Declared character of eta^ell(ell tau)/eta(tau): (./ell)."""
    return QuadChar("top", ell)


def lemma_character_E(ell: int, j: int) -> QuadChar:
    """Declared character of eta^(ell^j)(tau)/eta(ell^j tau): ((-1)^((ell^j-1)/2) ell^j / .)."""
    lj = ell ** j
    return QuadChar("bottom", (-1) ** ((lj - 1) // 2) * lj)


def ligozat_order(e: EtaQuotient, cusp, level: int | None = None) -> Fraction:
    """Order of vanishing at the cusp a/c of Gamma_0(N), standard normalisation.

    ``cusp`` is a Fraction (its denominator is c) or the integer c itself;
    infinity is c = N.
    """
    N = e.level if level is None else level
    c = cusp.denominator if isinstance(cusp, Fraction) else int(cusp)
    if c < 1 or N % c:
        raise ValueError(f"cusp denominator {c} does not divide the level {N}")
    total = sum(Fraction(gcd(c, d) ** 2 * r, d) for d, r in e.factors)
    return Fraction(N, 24) * total / (gcd(c, N // c) * c)


# -- G_m, P and the assembly identity -----------------------------------------------------------


def _p_quotient(spec: CrankSpec, ell: int, v: int) -> EtaQuotient:
    return EtaQuotient.combine([(ell, spec.t * ell), (spec.r, spec.d * ell ** v), (1, -spec.t)])


def build_P(spec: CrankSpec, ell: int, v: int, order: int) -> QSeries:
    """eta^(t ell)(ell tau) eta^(d ell^v)(r tau) / eta^t(tau) on the 1/24 lattice."""
    return eta_expansion(_p_quotient(spec, ell, v), order)


def klein_filter_sum(m: int, N: int, order: int) -> QSeries:
    """KLEIN_NORMALIZATION * sum_{s=1}^{N-1} omega_s zeta^(-ms) / k_(0,s/N), certified integral."""
    ring = CyclotomicRing(2 * N)
    total = [ring.zero] * order
    for s in range(1, N):
        w = CycInt.zeta(2 * N, -2 * m * s)
        term = omega_over_klein(s, N, order)
        total = [acc + w * c for acc, c in zip(total, term.coeffs)]
    out = []
    for n, c in enumerate(total):
        try:
            out.append(KLEIN_NORMALIZATION * cyc_to_integer(c))
        except NonIntegerError as exc:
            raise IntegralityError(f"Klein filter sum at q^{n} is not rational: {c!r}") from exc
    return QSeries._raw(out, ZZ, 0, 1)


def build_Gm(spec: CrankSpec, m: int, N: int, ell: int, v: int, order: int) -> QSeries:
    """G_m = sum_s omega_s zeta^(-ms) k_(0,s/N)^(-1) * P, returned over the integers."""
    if N < 2:
        raise ValueError("G_m needs N >= 2")
    return series_mul(klein_filter_sum(m, N, order), build_P(spec, ell, v, order))


def assembly_target(spec: CrankSpec, m: int, N: int, ell: int, v: int, order: int) -> QSeries:
    """N * (sum_n M(m,N,n) q^n) (q;q)^2 (q^ell;q^ell)^(t ell) (q^r;q^r)^(d ell^v - d)
    * q^((t (ell^2 - 1) + d r ell^v) / 24)."""
    r, d, t = spec.r, spec.d, spec.t
    diss = crank_dissection_dft(spec, N, m, order) * N
    qq = pochhammer(1, 1, order)
    ql = series_dilate(pochhammer(1, 1, -(-order // ell)), ell).truncate(order)
    qr = series_dilate(pochhammer(1, 1, -(-order // r)), r).truncate(order)
    body = series_mul(diss, series_pow(qq, 2))
    body = series_mul(body, series_pow(ql, t * ell))
    body = series_mul(body, series_pow(qr, d * ell ** v - d))
    return body.with_denominator(24).shift(t * (ell * ell - 1) + d * r * ell ** v)


# -- parameters attached to a prime ----------------------------------------------------------------


@dataclass(frozen=True)
class TheoremParams:
    epsilon: int
    alpha: int
    beta: int
    v: int
    delta_ell: int


def admissible_prime(spec: CrankSpec, ell: int) -> bool:
    """ell > d r^2 and ((g^2 d - t r)/ell) is the same for every divisor g of r."""
    if not is_prime(ell) or ell == 2 or ell <= spec.d * spec.r ** 2:
        return False
    values = {jacobi_symbol(g * g * spec.d - spec.t * spec.r, ell) for g in divisors(spec.r)}
    return len(values) == 1


def smallest_admissible_v(spec: CrankSpec, ell: int, v_cap: int) -> int:
    modulus = 24 * spec.r
    for v in range(max(5, spec.t), v_cap + 1):
        if pow(ell, v, modulus) == modulus - 1:
            return v
    raise NoAdmissibleExponent(
        f"no v in [{max(5, spec.t)}, {v_cap}] with {ell}^v = -1 (mod {modulus})")


def theorem_params(spec: CrankSpec, ell: int, v_cap: int) -> TheoremParams:
    if ell < 5 or not is_prime(ell):
        raise ValueError(f"ell must be a prime >= 5, got {ell}")
    r, d, t = spec.r, spec.d, spec.t
    epsilon = jacobi_symbol(24 * (d * r - t), ell)
    if epsilon == 0:
        raise ValueError(f"{ell} divides 24(dr - t); epsilon would vanish")
    v = smallest_admissible_v(spec, ell, v_cap)
    num = t * (ell * ell - 1) + d * r * (ell ** v + 1)
    assert num % 24 == 0
    alpha = num // 24
    beta = next(b for b in range(ell) if jacobi_symbol(alpha + b, ell) in (0, -epsilon))
    return TheoremParams(epsilon, alpha, beta, v, (ell * ell - 1) // 24)
