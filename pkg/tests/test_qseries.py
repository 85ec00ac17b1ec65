from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crankforms.cyclotomic import CycInt, zeta
from crankforms.errors import LatticeError, NonUnitError, PrecisionError, RingMismatch
from crankforms.qseries import (
    EtaQuotient,
    QSeries,
    coincide_on_progression,
    eta_expansion,
    extract_progression,
    freshman_pow,
    pochhammer,
    series_dilate,
    series_div,
    series_inv,
    series_mul,
    series_pow,
)
from crankforms.rings import ZZ, CyclotomicRing, ModRing

from oracles import dilate, partition_numbers, pentagonal_signs, poly_mul, qpoch


def Z(coeffs, offset=0, D=1):
    return QSeries(coeffs, ZZ, offset, D)


int_series = st.integers(1, 25).flatmap(
    lambda n: st.lists(st.integers(-30, 30), min_size=n, max_size=n)).map(Z)


def unit_series(ring):
    return st.integers(1, 20).flatmap(
        lambda n: st.lists(st.integers(-20, 20), min_size=n - 1, max_size=n - 1)
    ).map(lambda cs: QSeries([1] + cs, ring))


# -- multiplication and truncation ---------------------------------------------------------


def test_mul_examples():
    assert series_mul(Z([1, 1, 0, 0]), Z([1, -1, 0, 0])) == Z([1, 0, -1, 0])
    f = pochhammer(1, 1, 20)
    assert series_mul(f, series_inv(f)) == QSeries.one(20)
    assert pochhammer(1, 1, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_product_order_is_minimum_window():
    f = Z([1, 2, 3, 4, 5])
    g = Z([1, 1, 1], offset=2)
    h = f * g
    assert h.offset == 2
    assert h.precision == 5  # g is known below q^5, f times q^2 below q^7
    assert h.coeffs == (1, 3, 6)


def test_unknown_coefficients_are_not_zero():
    f = Z([1, 2, 3])
    with pytest.raises(PrecisionError):
        f[3]
    assert f[-1] == 0


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Z([1]) + QSeries([1], ModRing(5))


def test_denominators_reconcile():
    f = Z([1, 1], offset=1, D=2)     # q^(1/2) + q
    g = Z([1, 1], offset=1, D=3)     # q^(1/3) + q^(2/3)
    h = f * g
    assert h.denominator == 6
    assert h.coefficient(Fraction(5, 6)) == 1
    assert h.valuation() == Fraction(5, 6)


@settings(max_examples=50, deadline=None)
@given(int_series, int_series, int_series)
def test_mul_associative_commutative_integers(f, g, h):
    assert series_mul(f, g) == series_mul(g, f)
    assert series_mul(series_mul(f, g), h).agrees(series_mul(f, series_mul(g, h)))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 124), min_size=3, max_size=15),
       st.lists(st.integers(0, 124), min_size=3, max_size=15),
       st.lists(st.integers(0, 124), min_size=3, max_size=15))
def test_mul_associative_commutative_modular(a, b, c):
    R = ModRing(125)
    f, g, h = (QSeries(x, R) for x in (a, b, c))
    assert f * g == g * f
    assert ((f * g) * h).agrees(f * (g * h))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8),
       st.lists(st.integers(-5, 5), min_size=8, max_size=8),
       st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_mul_associative_commutative_cyclotomic(a, b, c):
    R = CyclotomicRing(10)
    mk = lambda cs: QSeries([CycInt(10, [x, -x, 1, 0]) + zeta(10, x) for x in cs], R)
    f, g, h = mk(a), mk(b), mk(c)
    assert f * g == g * f
    assert ((f * g) * h).agrees(f * (g * h))


@settings(max_examples=50, deadline=None)
@given(int_series, int_series)
def test_mul_matches_naive(f, g):
    n = min(f.order, g.order)
    assert list(series_mul(f, g).coeffs) == poly_mul(list(f.coeffs), list(g.coeffs), n)


# -- inverse and division -----------------------------------------------------------------


def test_inverse_examples():
    geo = series_inv(Z([1, -1, 0, 0, 0, 0]))
    assert geo.coeffs == (1,) * 6
    assert series_inv(pochhammer(1, 1, 8)).coeffs == (1, 1, 2, 3, 5, 7, 11, 15)
    with pytest.raises(NonUnitError):
        series_inv(Z([2, 1]))


def test_inverse_negates_offset():
    f = Z([1, 3, 5], offset=4)
    g = series_inv(f)
    assert g.offset == -4
    assert series_mul(f, g) == QSeries.one(3)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([ZZ, ModRing(49), ModRing(25)]).flatmap(unit_series))
def test_inverse_contract(f):
    assert series_mul(f, series_inv(f)) == QSeries.one(f.order, f.ring)


def test_cyclotomic_unit_inverse():
    R = CyclotomicRing(5)
    f = QSeries([zeta(5), 1 + zeta(5, 2), 3, 0, -zeta(5, 3)], R)
    assert series_mul(f, series_inv(f)) == QSeries.one(5, R)


def test_exact_division_nonunit_leading():
    R = CyclotomicRing(10)
    g = QSeries([1 - zeta(10, 2), zeta(10), 2, 0, 1], R)
    f = QSeries([3, -zeta(10, 3), 1, 1, 0], R)
    assert series_div(series_mul(f, g), g) == f


# -- dilation and products ----------------------------------------------------------------------


def test_dilate_examples():
    assert series_dilate(Z([1, 1]), 3) == Z([1, 0, 0, 1, 0, 0])
    assert series_dilate(pochhammer(1, 1, 10), 5) == pochhammer(5, 5, 50)


@settings(max_examples=40, deadline=None)
@given(int_series, int_series, st.integers(1, 6))
def test_dilate_is_homomorphism(f, g, k):
    assert series_dilate(series_mul(f, g), k) == series_mul(series_dilate(f, k), series_dilate(g, k))
    assert series_dilate(f + g, k).agrees(series_dilate(f, k) + series_dilate(g, k))


def test_pochhammer_examples():
    assert pochhammer(1, 1, 6).coeffs == (1, -1, -1, 0, 0, 1)
    assert pochhammer(2, 2, 5).coeffs == (1, 0, -1, 0, -1)
    assert pochhammer(3, 3, 2).coeffs == (1, 0)


@pytest.mark.parametrize("order", [1, 2, 7, 40, 120])
def test_pentagonal_pattern(order):
    coeffs = pochhammer(1, 1, order).coeffs
    assert list(coeffs) == qpoch(1, 1, order)
    assert list(coeffs) == pentagonal_signs(order)


@pytest.mark.parametrize("a, b", [(1, 2), (2, 3), (5, 5), (3, 7)])
def test_pochhammer_matches_naive(a, b):
    assert list(pochhammer(a, b, 60).coeffs) == qpoch(a, b, 60)


# -- eta quotients --------------------------------------------------------------------------


def test_eta_expansion_examples():
    eta = eta_expansion(EtaQuotient.parse("1:1"), 10)
    assert eta.denominator == 24 and eta.offset == 1
    assert eta[1] == 1 and eta[25] == -1 and eta[49] == -1 and eta[121] == 1
    f = eta_expansion(EtaQuotient.parse("5:5,1:-1"), 10)
    assert f.offset == 24 and f[24] == 1
    E1 = eta_expansion(EtaQuotient.parse("1:5,5:-1"), 10)
    assert E1.offset == 0 and E1[0] == 1


def test_eta_parse_and_level():
    e = EtaQuotient.parse("5:5,1:-1")
    assert e.factors == ((1, -1), (5, 5))
    assert e.level == 5 and e.offset24 == 24 and e.weight == 2
    with pytest.raises(ValueError):
        EtaQuotient.parse("5:5,5:1")
    with pytest.raises(ValueError):
        EtaQuotient.parse("3:1", level=4)


def test_eta_quotient_partition_gf():
    f = eta_expansion(EtaQuotient.parse("1:-1"), 30).reduce_denominator()
    assert f.denominator == 24
    g = f.shift(1).reduce_denominator()
    assert g.denominator == 1
    assert list(g.coeffs) == list(partition_numbers(30))


# -- progressions -------------------------------------------------------------------------


def test_extract_examples():
    assert extract_progression(Z([1, 1, 1, 1]), 2, 0) == Z([1, 0, 1, 0])
    pgf = Z(list(partition_numbers(20)))
    sub = extract_progression(pgf, 5, 4)
    assert (sub[4], sub[9], sub[14]) == (5, 30, 135)
    assert sub[5] == 0


@settings(max_examples=50, deadline=None)
@given(int_series, st.integers(1, 9), st.integers(-5, 5))
def test_extract_reassembles(f, M, shift):
    f = f.shift(shift)
    total = extract_progression(f, M, 0)
    for c in range(1, M):
        total = total + extract_progression(f, M, c)
    assert total == f


def test_extract_lattice_check():
    f = Z([1, 2, 3], offset=1, D=24)
    with pytest.raises(LatticeError):
        extract_progression(f, 5, 0)
    assert extract_progression(f, 48, 1)[1] == 1


# -- freshman's dream and agreement on progressions under products -----------------------


def test_freshman_examples():
    R5 = ModRing(5)
    assert freshman_pow(QSeries([1, -1] + [0] * 8, R5), 5, 1) == QSeries([1, 0, 0, 0, 0, -1, 0, 0, 0, 0], R5)
    R25 = ModRing(25)
    lhs = freshman_pow(QSeries([1, -1] + [0] * 28, R25), 5, 2)
    rhs = series_pow(QSeries([1, 0, 0, 0, 0, -1] + [0] * 24, R25), 5)
    assert lhs == rhs
    assert freshman_pow(QSeries.one(7, R25), 5, 2) == QSeries.one(7, R25)
    with pytest.raises(RingMismatch):
        freshman_pow(QSeries([1, 1], ModRing(5)), 5, 2)


@pytest.mark.parametrize("ell, v", [(5, 1), (5, 2), (5, 3), (7, 1), (7, 2), (7, 3)])
@settings(max_examples=8, deadline=None)
@given(data=st.data())
def test_freshman_congruence(ell, v, data):
    M = ell ** v
    n = data.draw(st.integers(2, 12))
    cs = data.draw(st.lists(st.integers(0, M - 1), min_size=n, max_size=n))
    R = ModRing(M)
    f = QSeries(cs, R)
    lhs = freshman_pow(f, ell, v)
    rhs = series_pow(series_dilate(f, ell), ell ** (v - 1))
    assert lhs.agrees(rhs)


def test_coincide_examples():
    f = Z([1, 2, 3, 4, 5, 6])
    assert coincide_on_progression(f, f, 5, 4, 25)
    g = Z([1, 2, 3, 9, 5, 6])
    assert coincide_on_progression(f, g, 5, 4, 25)
    assert not coincide_on_progression(f, g, 5, 3, 25)
    assert coincide_on_progression(f, Z([1, 2, 3, 4 + 25, 5, 6]), 5, 4, 25)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_product_stability_on_progression(data):
    ell = data.draw(st.sampled_from([5, 7]))
    v = data.draw(st.integers(1, 3))
    M = ell ** v
    c = data.draw(st.integers(0, ell - 1))
    n = 40
    f = data.draw(st.lists(st.integers(-99, 99), min_size=n, max_size=n))
    noise = data.draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n))
    # g agrees with f mod M on exponents = c (mod ell) and is arbitrary elsewhere
    g = [a + (M * e if i % ell == c else e) for i, (a, e) in enumerate(zip(f, noise))]
    a = data.draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n))
    tail = data.draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n))
    h = [x + M * y for x, y in zip(dilate(a, ell, n), tail)]
    F, G, H = Z(f), Z(g), Z(h)
    assert coincide_on_progression(F, G, ell, c, M)
    assert coincide_on_progression(F * H, G * H, ell, c, M)
