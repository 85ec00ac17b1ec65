import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import crankforms.cranks as cranks_mod
from crankforms.cranks import (
    BIRANK,
    CRANK,
    CrankSpec,
    column_sum_series,
    crank_dissection_dft,
    crank_series_laurent,
    crank_table,
    dissect_laurent,
    k_crank_spec,
    klein_expansion,
    klein_series,
    klein_shift_factor,
    omega,
    omega_over_klein,
)
from crankforms.cyclotomic import zeta
from crankforms.errors import IntegralityError, OracleBoundExceeded
from crankforms.laurent import LaurentPoly
from crankforms.partitions import (
    ColoredPartition,
    Partition,
    birank,
    brute_counts,
    colored_partitions,
    crank,
    k_crank,
)
from crankforms.qseries import QSeries, pochhammer, series_mul
from crankforms.rings import CyclotomicRing

from oracles import crank_of, dissection_numeric, partition_numbers, partitions, zfree_at_one


# -- statistics ---------------------------------------------------------------------------


def test_crank_examples():
    assert crank(Partition((4,))) == 4
    assert crank(Partition((2, 1, 1))) == -2
    assert crank(Partition((3, 1))) == 0
    with pytest.raises(ValueError):
        crank(Partition(()))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))


def test_birank_examples():
    assert birank(ColoredPartition(((1,), ()))) == 1
    assert birank(ColoredPartition(((), (2, 1)))) == -2
    assert birank(ColoredPartition(((3, 3), (1, 1)))) == 0
    with pytest.raises(ValueError):
        birank(ColoredPartition(((1,), (), ())))


def test_k_crank_examples():
    assert k_crank(ColoredPartition(((2, 1), (1,), ()))) == 1
    assert k_crank(ColoredPartition(((), (), ()))) == 0
    assert k_crank(ColoredPartition(((1, 1, 1), (2,)))) == 2
    with pytest.raises(ValueError):
        ColoredPartition(((1,),))


def test_brute_counts_examples():
    assert brute_counts("crank", 4) == {4: 1, 2: 1, 0: 1, -2: 1, -4: 1}
    assert brute_counts("birank", 1) == {1: 1, -1: 1}
    assert brute_counts("crank", 0) == {0: 1}
    with pytest.raises(OracleBoundExceeded):
        brute_counts("crank", 31)
    with pytest.raises(OracleBoundExceeded):
        brute_counts("k_crank", 21, k=3)
    assert brute_counts("crank", 31, bound=31)[31] == 1


@pytest.mark.parametrize("n", range(0, 16))
def test_brute_totals(n):
    p = partition_numbers(20)
    assert sum(brute_counts("crank", max(n, 1)).values()) == p[max(n, 1)]
    assert sum(brute_counts("birank", n).values()) == sum(p[i] * p[n - i] for i in range(n + 1))


def test_colored_partition_count():
    p = partition_numbers(10)
    for n in range(8):
        three = sum(p[a] * p[b] * p[n - a - b] for a in range(n + 1) for b in range(n - a + 1))
        assert sum(1 for _ in colored_partitions(n, 3)) == three


# -- the generating function ------------------------------------------------------------------


def test_laurent_low_rows():
    f = crank_series_laurent(CRANK, 4)
    assert f[0] == LaurentPoly({0: 1})
    assert f[1] == LaurentPoly({1: 1, 0: -1, -1: 1})
    assert f[2] == LaurentPoly({2: 1, -2: 1})
    for spec in (BIRANK, CrankSpec(2, 3, 1), CrankSpec(3, 1, 2)):
        assert crank_table(spec, 3)[0] == {0: 1}


@pytest.mark.parametrize("n", range(2, 31))
def test_crank_oracle(n):
    table = crank_table(CRANK, 31)
    tally = {}
    for p in partitions(n):
        c = crank_of(p)
        tally[c] = tally.get(c, 0) + 1
    assert table[n] == tally
    assert table[n] == brute_counts("crank", n)


def test_crank_anomaly_at_one():
    assert crank_table(CRANK, 2)[1] == {1: 1, 0: -1, -1: 1}
    assert brute_counts("crank", 1) == {-1: 1}


def test_birank_oracle():
    table = crank_table(BIRANK, 21)
    for n in range(21):
        assert table[n] == brute_counts("birank", n), n


@pytest.mark.parametrize("k", [3, 4])
def test_k_crank_oracle(k):
    spec = k_crank_spec(k)
    assert spec == CrankSpec(1, 1, k - 1)
    table = crank_table(spec, 15)
    for n in range(15):
        assert table[n] == brute_counts("k_crank", n, k=k), n


@pytest.mark.parametrize("k", [3, 4])
def test_k_crank_other_reading_disagrees(k):
    # (1, k-1, 1) has (q;q)^(k-2) on top and cannot count k-colored objects
    table = crank_table(CrankSpec(1, k - 1, 1), 6)
    assert any(table[n] != brute_counts("k_crank", n, k=k) for n in range(6))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.integers(1, 4))
def test_z_symmetry_and_support(r, d, t):
    table = crank_table(CrankSpec(r, d, t), 25)
    for n, row in enumerate(table):
        for m, c in row.items():
            assert row.get(-m) == c
            assert -n <= m <= n


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(1, 7))
def test_column_sums(r, d, t, N):
    spec = CrankSpec(r, d, t)
    order = 41
    expected = zfree_at_one((r, d, t), order)
    assert list(column_sum_series(spec, order).coeffs) == expected
    total = [0] * order
    for m in range(N):
        total = [a + b for a, b in zip(total, dissect_laurent(spec, N, m, order).coeffs)]
    assert total == expected


def test_dissect_modulus_one():
    spec = CrankSpec(2, 1, 1)
    assert list(dissect_laurent(spec, 1, 0, 30).coeffs) == zfree_at_one((2, 1, 1), 30)


# -- root-of-unity filter -----------------------------------------------------------------------


def test_dft_examples():
    for m in range(5):
        f = crank_dissection_dft(CRANK, 5, m, 10)
        assert f[4] == 1
        assert f[0] == (1 if m == 0 else 0)


def test_dft_birank_against_oracle():
    for m in range(5):
        f = crank_dissection_dft(BIRANK, 5, m, 13)
        for n in range(13):
            tally = brute_counts("birank", n)
            assert f[n] == sum(c for k, c in tally.items() if k % 5 == m)


@pytest.mark.parametrize("spec, N, order", [
    (CRANK, 5, 40), (CrankSpec(2, 1, 1), 3, 30), (BIRANK, 7, 30), (CrankSpec(1, 3, 2), 4, 25),
    (CrankSpec(3, 2, 1), 6, 25), (CRANK, 2, 30),
])
def test_dual_routes_agree(spec, N, order):
    for m in range(N):
        assert crank_dissection_dft(spec, N, m, order) == dissect_laurent(spec, N, m, order)


@pytest.mark.parametrize("spec, N", [((1, 2, 1), 5), ((2, 1, 1), 3), ((1, 1, 2), 7)])
def test_dft_against_floating_point(spec, N):
    for m in range(N):
        exact = crank_dissection_dft(CrankSpec(*spec), N, m, 20)
        assert list(exact.coeffs) == dissection_numeric(spec, N, m, 20)


def test_dft_rejects_trivial_modulus():
    with pytest.raises(ValueError):
        crank_dissection_dft(CRANK, 1, 0, 5)


def test_dft_integrality_guard(monkeypatch):
    monkeypatch.setattr(cranks_mod, "_dft_divisor", lambda N: N + 1)
    cranks_mod.crank_at_root.cache_clear()
    with pytest.raises(IntegralityError):
        crank_dissection_dft(CRANK, 5, 0, 10)


# -- Klein forms ----------------------------------------------------------------------------------


def test_omega_examples():
    assert omega(1, 2) == 2 * zeta(4)
    assert omega(1, 3) == zeta(6) - zeta(6, -1)
    for N in (3, 5, 7, 12):
        for s in range(1, N):
            # omega_s omega_{N-s} = -(2 - zeta^s - zeta^-s)
            expected = -(2 - zeta(2 * N, 2 * s) - zeta(2 * N, -2 * s))
            assert omega(s, N) * omega(N - s, N) == expected
    with pytest.raises(ValueError):
        omega(0, 5)


def test_klein_leading_coefficient():
    k = klein_expansion(1, 2, 5)
    assert k.offset == 0
    assert k[0] == -2 * zeta(4)
    with pytest.raises(ValueError):
        klein_expansion(5, 5, 10)


def _naive_cyc_product(N, s, order):
    """(zeta^s q; q)(zeta^-s q; q) by repeated binomial multiplication."""
    ring = CyclotomicRing(2 * N)
    coeffs = [ring.one] + [ring.zero] * (order - 1)
    for root in (zeta(2 * N, 2 * s), zeta(2 * N, -2 * s)):
        for n in range(1, order):
            coeffs = [c - (root * coeffs[i - n] if i >= n else 0) for i, c in enumerate(coeffs)]
    return QSeries(coeffs, ring)


@pytest.mark.parametrize("N", [5, 7])
def test_bridge_identity(N):
    order = 40
    ring = CyclotomicRing(2 * N)
    eta2 = series_mul(pochhammer(1, 1, order), pochhammer(1, 1, order)).change_ring(ring)
    for s in range(1, N):
        prod = _naive_cyc_product(N, s, order)
        lhs = omega_over_klein(s, N, order)
        # cross-multiplied so the right-hand side needs no series inverse
        assert series_mul(lhs, prod) == -eta2


@pytest.mark.parametrize("N", [5, 7])
def test_shift_law(N):
    order = 40
    for s in range(1, N):
        base = klein_series(0, s, N, order)
        for n1 in (-1, 0, 1):
            for n2 in (-1, 0, 1):
                shifted = klein_series(n1, s + n2 * N, N, order)
                scaled = base * klein_shift_factor(s, N, n1, n2)
                assert shifted.agrees(scaled), (s, n1, n2)
                assert shifted.precision >= order - 1


def test_klein_matches_direct_definition():
    N, s, order = 5, 2, 15
    ring = CyclotomicRing(10)
    # (zeta^s; q)(q / zeta^s; q) / (q;q)^2 times zeta_{2N}^-s, built from scratch
    coeffs = [ring.one] + [ring.zero] * (order - 1)
    coeffs = [c - zeta(10, 2 * s) * c for c in coeffs]
    for n in range(1, order):
        coeffs = [c - (zeta(10, 2 * s) * coeffs[i - n] if i >= n else 0) for i, c in enumerate(coeffs)]
        coeffs = [c - (zeta(10, -2 * s) * coeffs[i - n] if i >= n else 0) for i, c in enumerate(coeffs)]
    body = QSeries(coeffs, ring)
    inv_eta2 = QSeries(list(_inverse_eta_squared(order)), ring)
    expected = series_mul(body, inv_eta2) * zeta(10, -s)
    assert klein_expansion(s, N, order) == expected


def _inverse_eta_squared(order):
    p = partition_numbers(order)
    return [sum(p[i] * p[n - i] for i in range(n + 1)) for n in range(order)]
