import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crankforms.cranks import CRANK, crank_series_laurent
from crankforms.cyclotomic import CycInt
from crankforms.harness import CongruenceClaim, verify_claim
from crankforms.qseries import EtaQuotient, QSeries, eta_expansion, pochhammer
from crankforms.rings import ZZ, CyclotomicRing, ModRing
from crankforms.serialize import CrankTable, emit, load_report, load_series

GOLDEN = Path(__file__).parent / "golden"


def series_strategy():
    ints = st.integers(-10 ** 25, 10 ** 25)
    zz = st.lists(ints, min_size=0, max_size=12).map(lambda c: (ZZ, c))
    mod = st.lists(st.integers(0, 342), min_size=0, max_size=12).map(lambda c: (ModRing(343), c))
    cyc = st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), max_size=8).map(
        lambda cs: (CyclotomicRing(10), [CycInt(10, c) for c in cs]))
    return st.tuples(st.one_of(zz, mod, cyc), st.integers(-30, 30), st.sampled_from([1, 2, 24])
                     ).map(lambda t: QSeries(t[0][1], t[0][0], t[1], t[2]))


@settings(max_examples=80, deadline=None)
@given(series_strategy())
def test_series_roundtrip(f):
    data = emit(f, "machine")
    assert data.endswith(b"\n")
    assert load_series(data) == f


def test_series_format_fields():
    obj = json.loads(emit(eta_expansion(EtaQuotient.parse("5:5,1:-1"), 3), "machine"))
    assert set(obj) == {"ring", "denominator", "offset", "coeffs", "order"}
    assert obj["denominator"] == 24 and obj["offset"] == 24 and obj["ring"] == "BigInt"
    assert all(isinstance(c, str) for c in obj["coeffs"])


def test_laurent_roundtrip():
    f = crank_series_laurent(CRANK, 8)
    data = emit(f, "machine")
    rows = [json.loads(line) for line in data.decode().splitlines()]
    assert rows[1] == {"n": 1, "z_coeffs": {"-1": "1", "0": "-1", "1": "1"}}
    assert load_series(data) == f


def test_golden_series():
    text = (GOLDEN / "qq_order16.json").read_bytes()
    assert load_series(text) == pochhammer(1, 1, 16)
    assert emit(pochhammer(1, 1, 16), "machine") == text


def test_golden_crank_table_csv():
    assert emit(CrankTable.compute(CRANK, 11), "table") == (GOLDEN / "crank_table_n10.csv").read_bytes()


def test_report_roundtrip_and_table():
    claim = CongruenceClaim(CRANK, 5, 1, 1, 5, 1, "equidistribution")
    report = verify_claim(claim, 29)
    again = load_report(emit(report, "machine"))
    assert again == report
    line = emit(report, "table").decode()
    for token in ("REFUTED", "A=5", "B=1", "ell=5", "n_max=29", "mode=equidistribution"):
        assert token in line


def test_series_table_is_readable():
    text = emit(pochhammer(1, 1, 6), "table").decode()
    assert "q^1\t-1" in text and "q^5\t1" in text


def test_emit_rejects():
    with pytest.raises(TypeError):
        emit(object())
    with pytest.raises(ValueError):
        emit(pochhammer(1, 1, 3), "xml")


def test_load_series_order_mismatch():
    with pytest.raises(ValueError):
        load_series('{"ring":"BigInt","denominator":1,"offset":0,"coeffs":["1"],"order":2}')
