"""Machine (JSON) and human-readable renderings of series, tables and reports.

Series file format::

    {"ring": "BigInt" | "ModInt(M)" | "CycInt(N)", "denominator": D,
     "offset": e0, "coeffs": [...], "order": T}

Integers are written as decimal strings, cyclotomic integers as
{"conductor": N, "coeffs": [...]}.  Series with Laurent-polynomial
coefficients are written one row per line as {"n": n, "z_coeffs": {m: c}}.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .cranks import CrankSpec, crank_table
from .harness import VerificationReport
from .laurent import LAURENT, LaurentPoly
from .qseries import QSeries
from .rings import ring_from_tag


@dataclass(frozen=True)
class CrankTable:
    spec: CrankSpec
    rows: tuple

    @classmethod
    def compute(cls, spec: CrankSpec, order: int) -> "CrankTable":
        return cls(spec, tuple(crank_table(spec, order)))


def _dumps(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode()


def series_to_json(f: QSeries) -> dict:
    return {
        "ring": f.ring.tag,
        "denominator": f.denominator,
        "offset": f.offset,
        "coeffs": [f.ring.encode(c) for c in f.coeffs],
        "order": f.order,
    }


def series_from_json(obj: dict) -> QSeries:
    ring = ring_from_tag(obj["ring"])
    coeffs = [ring.decode(c) for c in obj["coeffs"]]
    if len(coeffs) != obj["order"]:
        raise ValueError(f"order {obj['order']} does not match {len(coeffs)} coefficients")
    return QSeries(coeffs, ring, obj["offset"], obj["denominator"])


def laurent_rows(f: QSeries) -> list[dict]:
    return [{"n": f.offset + i, "z_coeffs": {str(m): str(c) for m, c in sorted(p.terms.items())}}
            for i, p in enumerate(f.coeffs)]


def _laurent_from_rows(rows: list[dict]) -> QSeries:
    offset = rows[0]["n"] if rows else 0
    coeffs = [LaurentPoly({int(m): int(c) for m, c in row["z_coeffs"].items()}) for row in rows]
    return QSeries(coeffs, LAURENT, offset, 1)


def load_series(data) -> QSeries:
    """Inverse of ``emit(series, "machine")``."""
    if isinstance(data, bytes):
        data = data.decode()
    text = data.strip()
    first = json.loads(text.splitlines()[0]) if text else {}
    if "z_coeffs" in first:
        return _laurent_from_rows([json.loads(line) for line in text.splitlines() if line])
    return series_from_json(json.loads(text))


def load_report(data) -> VerificationReport:
    if isinstance(data, bytes):
        data = data.decode()
    return VerificationReport.from_dict(json.loads(data))


def _series_table(f: QSeries) -> str:
    lines = [f"# ring {f.ring.tag}, exponents in 1/{f.denominator}, "
             f"known below q^({f.precision}/{f.denominator})"]
    for e, c in f.terms():
        lines.append(f"q^({e}/{f.denominator})\t{c!r}" if f.denominator != 1 else f"q^{e}\t{c!r}")
    return "\n".join(lines) + "\n"


def _report_table(r: VerificationReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
    status = "PASS" if r.passed else r.outcome.upper()
    line = f"[{status}] {r.label} | {params} | checked {r.n_checked}"
    if r.partial:
        line += " (partial)"
    if r.counterexample:
        line += f" | counterexample {json.dumps(r.counterexample, sort_keys=True)}"
    if r.message:
        line += f" | {r.message}"
    return line


def _crank_csv(table: CrankTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "m", "count"])
    for n, row in enumerate(table.rows):
        for m in sorted(row):
            writer.writerow([n, m, row[m]])
    return buf.getvalue()


def emit(obj, format: str = "machine") -> bytes:
    """Serialise a series, crank table, report or list of reports."""
    if format not in ("machine", "table"):
        raise ValueError(f"format must be 'machine' or 'table', got {format!r}")
    machine = format == "machine"
    if isinstance(obj, QSeries):
        if obj.ring == LAURENT:
            if machine:
                return b"".join(_dumps(row) for row in laurent_rows(obj))
            return "".join(f"q^{row['n']}\t{row['z_coeffs']}\n"
                           for row in laurent_rows(obj)).encode()
        return _dumps(series_to_json(obj)) if machine else _series_table(obj).encode()
    if isinstance(obj, CrankTable):
        if machine:
            return b"".join(_dumps({"n": n, "z_coeffs": {str(m): c for m, c in sorted(row.items())}})
                            for n, row in enumerate(obj.rows))
        return _crank_csv(obj).encode()
    if isinstance(obj, VerificationReport):
        return _dumps(obj.to_dict()) if machine else (_report_table(obj) + "\n").encode()
    if isinstance(obj, (list, tuple)) and all(isinstance(r, VerificationReport) for r in obj):
        if machine:
            return b"".join(_dumps(r.to_dict()) for r in obj)
        passed = sum(r.passed for r in obj)
        lines = [_report_table(r) for r in obj]
        lines.append(f"summary: {passed}/{len(obj)} passed")
        return ("\n".join(lines) + "\n").encode()
    if isinstance(obj, dict):
        return _dumps(obj)
    raise TypeError(f"cannot emit {type(obj).__name__}")
