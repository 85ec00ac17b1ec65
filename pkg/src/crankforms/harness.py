"""Checking and searching for congruences of crank-type dissections.

A claim says that on the progression n = B (mod A) the residue-class counts
M_{r,d,t}(m, ell^j, n) are either all divisible by ell^tau ("congruence")
or all equal ("equidistribution").  Claims are checked exhaustively up to a
bound; a failure records the first counterexample so it can be replayed.
"""

from __future__ import annotations

import json
import platform
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .cranks import CrankSpec, _crank_rows, crank_dissection_dft, crank_table, dissect_laurent, k_crank_spec
from .errors import CrankformsError
from .partitions import brute_counts

MODES = ("congruence", "equidistribution")

# Largest n_max verify_claim will scan; beyond it the report is marked partial.
DEFAULT_BUDGET = 300


def fingerprint() -> str:
    return f"crankforms {__version__}; python {platform.python_version()}"


@dataclass(frozen=True)
class CongruenceClaim:
    spec: CrankSpec
    ell: int
    j: int
    tau: int
    A: int
    B: int
    mode: str = "congruence"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 0 <= self.B < self.A:
            raise ValueError(f"need 0 <= B < A, got A={self.A}, B={self.B}")
        if self.j < 0 or self.tau < 0:
            raise ValueError("j and tau must be nonnegative")

    @property
    def N(self) -> int:
        return self.ell ** self.j

    @property
    def modulus(self) -> int:
        return self.ell ** self.tau

    def key(self) -> dict:
        return {"r": self.spec.r, "d": self.spec.d, "t": self.spec.t, "ell": self.ell,
                "j": self.j, "tau": self.tau, "A": self.A, "B": self.B, "mode": self.mode}

    @classmethod
    def from_key(cls, key: dict) -> "CongruenceClaim":
        return cls(CrankSpec(key["r"], key["d"], key["t"]), key["ell"], key["j"], key["tau"],
                   key["A"], key["B"], key["mode"])

    def describe(self) -> str:
        lhs = f"M{self.spec}(m, {self.ell}^{self.j}, {self.A}n+{self.B})"
        if self.mode == "congruence":
            return f"{lhs} = 0 (mod {self.ell}^{self.tau})"
        return f"{lhs} equal for all m"


@dataclass
class VerificationReport:
    label: str
    params: dict
    outcome: str  # "verified-up-to-bound", "refuted" or "error"
    n_checked: int = 0
    checked: tuple = ()
    counterexample: dict | None = None
    partial: bool = False
    message: str = ""
    elapsed: float = field(default=0.0, compare=False)
    toolchain: str = field(default_factory=fingerprint)

    @property
    def passed(self) -> bool:
        return self.outcome == "verified-up-to-bound"

    def to_dict(self, timing: bool = False) -> dict:
        out = asdict(self)
        out["checked"] = list(self.checked)
        if not timing:
            del out["elapsed"]
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> "VerificationReport":
        obj = dict(obj)
        obj["checked"] = tuple(obj.get("checked", ()))
        return cls(**obj)


def class_counts(spec: CrankSpec, N: int, n: int, rows=None) -> list[int]:
    """[M_{r,d,t}(m, N, n) for m in 0..N-1] from the Laurent table."""
    if rows is None:
        rows = _crank_rows(spec, n + 1)
    w = len(rows)
    counts = [0] * N
    for i, x in enumerate(rows[n]):
        if x:
            counts[(i - w) % N] += x
    return counts


def _failure(claim: CongruenceClaim, n: int, counts: list[int]) -> dict | None:
    if claim.mode == "congruence":
        for m, c in enumerate(counts):
            if c % claim.modulus:
                return {"n": n, "m": m, "value": c}
        return None
    for m, c in enumerate(counts):
        if c != counts[0]:
            return {"n": n, "m": m, "value": c, "reference": counts[0]}
    return None


def check_index(claim: CongruenceClaim, n: int) -> dict | None:
    """Counterexample at the single index n, or None if the claim holds there."""
    return _failure(claim, n, class_counts(claim.spec, claim.N, n))


def verify_claim(claim: CongruenceClaim, n_max: int, budget: int = DEFAULT_BUDGET,
                 ledger: "ClaimLedger | None" = None) -> VerificationReport:
    if ledger is not None:
        cached = ledger.lookup(claim, n_max)
        if cached is not None:
            return cached
    start = time.perf_counter()
    partial = n_max > budget
    bound = min(n_max, budget)
    rows = _crank_rows(claim.spec, bound + 1) if bound >= 0 else ()
    checked = []
    counterexample = None
    for n in range(claim.B, bound + 1, claim.A):
        checked.append(n)
        counterexample = _failure(claim, n, class_counts(claim.spec, claim.N, n, rows))
        if counterexample is not None:
            break
    report = VerificationReport(
        label=claim.describe(),
        params={**claim.key(), "n_max": n_max},
        outcome="refuted" if counterexample else "verified-up-to-bound",
        n_checked=len(checked),
        checked=tuple(checked),
        counterexample=counterexample,
        partial=partial,
        message=f"scan stopped at the budget n = {budget}" if partial else "",
        elapsed=time.perf_counter() - start,
    )
    if ledger is not None:
        ledger.record(claim, n_max, report)
    return report


def search(spec: CrankSpec, ell: int, j: int, tau: int, A_max: int, n_max: int,
           mode: str = "congruence", min_tested: int = 5) -> list[CongruenceClaim]:
    """Every progression (A, B) with A <= A_max whose claim survives to n_max.

    Progressions with fewer than ``min_tested`` members below n_max are skipped.
    """
    survivors = []
    for A in range(1, A_max + 1):
        for B in range(A):
            if B > n_max or (n_max - B) // A + 1 < min_tested:
                continue
            claim = CongruenceClaim(spec, ell, j, tau, A, B, mode)
            if verify_claim(claim, n_max, budget=max(n_max, DEFAULT_BUDGET)).passed:
                survivors.append(claim)
    return survivors


class ClaimLedger:
    """Append-only newline-delimited JSON record of finished verifications."""

    def __init__(self, path):
        self.path = Path(path)
        self._index: dict[str, dict] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    entry = json.loads(line)
                    self._index[entry["key"]] = entry["report"]

    @staticmethod
    def _key(claim: CongruenceClaim, n_max: int) -> str:
        return json.dumps({**claim.key(), "n_max": n_max}, sort_keys=True)

    def lookup(self, claim: CongruenceClaim, n_max: int) -> VerificationReport | None:
        entry = self._index.get(self._key(claim, n_max))
        return None if entry is None else VerificationReport.from_dict(entry)

    def record(self, claim: CongruenceClaim, n_max: int, report: VerificationReport):
        key = self._key(claim, n_max)
        entry = {"key": key, "report": report.to_dict()}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")
        self._index[key] = entry["report"]

    def __len__(self):
        return len(self._index)


# -- regression suite ---------------------------------------------------------------------


PINNED_CLAIMS = (
    (CongruenceClaim(CrankSpec(1, 2, 1), 5, 1, 1, 5, 4, "equidistribution"), 99),
    (CongruenceClaim(CrankSpec(1, 2, 1), 7, 1, 1, 7, 5, "equidistribution"), 99),
    (CongruenceClaim(CrankSpec(1, 2, 1), 11, 1, 1, 11, 6, "equidistribution"), 99),
)


def _oracle_report(label: str, statistic: str, spec: CrankSpec, ns, k=None) -> VerificationReport:
    """Compare GF coefficients with brute-force tallies for every n in ns."""
    start = time.perf_counter()
    ns = list(ns)
    table = crank_table(spec, max(ns) + 1)
    checked = []
    counterexample = None
    for n in ns:
        checked.append(n)
        oracle = brute_counts(statistic, n, k=k)
        if table[n] != oracle:
            counterexample = {"n": n, "gf": {str(m): c for m, c in table[n].items()},
                              "oracle": {str(m): c for m, c in oracle.items()}}
            break
    return VerificationReport(
        label=label,
        params={"r": spec.r, "d": spec.d, "t": spec.t, "statistic": statistic, "k": k,
                "n_range": [ns[0], ns[-1]]},
        outcome="refuted" if counterexample else "verified-up-to-bound",
        n_checked=len(checked), checked=tuple(checked), counterexample=counterexample,
        elapsed=time.perf_counter() - start)


def _crank_anomaly_report() -> VerificationReport:
    """At n = 1 the GF has {1: 1, 0: -1, -1: 1} while the partition (1) has crank -1."""
    gf = crank_table(CrankSpec(1, 2, 1), 2)[1]
    oracle = brute_counts("crank", 1)
    expected_gf = {-1: 1, 0: -1, 1: 1}
    ok = gf == expected_gf and oracle == {-1: 1}
    return VerificationReport(
        label="crank n=1: GF {1:1, 0:-1, -1:1} vs crank((1)) = -1",
        params={"r": 1, "d": 2, "t": 1, "n": 1},
        outcome="verified-up-to-bound" if ok else "refuted",
        n_checked=1, checked=(1,),
        counterexample=None if ok else {"gf": {str(m): c for m, c in gf.items()},
                                        "oracle": {str(m): c for m, c in oracle.items()}})


def _dual_route_report(spec: CrankSpec, N: int, order: int) -> VerificationReport:
    start = time.perf_counter()
    counterexample = None
    checked = []
    for m in range(N):
        checked.append(m)
        a = crank_dissection_dft(spec, N, m, order)
        b = dissect_laurent(spec, N, m, order)
        if a != b:
            n = next(n for n in range(order) if a[n] != b[n])
            counterexample = {"m": m, "n": n, "dft": a[n], "laurent": b[n]}
            break
    return VerificationReport(
        label=f"filter vs Laurent dissection {spec} mod {N}",
        params={"r": spec.r, "d": spec.d, "t": spec.t, "N": N, "order": order},
        outcome="refuted" if counterexample else "verified-up-to-bound",
        n_checked=len(checked), checked=tuple(checked), counterexample=counterexample,
        elapsed=time.perf_counter() - start)


def _guarded(label: str, fn, *args) -> VerificationReport:
    try:
        return fn(*args)
    except CrankformsError as exc:
        return VerificationReport(label=label, params={}, outcome="error",
                                  message=f"{type(exc).__name__}: {exc}")


def regression_suite() -> list[VerificationReport]:
    reports = []
    for claim, n_max in PINNED_CLAIMS:
        reports.append(_guarded(claim.describe(), verify_claim, claim, n_max))
    reports.append(_guarded("crank oracle", _oracle_report,
                            "crank GF vs brute force, 2 <= n <= 30", "crank",
                            CrankSpec(1, 2, 1), range(2, 31)))
    reports.append(_guarded("crank anomaly", _crank_anomaly_report))
    reports.append(_guarded("birank oracle", _oracle_report,
                            "birank GF vs brute force, 0 <= n <= 20", "birank",
                            CrankSpec(1, 1, 1), range(0, 21)))
    reports.append(_guarded("3-crank oracle", _oracle_report,
                            "3-crank GF vs brute force, 0 <= n <= 14", "k_crank",
                            k_crank_spec(3), range(0, 15), 3))
    for spec in (CrankSpec(1, 2, 1), CrankSpec(1, 1, 1), CrankSpec(2, 1, 1)):
        for N in (3, 5, 7):
            label = f"filter vs Laurent dissection {spec} mod {N}"
            reports.append(_guarded(label, _dual_route_report, spec, N, 40))
    return reports


def suite_status(reports) -> int:
    """Exit status for a list of reports: 0 pass, 1 refuted, 3 internal inconsistency."""
    if any(r.outcome == "error" for r in reports):
        return 3
    if any(r.outcome == "refuted" for r in reports):
        return 1
    return 0
