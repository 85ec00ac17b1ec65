"""Command line entry point: ``python -m crankforms <subcommand>``.

Exit codes: 0 pass, 1 refuted, 2 usage error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cranks import (
    CrankSpec,
    crank_dissection_dft,
    crank_series_laurent,
    dissect_laurent,
    klein_expansion,
    omega_over_klein,
)
from .cyclotomic import CycInt
from .errors import CrankformsError, IntegralityError, NoAdmissibleExponent
from .harness import ClaimLedger, CongruenceClaim, regression_suite, search, suite_status, verify_claim
from .modforms import HeckeContext, QuadChar, admissible_prime, hecke_Tp2, theorem_params
from .qseries import EtaQuotient, QSeries, eta_expansion, pochhammer, series_inv, series_mul, series_pow
from .rings import CyclotomicRing
from .serialize import CrankTable, emit, load_series

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _out(data: bytes):
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _spec(args) -> CrankSpec:
    return CrankSpec(args.r, args.d, args.t)


def _add_spec(p):
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--t", type=int, default=1)


def _add_format(p):
    p.add_argument("--format", choices=("machine", "table"), default="table")


def cmd_expand(args) -> int:
    if args.eta:
        series = eta_expansion(EtaQuotient.parse(args.eta), args.order)
    elif args.pochhammer:
        a, b = (int(x) for x in args.pochhammer.split(","))
        series = pochhammer(a, b, args.order)
    else:
        series = crank_series_laurent(_spec(args), args.order)
    _out(emit(series, args.format))
    return EXIT_OK


def cmd_crank_table(args) -> int:
    _out(emit(CrankTable.compute(_spec(args), args.order), "table" if args.format == "table"
              else "machine"))
    return EXIT_OK


def cmd_dissect(args) -> int:
    spec = _spec(args)
    N = args.N if args.N else args.ell ** args.j
    status = EXIT_OK
    for m in range(N):
        b = dissect_laurent(spec, N, m, args.order)
        if N >= 2:
            a = crank_dissection_dft(spec, N, m, args.order)
            if a != b:
                sys.stderr.write(f"residue {m}: filter and Laurent routes disagree\n")
                status = EXIT_INTERNAL
        if args.format == "machine":
            _out(emit(b, "machine"))
        else:
            _out(f"m={m}: {list(b.coeffs)}\n".encode())
    return status


def cmd_hecke(args) -> int:
    series = load_series(Path(args.input).read_bytes())
    chi = QuadChar.parse(args.chi) if args.chi else None
    _out(emit(hecke_Tp2(series, HeckeContext(args.p, args.lam, chi)), args.format))
    return EXIT_OK


def cmd_klein(args) -> int:
    N, s = args.N, args.s
    k = klein_expansion(s, N, args.order)
    _out(emit(k, args.format))
    ring = CyclotomicRing(2 * N)
    # the other side, built without the Klein form: -(q;q)^2 / ((zeta^s q;q)(zeta^-s q;q))
    prod = QSeries.one(args.order, ring)
    for n in range(1, args.order):
        for root in (CycInt.zeta(2 * N, 2 * s), CycInt.zeta(2 * N, -2 * s)):
            factor = [ring.one] + [ring.zero] * (args.order - 1)
            factor[n] = -root
            prod = series_mul(prod, QSeries._raw(factor, ring, 0, 1))
    eta2 = series_pow(pochhammer(1, 1, args.order), 2).change_ring(ring)
    rhs = -series_mul(eta2, series_inv(prod))
    ok = omega_over_klein(s, N, args.order) == rhs
    sys.stderr.write(f"bridge identity omega_s/k = -(q;q)^2/(...): {'holds' if ok else 'FAILS'}\n")
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_params(args) -> int:
    spec = _spec(args)
    lines = [f"spec {spec}, ell={args.ell}", f"admissible_prime: {admissible_prime(spec, args.ell)}"]
    try:
        p = theorem_params(spec, args.ell, args.v_cap)
        lines.append(f"v={p.v} epsilon={p.epsilon} alpha={p.alpha} beta={p.beta} "
                     f"delta_ell={p.delta_ell}")
    except NoAdmissibleExponent as exc:
        lines.append(f"no admissible v: {exc}")
    _out(("\n".join(lines) + "\n").encode())
    return EXIT_OK


def _claim(args) -> CongruenceClaim:
    return CongruenceClaim(_spec(args), args.ell, args.j, args.tau, args.A, args.B, args.mode)


def cmd_verify(args) -> int:
    ledger = ClaimLedger(args.ledger) if args.ledger else None
    report = verify_claim(_claim(args), args.n_max, ledger=ledger)
    _out(emit(report, args.format))
    return EXIT_OK if report.passed else EXIT_REFUTED


def cmd_search(args) -> int:
    claims = search(_spec(args), args.ell, args.j, args.tau, args.A_max, args.n_max,
                    args.mode, args.min_tested)
    for c in claims:
        _out(f"{c.A} {c.B}\t{c.describe()}\n".encode())
    return EXIT_OK


def cmd_regress(args) -> int:
    reports = regression_suite()
    _out(emit(reports, args.format))
    return suite_status(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crankforms", description="Exact q-series tools for crank-type generating functions.",
        epilog="exit status: 0 pass, 1 refuted, 2 usage error, 3 internal inconsistency")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="eta quotient, Pochhammer or crank series to a given order")
    _add_spec(p)
    p.add_argument("--eta", help='eta quotient as "delta:exponent,...", e.g. "5:5,1:-1"')
    p.add_argument("--pochhammer", help='"a,b" for prod (1 - q^(a+bn))')
    p.add_argument("--order", type=int, default=20)
    _add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("crank-table", help="CSV of M_{r,d,t}(m, n)")
    _add_spec(p)
    p.add_argument("--order", type=int, default=11)
    _add_format(p)
    p.set_defaults(func=cmd_crank_table)

    p = sub.add_parser("dissect", help="per-residue series, computed two ways")
    _add_spec(p)
    p.add_argument("--ell", type=int, default=5)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--N", type=int, default=0, help="modulus (default ell^j)")
    p.add_argument("--order", type=int, default=20)
    _add_format(p)
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("hecke", help="apply T(p^2) to a series file")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lam", type=int, required=True)
    p.add_argument("--chi", help='"top:5" or "bottom:-4"')
    _add_format(p)
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("klein", help="Klein form expansion and bridge check")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--order", type=int, default=20)
    _add_format(p)
    p.set_defaults(func=cmd_klein)

    p = sub.add_parser("params", help="admissibility and (eps, alpha, beta, v) for a prime")
    _add_spec(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--v-cap", dest="v_cap", type=int, default=50)
    p.set_defaults(func=cmd_params)

    for name, func, text in (
            ("verify", cmd_verify, "check one congruence or equidistribution claim up to --n-max"),
            ("search", cmd_search, "list progressions (A, B) with A <= --A-max that survive")):
        p = sub.add_parser(name, help=text)
        _add_spec(p)
        p.add_argument("--ell", type=int, required=True)
        p.add_argument("--j", type=int, default=1)
        p.add_argument("--tau", type=int, default=1)
        p.add_argument("--n-max", dest="n_max", type=int, default=100)
        p.add_argument("--mode", choices=("congruence", "equidistribution"),
                       default="congruence")
        if name == "verify":
            p.add_argument("--A", type=int, required=True)
            p.add_argument("--B", type=int, required=True)
            p.add_argument("--ledger", help="newline-delimited JSON file of finished checks")
            _add_format(p)
        else:
            p.add_argument("--A-max", dest="A_max", type=int, default=12)
            p.add_argument("--min-tested", dest="min_tested", type=int, default=5)
        p.set_defaults(func=func)

    p = sub.add_parser("regress", help="run the pinned regression suite")
    _add_format(p)
    p.set_defaults(func=cmd_regress)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IntegralityError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INTERNAL
    except (CrankformsError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
