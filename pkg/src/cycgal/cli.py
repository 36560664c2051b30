"""Command-line front end.

Commands: construct, verify, wreath, dihedral, scan, search.  Every command
is deterministic given its flags.  Exit codes: 0 success, 1 invalid input,
2 incomplete certification, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .arith import field_spec, supported_degrees
from .galois import certify_wreath, verify_cyclic, verify_supplied_roots
from .grammar import ParseError, parse_factor_type, parse_matrix, parse_poly_lines, parse_quadrat
from .modp import scan_primes
from .moebius import (
    ConstructionParams,
    DegenerateConstructionError,
    InvalidMatrixError,
    construct_f1,
    search_params,
    validate_matrix,
)
from .numeric import DihedralResolventError, dihedral_resolvent, orbit_roots

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCOMPLETE = 2
EXIT_NUMERIC = 3


class InputError(Exception):
    """Bad flags, unparsable input, or an inadmissible matrix."""


def _spec_for(args):
    if args.n is None:
        raise InputError("--n is required for this command")
    try:
        spec = field_spec(args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.D is not None and args.D != spec.D:
        raise InputError(f"n={args.n} lives over D={spec.D}, not D={args.D}")
    return spec


def _check_flags(args):
    limits = {
        "prime_budget": (1, "--prime-budget must be >= 1"),
        "type_budget": (1, "--type-budget must be >= 1"),
        "search_budget": (0, "--search-budget must be >= 0"),
        "height": (1, "--height must be >= 1"),
        "prec_bits": (64, "--prec-bits must be >= 64"),
        "digits": (0, "--digits must be >= 0"),
    }
    for name, (lo, message) in limits.items():
        value = getattr(args, name, None)
        if value is not None and value < lo:
            raise InputError(message)
    tol = getattr(args, "int_tol", None)
    if tol is not None and not tol > 0:
        raise InputError("--int-tol must be positive")


def _params_for(args) -> ConstructionParams:
    spec = _spec_for(args)
    if args.matrix is None:
        raise InputError("--matrix is required for this command")
    try:
        A = parse_matrix(args.matrix, spec.D)
        C = parse_quadrat(args.C, spec.D)
    except (ParseError, ValueError) as exc:
        raise InputError(f"bad matrix or constant: {exc}") from None
    verdict = validate_matrix(spec, A)
    if not verdict.ok:
        raise InputError(f"matrix fails trace^2 = t*det: {verdict.reason}")
    return ConstructionParams(spec=spec, A=A, C=C)


def _read_fixture(path: str, D: int):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        polys = parse_poly_lines(text, D)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    if not polys:
        raise InputError(f"{path}: no polynomials found")
    return polys


def _emit(report: dict, args, lines: list[str]) -> None:
    payload = None
    if args.json:
        payload = json.dumps(report, indent=2)
        print(payload)
    else:
        for line in lines:
            print(line)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload if payload is not None else json.dumps(report, indent=2))
            fh.write("\n")


def _report(command: str, inputs: dict, certificate: dict, started: float) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "certificate": certificate,
        "timings": {"seconds": round(time.monotonic() - started, 6)},
    }


# -- commands ------------------------------------------------------------------


def cmd_construct(args) -> int:
    started = time.monotonic()
    params = _params_for(args)
    try:
        result = construct_f1(params)
    except DegenerateConstructionError as exc:
        raise InputError(str(exc)) from None
    cert = {
        "f1": str(result.f1),
        "degree": result.degree,
        "n": result.n,
        "full_degree": result.full_degree,
    }
    report = _report(
        "construct",
        {"n": args.n, "D": params.spec.D, "matrix": str(params.A), "C": str(params.C)},
        cert,
        started,
    )
    _emit(report, args, [str(result.f1), f"degree {result.degree} (n={result.n})"])
    return EXIT_OK if result.full_degree else EXIT_INCOMPLETE


def cmd_verify(args) -> int:
    started = time.monotonic()
    if args.infile:
        D = 1 if args.D is None else args.D
        polys = _read_fixture(args.infile, D)
        f, ps = polys[0], polys[1:]
        if len(ps) != f.degree - 1:
            raise InputError(
                f"{args.infile}: need {f.degree - 1} root expressions, found {len(ps)}"
            )
        cert = verify_supplied_roots(f, ps)
        inputs = {"in": args.infile, "D": D}
    else:
        params = _params_for(args)
        result = construct_f1(params)
        if not result.full_degree:
            raise InputError(f"f1 has degree {result.degree}, expected {result.n}")
        cert = verify_cyclic(result.f1, params.A, prime_budget=args.prime_budget)
        inputs = {
            "n": args.n,
            "D": params.spec.D,
            "matrix": str(params.A),
            "C": str(params.C),
        }
    lines = [f"{'PASS' if cert.ok else 'FAIL'}: {len(cert.checks)} checks"]
    if not cert.ok:
        lines += [f"  failure: {cert.failure}"]
        lines += [f"  {name}: {'ok' if ok else 'FAIL'}" for name, ok in cert.checks if not ok]
    else:
        lines += [f"  P_{k + 2} = {p}" for k, p in enumerate(cert.zero_exprs)]
    report = _report("verify", inputs, cert.as_dict(), started)
    _emit(report, args, lines)
    return EXIT_OK if cert.ok else EXIT_INCOMPLETE


def cmd_wreath(args) -> int:
    started = time.monotonic()
    params = _params_for(args)
    if params.spec.D == 1:
        raise InputError("wreath certification needs a quadratic field (D > 1)")
    result = construct_f1(params)
    if not result.full_degree:
        raise InputError(f"f1 has degree {result.degree}, expected {result.n}")
    report_obj = certify_wreath(result.f1, params.A, prime_budget=args.prime_budget)
    lines = [
        f"f1 = {report_obj.f1}",
        f"f  = {report_obj.f}",
        f"m  = {report_obj.m}",
    ]
    if report_obj.complete:
        lines += [
            f"witness prime {report_obj.witness_prime} with type {report_obj.witness_type}",
            f"splitting field degree claim: {report_obj.degree_claim} "
            f"(consistent with the order-2n^2 wreath group)",
        ]
    else:
        lines += [f"INCOMPLETE: {report_obj.reason}"]
    report = _report(
        "wreath",
        {"n": args.n, "D": params.spec.D, "matrix": str(params.A), "C": str(params.C),
         "prime_budget": args.prime_budget},
        report_obj.as_dict(),
        started,
    )
    _emit(report, args, lines)
    return EXIT_OK if report_obj.complete else EXIT_INCOMPLETE


def cmd_dihedral(args) -> int:
    started = time.monotonic()
    params = _params_for(args)
    if params.spec.D == 1:
        raise InputError("the dihedral pipeline needs a quadratic field (D > 1)")
    result = construct_f1(params)
    if not result.full_degree:
        raise InputError(f"f1 has degree {result.degree}, expected {result.n}")
    wreath = certify_wreath(result.f1, params.A, prime_budget=args.prime_budget)
    inputs = {
        "n": args.n, "D": params.spec.D, "matrix": str(params.A), "C": str(params.C),
        "prime_budget": args.prime_budget, "prec_bits": args.prec_bits,
        "int_tol": args.int_tol, "power": args.power,
    }
    if not wreath.complete:
        report = _report("dihedral", inputs, {"wreath": wreath.as_dict()}, started)
        _emit(report, args, [f"INCOMPLETE wreath certification: {wreath.reason}"])
        return EXIT_INCOMPLETE
    try:
        res = dihedral_resolvent(
            wreath,
            params.A,
            prec=args.prec_bits,
            int_tol=args.int_tol,
            prime_budget=args.type_budget,
            start_power=args.power,
        )
    except DihedralResolventError as exc:
        report = _report(
            "dihedral", inputs, {"wreath": wreath.as_dict(), "error": str(exc)}, started
        )
        _emit(report, args, [f"NUMERIC FAILURE: {exc}"])
        return EXIT_NUMERIC
    lines = [f"g = {res.g}", f"resolvent power {res.power}, {res.prec_bits} bits"]
    lines += [f"  {name}: {'ok' if ok else 'FAIL'}" for name, ok in res.verifications]
    lines += ["  type log: " + ", ".join(f"p={p}:{t}" for p, t in res.type_log)]
    certificate = {"wreath": wreath.as_dict(), "resolvent": res.as_dict()}
    if args.digits:
        import mpmath as mp

        orbit = orbit_roots(wreath.f1, params.A, args.prec_bits)
        xs = [mp.nstr(z.real, args.digits) for z in orbit.xs]
        ys = [mp.nstr(z.real, args.digits) for z in orbit.ys]
        certificate["roots"] = {"xs": xs, "ys": ys}
        lines += ["  xs: " + ", ".join(xs), "  ys: " + ", ".join(ys)]
    report = _report("dihedral", inputs, certificate, started)
    _emit(report, args, lines)
    return EXIT_OK if res.ok else EXIT_NUMERIC


def cmd_scan(args) -> int:
    started = time.monotonic()
    if not args.infile:
        raise InputError("--in FILE is required for scan")
    polys = _read_fixture(args.infile, 1)
    f = polys[0]
    predicate = None
    target = None
    if args.find_type:
        try:
            target = parse_factor_type(args.find_type)
        except ParseError as exc:
            raise InputError(f"bad --find-type: {exc}") from None
        predicate = lambda t: t == target  # noqa: E731
    result = scan_primes(f, predicate, args.prime_budget)
    lines = []
    for p, t in result.log:
        entry = {"p": p, "type": list(t.degrees)}
        if result.found_prime == p:
            entry["match"] = True
        lines.append(json.dumps(entry))
    report = _report(
        "scan",
        {"in": args.infile, "find_type": args.find_type, "prime_budget": args.prime_budget},
        result.as_dict(),
        started,
    )
    _emit(report, args, lines)
    return EXIT_OK


def cmd_search(args) -> int:
    started = time.monotonic()
    spec = _spec_for(args)
    hits = search_params(spec, budget=args.search_budget, height=args.height)
    lines = [f"{len(hits)} construction(s) found"]
    cert = {"hits": []}
    for params in hits:
        f1 = construct_f1(params).f1
        cert["hits"].append({"matrix": str(params.A), "C": str(params.C), "f1": str(f1)})
        lines.append(f"A = {params.A}  C = {params.C}  f1 = {f1}")
    report = _report(
        "search",
        {"n": args.n, "D": spec.D, "search_budget": args.search_budget, "height": args.height},
        cert,
        started,
    )
    _emit(report, args, lines)
    return EXIT_OK


# -- argument plumbing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycgal",
        description="Construct and certify polynomials with cyclic, wreath-product "
        "and dihedral Galois groups via Moebius-transform orbit sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix=True):
        p.add_argument("--n", type=int, help=f"degree, one of {supported_degrees()}")
        p.add_argument("--D", type=int, default=None, help="field tag (checked against n)")
        if matrix:
            p.add_argument("--matrix", help="matrix as 'a,b;c,d' (entries may use s for sqrt(D))")
            p.add_argument("--C", default="0", help="additive constant of the orbit sum")
        p.add_argument("--json", action="store_true", help="emit the full JSON report")
        p.add_argument("--out", default=None, help="also write the JSON report to this path")

    p = sub.add_parser("construct", help="build f1 from a matrix and constant")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify the cyclic identities")
    common(p)
    p.add_argument("--in", dest="infile", default=None,
                   help="fixture file: f on the first line, then P_2..P_n")
    p.add_argument("--prime-budget", type=int, default=100)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wreath", help="certify f = f1*f1' (wreath product route)")
    common(p)
    p.add_argument("--prime-budget", type=int, default=100)
    p.set_defaults(func=cmd_wreath)

    p = sub.add_parser("dihedral", help="resolvent polynomial g with dihedral group")
    common(p)
    p.add_argument("--prime-budget", type=int, default=100)
    p.add_argument("--type-budget", type=int, default=50,
                   help="primes scanned for the admissibility check of g")
    p.add_argument("--prec-bits", type=int, default=256)
    p.add_argument("--int-tol", type=float, default=1e-6)
    p.add_argument("--power", type=int, default=1, choices=(1, 2),
                   help="2 forces the squared-roots fallback resolvent")
    p.add_argument("--digits", type=int, default=0,
                   help="also print the paired root orbits to this many digits")
    p.set_defaults(func=cmd_dihedral)

    p = sub.add_parser("scan", help="factorization types of an integer polynomial mod primes")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--find-type", default=None, help='stop at this type, e.g. "(5,1,1,1,1,1)"')
    p.add_argument("--prime-budget", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("search", help="enumerate admissible matrices with irreducible f1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--D", type=int, default=None)
    p.add_argument("--search-budget", type=int, default=200)
    p.add_argument("--height", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _check_flags(args)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvalidMatrixError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
