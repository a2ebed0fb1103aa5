"""Command-line front end.

    cyclocert family --j 2
    cyclocert --format csv pipeline --jmin 2 --jmax 10 --out report.csv --cache .cache
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import intpoly as ip
from .cyclo import certify_irreducible
from .exceptions import CycloCertError
from .family import DEFAULT_WIDTH, check_identities, check_special_values, family_record, pf_index
from .fpoly import DEFAULT_SEED
from .obstruction import CLAIM_FAILURE, NO_CERTIFICATE, verdict
from .pipeline import (EXIT_CLAIM_FAILURE, EXIT_ERROR, EXIT_NO_CERTIFICATE, EXIT_OK, RunConfig,
                       emit_report, exit_code, run_pipeline)


def _fraction(s: str) -> Fraction:
    try:
        x = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}")
    if x <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return x


def _index(s: str) -> int:
    j = int(s)
    if j < 0:
        raise argparse.ArgumentTypeError("index must be >= 0")
    return j


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclocert", description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--format", choices=("json", "csv", "text"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="print the polynomials for one index")
    p.add_argument("--j", type=_index, required=True)

    p = sub.add_parser("verify", help="identity suite and special values over a range")
    p.add_argument("--jmin", type=_index, default=0)
    p.add_argument("--jmax", type=_index, default=100)

    p = sub.add_parser("irreducible", help="irreducibility certificate for R_j")
    p.add_argument("--j", type=_index, required=True)
    p.add_argument("--oracle-primes", type=int, default=20)

    p = sub.add_parser("galois", help="search for a non-Galois certificate")
    p.add_argument("--j", type=_index, required=True)
    p.add_argument("--prime-bound", type=int)

    p = sub.add_parser("pf", help="bracket the largest root of q_j")
    p.add_argument("--j", type=_index, required=True)
    p.add_argument("--width", type=_fraction, default=DEFAULT_WIDTH)

    p = sub.add_parser("pipeline", help="full run over a range with caching")
    p.add_argument("--jmin", type=_index, default=0)
    p.add_argument("--jmax", type=_index, default=100)
    p.add_argument("--out")
    p.add_argument("--cache")
    p.add_argument("--prime-bound", type=int)
    p.add_argument("--width", type=_fraction, default=DEFAULT_WIDTH)
    p.add_argument("--oracle-primes", type=int, default=20,
                   help="primes for the degree oracle; 0 skips it")
    return ap


def _emit(obj, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=1, sort_keys=True))
    elif fmt == "csv":
        for k, v in obj.items():
            print(f"{k},{v}")
    else:
        print("\n".join(text_lines))


def _cmd_family(args) -> int:
    rec = family_record(args.j)
    obj = {name: [str(c) for c in getattr(rec, name)] for name in ("q", "p", "P", "Q", "m", "R")}
    obj.update(j=rec.j, has_phi3=rec.has_phi3, digest=rec.digest)
    lines = [f"j = {rec.j}  (k = {rec.k})"]
    lines += [f"{name}(x) = {ip.to_str(getattr(rec, name))}" for name in ("q", "p", "m")]
    lines += [f"{name}(q) = {ip.to_str(getattr(rec, name), 'q')}" for name in ("P", "Q", "R")]
    lines.append(f"Phi_3 | P_j: {rec.has_phi3}")
    _emit(obj, args.format, lines)
    return EXIT_OK


def _cmd_verify(args) -> int:
    bad = {}
    for j in range(args.jmin, args.jmax + 1):
        checks = {**check_identities(j), **check_special_values(j)}
        failed = sorted(k for k, ok in checks.items() if not ok)
        if failed:
            bad[j] = failed
    n = args.jmax - args.jmin + 1
    obj = {"jmin": args.jmin, "jmax": args.jmax, "checked": n, "failures": len(bad)}
    lines = [f"checked {n} indices, {len(bad)} with failures"]
    lines += [f"  j={j}: {', '.join(f)}" for j, f in bad.items()]
    _emit(obj, args.format, lines)
    return EXIT_CLAIM_FAILURE if bad else EXIT_OK


def _cmd_irreducible(args) -> int:
    rep = certify_irreducible(args.j, oracle_primes=args.oracle_primes or None)
    obj = {"j": rep.j, "proof_grade": rep.proof_grade, "cyclotomic": rep.cyclo.to_json()["entries"],
           "evidence_grade": rep.evidence_grade}
    lines = [f"R_{rep.j} irreducible (root structure + cyclotomic part): {rep.proof_grade}",
             f"cyclotomic part of P_{rep.j}: {list(rep.cyclo.entries) or 'none'}"]
    if rep.oracle is not None:
        obj["oracle_primes"] = len(rep.oracle.primes)
        lines.append(f"degree oracle over {len(rep.oracle.primes)} primes: "
                     f"{'no proper split' if rep.oracle.irreducible else rep.oracle.surviving}")
    _emit(obj, args.format, lines)
    return EXIT_OK


def _cmd_galois(args) -> int:
    v = verdict(args.j, args.prime_bound, seed=args.seed)
    obj = {"j": args.j, **v.to_json()}
    obj.pop("certificate", None)
    if v.certificate is not None:
        c = v.certificate
        obj.update(p=c.p, pattern=str(c.pattern), route=c.route, ramified=c.ramified)
        line = f"j={args.j}: {v.kind} at p={c.p}, pattern {c.pattern} ({c.route})"
    else:
        line = f"j={args.j}: {v.kind}" + (f" (bound {v.bound})" if v.bound else "")
        if v.detail:
            line += f": {v.detail}"
    _emit(obj, args.format, [line])
    if v.kind == CLAIM_FAILURE:
        return EXIT_CLAIM_FAILURE
    if v.kind == NO_CERTIFICATE and args.j >= 2:
        return EXIT_NO_CERTIFICATE
    return EXIT_OK


def _cmd_pf(args) -> int:
    b = pf_index(args.j, args.width)
    obj = {"j": args.j, "lo": str(b.lo), "hi": str(b.hi)}
    _emit(obj, args.format, [f"d_{args.j} in [{float(b.lo):.12f}, {float(b.hi):.12f}]", f"  lo = {b.lo}", f"  hi = {b.hi}"])
    return EXIT_OK


def _cmd_pipeline(args) -> int:
    config = RunConfig(j_min=args.jmin, j_max=args.jmax, prime_bound=args.prime_bound, seed=args.seed,
                       width=args.width, threads=args.threads, cache_dir=args.cache, format=args.format,
                       oracle_primes=args.oracle_primes or None)
    records = run_pipeline(config)
    text = emit_report(records, config.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return exit_code(records)


COMMANDS = {
    "family": _cmd_family,
    "verify": _cmd_verify,
    "irreducible": _cmd_irreducible,
    "galois": _cmd_galois,
    "pf": _cmd_pf,
    "pipeline": _cmd_pipeline,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CycloCertError as exc:
        # claim-level failures raised outside the pipeline
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLAIM_FAILURE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # internal error
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
