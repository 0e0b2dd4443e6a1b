"""Batch command-line interface.

Every command is a pure function of (inputs, flags, seed): two runs with the
same arguments produce byte-identical output.  Exit code 0 means the verdict
passed or the query succeeded, 1 means a computational verdict failed (the
witness is printed), and 2 means the invocation itself was bad.
"""

from __future__ import annotations

import argparse
import json
import sys

from .domains import GF, QQ, domain_from_name
from .groebner import (
    Ideal,
    codimension,
    dimension,
    ideal_intersection,
    ideal_quotient,
    is_regular_sequence_codim,
    is_regular_sequence_direct,
    regular_pair_gcd_check,
)
from .minors import GenericMatrix, laplace_strength_bound, maximal_minors
from .orders import order_from_name
from .parse import (
    dump_ideal_text,
    format_poly,
    load_ideal_file,
    parse_poly,
    parse_ring_header,
)
from .poly import Grading, Ring
from .quadratic import (
    DiagonalPair,
    Pencil,
    QuadraticForm,
    collective_strength_quadrics,
    minrank_bruteforce,
    minrank_formula,
    rank,
    simultaneous_diagonalize,
    strength_from_rank,
)
from .certificates import BUILDERS, build_certificate, recheck_certificate
from .version import __version__


def _environment(field, primes, seed):
    return {
        "field": field,
        "primes": sorted(set(primes)),
        "seed": seed,
        "version": __version__,
    }


def _emit(args, command, result, field, primes):
    if args.json:
        doc = {
            "command": command,
            "result": result,
            "environment": _environment(field, primes, args.seed),
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
        return True
    return False


def _load_system(args):
    ring = parse_ring_header("ring " + args.ring) if args.ring else None
    if args.infile is None:
        raise ValueError("--in <file> is required here")
    return load_ideal_file(args.infile, ring)


def _load_gram_file(path, domain):
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            entries = []
            for tok in line.replace(",", " ").split():
                if "/" in tok:
                    num, den = tok.split("/", 1)
                    entries.append(domain(int(num), int(den)))
                else:
                    entries.append(domain.from_int(int(tok)))
            rows.append(entries)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("Gram matrix file must be square")
    return QuadraticForm(Ring.flat(n, domain), rows)


def _load_forms(args):
    """Quadratic forms from --in: either an ideal-style polynomial file or a
    bare symmetric matrix of numbers."""
    if args.infile is None:
        raise ValueError("--in <file> is required here")
    with open(args.infile, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = [
        ln.split("#", 1)[0].strip() for ln in text.splitlines()
    ]
    stripped = [ln for ln in stripped if ln]
    if stripped and stripped[0].startswith("ring "):
        from .parse import load_ideal_text

        ring = parse_ring_header("ring " + args.ring) if args.ring else None
        ring, polys = load_ideal_text(text, ring)
        return [QuadraticForm.from_poly(f) for f in polys]
    domain = domain_from_name(args.field)
    return [_load_gram_file(args.infile, domain)]


# ---------------------------------------------------------------------------
# commands


def cmd_regseq(args):
    ring, polys = _load_system(args)
    if not polys:
        raise ValueError("the input system is empty")
    order = order_from_name(args.order)
    direct = is_regular_sequence_direct(polys, order)
    by_codim = is_regular_sequence_codim(polys, order)
    ideal = Ideal(ring, polys)
    codim = codimension(ideal, order)
    result = {
        "forms": len(polys),
        "variables": ring.nvars,
        "codimension": codim,
        "direct_test_regular": direct,
        "codim_test_regular": by_codim,
        "tests_agree": direct == by_codim,
        "regular": by_codim and direct,
    }
    if len(polys) == 2:
        result["gcd_report"] = regular_pair_gcd_check(polys[0], polys[1]).to_dict()
    if not _emit(args, "regseq", result, ring.domain.name, _prime_list(ring.domain)):
        verdict = "regular sequence" if result["regular"] else "NOT a regular sequence"
        print(f"{len(polys)} forms in {ring.nvars} variables over {ring.domain.name}: {verdict}")
        print(f"  codimension {codim}; direct test {direct}, codim test {by_codim}")
        if "gcd_report" in result:
            print(f"  gcd: {result['gcd_report']['gcd']}")
    return 0 if result["regular"] else 1


def _prime_list(domain):
    return [domain.p] if domain.characteristic else []


def _parse_diag(text):
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def cmd_quadric(args):
    if args.operation in ("rank", "strength"):
        if args.diag:
            dom = GF(args.p) if args.p else QQ
            q = QuadraticForm.diagonal(Ring.flat(len(_parse_diag(args.diag)), dom), _parse_diag(args.diag))
        else:
            q = _load_forms(args)[0]
        r = rank(q)
        result = {"rank": r}
        if args.operation == "strength":
            result["strength"] = strength_from_rank(r)
        if not _emit(args, f"quadric {args.operation}", result, q.domain.name, _prime_list(q.domain)):
            for k, v in result.items():
                print(f"{k}: {v}")
        return 0

    if args.operation == "minrank":
        if args.diag:
            b = _parse_diag(args.diag)
            dp = DiagonalPair([1] * len(b), b)
            formula = minrank_formula(dp)
            result = {"minrank": formula.value, "method": "formula", "witness": [str(c) for c in formula.witness]}
            primes = []
            if args.p:
                image = dp.reduce_mod(args.p)
                scan = minrank_bruteforce(*image.forms(), threads=args.threads)
                result["scan"] = scan.to_dict()
                result["scan_agrees"] = scan.value == formula.value
                primes = [args.p]
            field = "q"
        else:
            forms = _load_forms(args)
            if len(forms) != 2:
                raise ValueError("minrank needs exactly two forms")
            f1, f2 = forms
            field = f1.domain.name
            primes = _prime_list(f1.domain)
            if f1.domain.characteristic:
                scan = minrank_bruteforce(f1, f2, threads=args.threads)
                result = {"minrank": scan.value, "method": scan.method, "witness": [str(c) for c in scan.witness]}
            else:
                dp = simultaneous_diagonalize(f1, f2)
                if dp is None:
                    raise ValueError("pencil does not diagonalize over q; supply --p for a scan")
                formula = minrank_formula(dp)
                result = {"minrank": formula.value, "method": formula.method, "witness": [str(c) for c in formula.witness]}
        if not _emit(args, "quadric minrank", result, field, primes):
            print(f"minrank: {result['minrank']} (witness combination {result['witness']})")
            if "scan" in result:
                print(f"  scan over fp:{args.p}: {result['scan']['value']} (agrees: {result['scan_agrees']})")
        return 0

    if args.operation == "collective":
        forms = _load_forms(args)
        dom = forms[0].domain
        if not dom.characteristic:
            if not args.p:
                raise ValueError("collective strength scans need a prime field (--p or an fp ring)")
            target = GF(args.p)
            ring = Ring.flat(forms[0].n, target)
            forms = [
                QuadraticForm(ring, [[target(v.numerator, v.denominator) for v in row] for row in q.gram])
                for q in forms
            ]
            dom = target
        value = collective_strength_quadrics(Pencil(forms), threads=args.threads)
        result = {"collective_strength": value, "forms": len(forms)}
        if not _emit(args, "quadric collective", result, dom.name, _prime_list(dom)):
            print(f"collective strength over {dom.name}: {value}")
        return 0

    raise ValueError(f"unknown quadric operation {args.operation!r}")


def cmd_minors(args):
    if not args.matrix:
        raise ValueError("--matrix RxC is required")
    rows, cols = (int(v) for v in args.matrix.lower().split("x"))
    domain = domain_from_name(args.field)
    matrix = GenericMatrix(rows, cols, domain)
    family = maximal_minors(matrix)
    grading = Grading.by_columns(matrix.ring)
    degrees = [list(f.multidegree(grading)) for f in family.minors]
    bounds = [laplace_strength_bound(matrix, i) for i in range(1, rows + 1)]
    result = {
        "matrix": f"{rows}x{cols}",
        "minors": [format_poly(f) for f in family.minors],
        "column_multidegrees": degrees,
        "strength_bounds": [b.bound for b in bounds],
    }
    if not _emit(args, "minors", result, domain.name, _prime_list(domain)):
        print(dump_ideal_text(matrix.ring, family.minors), end="")
    return 0


def cmd_gb(args):
    order = order_from_name(args.order)
    ring, polys = _load_system(args)
    ideal = Ideal(ring, polys)
    if args.operation == "basis":
        basis = ideal.groebner(order)
        result = {"basis": [format_poly(g) for g in basis], "order": args.order}
        if not _emit(args, "gb basis", result, ring.domain.name, _prime_list(ring.domain)):
            print(dump_ideal_text(ring, list(basis)), end="")
        return 0
    if args.operation in ("dim", "codim"):
        value = dimension(ideal, order) if args.operation == "dim" else codimension(ideal, order)
        result = {args.operation: value}
        if not _emit(args, f"gb {args.operation}", result, ring.domain.name, _prime_list(ring.domain)):
            print(value)
        return 0
    if args.operation == "intersect":
        if not args.infile2:
            raise ValueError("--in2 <file> is required for intersect")
        ring2, polys2 = load_ideal_file(args.infile2, ring)
        inter = ideal_intersection(ideal, Ideal(ring, polys2))
        result = {"generators": [format_poly(g) for g in inter.gens]}
        if not _emit(args, "gb intersect", result, ring.domain.name, _prime_list(ring.domain)):
            print(dump_ideal_text(ring, inter.gens), end="")
        return 0
    if args.operation == "quotient":
        if not args.divisor:
            raise ValueError("--f <poly> is required for quotient")
        f = parse_poly(args.divisor, ring)
        quot = ideal_quotient(ideal, f)
        result = {"generators": [format_poly(g) for g in quot.gens]}
        if not _emit(args, "gb quotient", result, ring.domain.name, _prime_list(ring.domain)):
            print(dump_ideal_text(ring, quot.gens), end="")
        return 0
    raise ValueError(f"unknown gb operation {args.operation!r}")


_CERT_PRIME_FLAG = {
    "n32-lower": "scan_prime",
    "n32-upper": "scan_prime",
    "n33": "gb_prime",
    "small-r": "prime",
}


def cmd_certify(args):
    names = list(BUILDERS) if args.target == "all" else [args.target]
    certs = []
    for name in names:
        overrides = {}
        if args.p:
            overrides[_CERT_PRIME_FLAG[name]] = args.p
        certs.append(build_certificate(name, seed=args.seed, threads=args.threads, **overrides))
    if args.json:
        docs = [c.to_dict() for c in certs]
        payload = docs[0] if len(docs) == 1 else docs
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for cert in certs:
            print(f"{cert.claim}: {'PASS' if cert.passed else 'FAIL'}")
            for v in cert.subverdicts:
                print(f"  [{v.kind}] {v.name}: {'pass' if v.passed else 'FAIL'}")
            failure = cert.first_failure()
            if failure is not None:
                print(f"  witness: {json.dumps(failure.witness, sort_keys=True)}")
    return 0 if all(c.passed for c in certs) else 1


def cmd_recheck(args):
    with open(args.certificate, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    result = recheck_certificate(data, threads=args.threads)
    if args.json:
        print(json.dumps({"command": "recheck", "result": result.to_dict(),
                          "environment": data.get("environment", {})}, indent=2, sort_keys=True))
    else:
        print(f"recheck {'PASS' if result.passed else 'FAIL'}: {result.detail}")
    return 0 if result.passed else 1


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="formstrength",
        description="Exact certificates for rank, strength and regular-sequence properties of forms.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--field", default="q", help="coefficient field: q or fp:<p>")
        p.add_argument("--order", default="degrevlex", choices=["degrevlex", "lex"])
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--in", dest="infile", help="input file")
        p.add_argument("--ring", help='ring override, e.g. "n=3 field=q"')
        p.add_argument("--matrix", help="generic matrix shape RxC")
        p.add_argument("--diag", help="diagonal coefficients a1,...,an")
        p.add_argument("--p", type=int, help="prime for finite-field scans")

    p = sub.add_parser("regseq", help="test a system of forms for regularity")
    common(p)
    p.set_defaults(func=cmd_regseq)

    p = sub.add_parser("quadric", help="rank / strength / minrank / collective strength")
    p.add_argument("operation", choices=["rank", "strength", "minrank", "collective"])
    common(p)
    p.set_defaults(func=cmd_quadric)

    p = sub.add_parser("minors", help="build and export maximal-minor families")
    common(p)
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("gb", help="Groebner basis and ideal queries")
    p.add_argument("operation", choices=["basis", "dim", "codim", "intersect", "quotient"])
    common(p)
    p.add_argument("--in2", dest="infile2", help="second ideal file (intersect)")
    p.add_argument("--f", dest="divisor", help="quotient divisor polynomial")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("certify", help="build a machine-checked certificate")
    p.add_argument("target", choices=sorted(BUILDERS) + ["all"])
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("recheck", help="re-verify a serialized certificate")
    p.add_argument("certificate", help="certificate JSON file")
    common(p)
    p.set_defaults(func=cmd_recheck)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, ZeroDivisionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
