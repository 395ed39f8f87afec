"""Command-line front end.

Exit codes: 0 success (an out-of-scope verdict is a success), 2 parse error
or unknown fixture, 3 invalid matrix (det != 1 or elliptic), 4 disagreement
between the classifier and exhaustive search, or a failed property check.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .characters import Matrices, Triple, char
from .classifier import Classification, classify_pair
from .errors import InconsistencyError, InvalidMatrixError, OutOfScopeError
from .fixtures import FIXTURES, SAMPLE_PAIRS
from .matrices import Mat2, MatrixPair, parse_matrix
from .scalars import format_scalar, parse_scalar
from .words import check_group_word, expand

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_DISCREPANCY = 0, 2, 3, 4
WORKERS_ENV = "SL2JSR_WORKERS"


class ParseError(Exception):
    pass


def _matrix(token: str) -> Mat2:
    if token in FIXTURES:
        return FIXTURES[token]
    try:
        return parse_matrix(token)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


_TOKEN_RE = re.compile(r"\[\s*\[[^\[\]]*\]\s*,\s*\[[^\[\]]*\]\s*\]|[A-Za-z]\w*")


def _line_matrices(line: str) -> list[Mat2]:
    """Matrices and fixture names on one batch line, in order."""
    return [_matrix(m.group(0)) for m in _TOKEN_RE.finditer(line)]


def _pair(args) -> MatrixPair:
    # a single sample name stands for a whole pair
    if args.B is None and args.A in SAMPLE_PAIRS:
        return SAMPLE_PAIRS[args.A]
    if args.A is None or args.B is None:
        raise ParseError(f"expected two matrices or one of: {', '.join(SAMPLE_PAIRS)}")
    return MatrixPair(_matrix(args.A), _matrix(args.B))


def _emit(args, data: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# report serialization


def classification_json(result: Classification) -> dict:
    cls, rep = result.classification, result.report
    data = {"case": cls.case.value, "swapped": cls.swapped}
    if cls.reason:
        data["reason"] = cls.reason
    if rep.optimal is None:
        data["optimal"] = None
        data["jsr"] = None
        return data
    data["optimal"] = {"kind": rep.optimal.kind, "words": list(rep.optimal.words)}
    data["jsr"] = {
        "trace": format_scalar(rep.radius.t),
        "root": rep.radius.n,
        "approx": rep.float_approx,
        "digits": rep.precision,
    }
    return data


def classification_text(result: Classification) -> str:
    cls, rep = result.classification, result.report
    lines = [f"case: {cls}", f"swapped: {str(cls.swapped).lower()}"]
    if rep.optimal is not None:
        words = ", ".join(rep.optimal.words) if rep.optimal.is_finite else "every non-power (representative ab)"
        lines.append(f"optimal: {words}")
        lines.append(f"jsr: rho(trace {format_scalar(rep.radius.t)})^(1/{rep.radius.n}) ~ {rep.float_approx}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    if args.batch:
        status = EXIT_OK
        if args.batch == "-":
            lines = sys.stdin.read().splitlines()
        else:
            try:
                with open(args.batch) as fh:
                    lines = fh.read().splitlines()
            except OSError as exc:
                raise ParseError(str(exc)) from exc
        for lineno, line in enumerate(lines, 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                mats = _line_matrices(line)
            except ParseError:
                mats = []
            if len(mats) != 2:
                print(f"line {lineno}: expected two matrices", file=sys.stderr)
                status = max(status, EXIT_PARSE)
                continue
            try:
                result = classify_pair(*mats, precision=args.precision)
            except InvalidMatrixError as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                status = max(status, EXIT_INVALID)
                continue
            data = classification_json(result)
            if args.json:
                print(json.dumps(data, sort_keys=True))
            else:
                print(f"{lineno}: {result.classification} {result.optimal or ''}".rstrip())
        return status
    result = classify_pair(*_pair(args), precision=args.precision)
    _emit(args, classification_json(result), classification_text(result))
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .oracle import brute_force_max

    pair = _pair(args)
    try:
        report = brute_force_max(pair, args.max_len, args.workers, certificates=args.certificates)
    except OutOfScopeError as exc:
        _emit(args, {"error": "out of scope", "reason": str(exc)}, f"out of scope: {exc}")
        return EXIT_OK
    data = {
        "max_len": report.max_len,
        "max_words": list(report.max_words),
        "radius": {"trace": format_scalar(report.radius.t), "root": report.radius.n,
                   "approx": report.radius.approx_str(args.precision)},
    }
    text = f"max_words: {', '.join(report.max_words)}\nradius: rho(trace {format_scalar(report.radius.t)})^(1/{report.radius.n})"
    if report.certificates is not None:
        data["certificates"] = [
            {"word": c.word, "best": c.best, "lhs": str(c.lhs), "rhs": str(c.rhs)} for c in report.certificates
        ]
        text += f"\ncertificates: {len(report.certificates)}"
    _emit(args, data, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .oracle import verify_classification

    try:
        v = verify_classification(_pair(args), args.max_len, args.workers)
    except OutOfScopeError as exc:
        _emit(args, {"agreement": None, "reason": str(exc)}, f"out of scope: {exc}")
        return EXIT_OK
    data = {"agreement": v.ok, "detail": v.detail, "classification": classification_json(v.classification),
            "max_words": list(v.oracle.max_words)}
    _emit(args, data, f"{'agreement' if v.ok else 'DISCREPANCY'}: {v.detail}")
    return EXIT_OK if v.ok else EXIT_DISCREPANCY


def cmd_char(args) -> int:
    try:
        word = check_group_word(expand(args.word))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if args.traces:
        try:
            x, y, z = (parse_scalar(t) for t in args.traces.split(","))
        except ValueError as exc:
            raise ParseError(f"--traces needs three scalars x,y,z: {exc}") from exc
        ctx = Triple(x, y, z)
    else:
        pair = _pair(args)
        for M in pair:
            if M.det() != 1:
                raise InvalidMatrixError(f"{M} has determinant {M.det()}")
        ctx = Matrices(pair)
    value = format_scalar(char(word, ctx))
    _emit(args, {"word": word, "value": value}, value)
    return EXIT_OK


def cmd_lemmas(args) -> int:
    from .oracle import lemma_suite

    report = lemma_suite(args.seed, args.trials)
    data = {
        name: {"instances": s.instances, "failures": s.failures, "first_counterexample": s.first_counterexample}
        for name, s in report.checks.items()
    }
    _emit(args, {"ok": report.ok, "checks": data}, "\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def _coeffs(p) -> list[str]:
    return [format_scalar(c) for c in reversed(p.coeffs)]


def cmd_lab(args) -> int:
    from . import lab

    if args.case == "iv2":
        r = lab.iv2_counterexample()
        data = {"case": "iv2", "coefficients": _coeffs(r.poly), "witness": format_scalar(r.witness),
                "value": format_scalar(r.value), "matches_reference": r.matches_reference}
        text = (f"[(ab^2)^4] - [(ab^3)^3] = {r.poly}\ncoefficients (highest first): {' '.join(_coeffs(r.poly))}\n"
                f"value at x = {format_scalar(r.witness)}: {format_scalar(r.value)}")
        ok = r.matches_reference and r.value < 0
    elif args.case == "iv1":
        r = lab.iv1_counterexample()
        data = {"case": "iv1", "coefficients": _coeffs(r.poly), "witness": format_scalar(r.witness),
                "value": format_scalar(r.value), "verdict": r.verdict}
        rel = {1: ">", 0: "=", -1: "<"}[r.verdict]
        text = (f"[ab^2] - [b^3] = {r.poly}\nvalue at x = {format_scalar(r.witness)}: {format_scalar(r.value)}\n"
                f"ab^2 {rel} b at the witness")
        ok = r.value > 0 and r.verdict > 0
    elif args.case == "iv3":
        r = lab.iv3_counterexample()
        lo, hi = r.interval
        data = {"case": "iv3", "crossing": _coeffs(r.crossing), "interval": [format_scalar(lo), format_scalar(hi)],
                "degrees": [r.ab_vs_mix.degree, r.ab2_vs_mix.degree],
                "negative": [r.ab_negative, r.ab2_negative]}
        text = (f"[(ab)^3] - [(ab^2)^2] = {r.crossing}\nroot in [{float(lo)!r}, {float(hi)!r}] "
                f"(width {float(hi - lo):.3g})\n[(ab)^5] - [(abab^2)^2]: degree {r.ab_vs_mix.degree}, "
                f"negative on interval: {r.ab_negative}\n[(ab^2)^5] - [(abab^2)^3]: degree {r.ab2_vs_mix.degree}, "
                f"negative on interval: {r.ab2_negative}")
        ok = r.ab_negative and r.ab2_negative
    else:
        r = lab.nonfree_demo()
        data = {"case": "nonfree", "a2b3a2": str(r.left), "ba6b": str(r.right), "identity": r.ok}
        text = f"a^2b^3a^2 = {r.left}\nb a^6 b = {r.right}\nidentity holds: {r.ok}"
        ok = r.ok
    _emit(args, data, text)
    return EXIT_OK if ok else EXIT_DISCREPANCY


def cmd_gen(args) -> int:
    from .oracle import random_pair

    pairs = [random_pair(args.seed + i, args.max_factors) for i in range(args.count)]
    if args.json:
        for p in pairs:
            print(json.dumps({"A": str(p.A), "B": str(p.B)}))
    else:
        for p in pairs:
            print(f"{p.A} {p.B}")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.name not in FIXTURES:
        raise ParseError(f"unknown fixture {args.name!r}; known: {', '.join(FIXTURES)}")
    M = FIXTURES[args.name]
    _emit(args, {"name": args.name, "matrix": str(M)}, str(M))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    default_workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    parser = argparse.ArgumentParser(prog="sl2jsr", description="Optimal products and joint spectral radius of SL2 pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_args(p):
        p.add_argument("A", nargs="?", help="matrix [[a,b],[c,d]], fixture name, or sample name alone")
        p.add_argument("B", nargs="?", help="matrix [[a,b],[c,d]] or fixture name")

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("classify", help="case label, optimal words and JSR")
    pair_args(p)
    p.add_argument("--batch", nargs="?", const="-", metavar="FILE",
                   help="one pair per line from FILE (or stdin when omitted)")
    p.add_argument("--precision", type=int, default=15, help="decimal digits of the JSR approximation")
    common(p)
    p.set_defaults(func=cmd_classify)

    for name, func, hlp in (("oracle", cmd_oracle, "exhaustive search over Lyndon words"),
                            ("verify", cmd_verify, "cross-check the classifier against exhaustive search")):
        p = sub.add_parser(name, help=hlp)
        pair_args(p)
        p.add_argument("--max-len", type=int, default=10)
        p.add_argument("--workers", type=int, default=default_workers)
        p.add_argument("--precision", type=int, default=15)
        if name == "oracle":
            p.add_argument("--certificates", action="store_true", help="include exact rejection data")
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("char", help="trace of a word")
    p.add_argument("word", help="word over a, b (A, B for inverses); shorthand like (ab^2)^3 allowed")
    pair_args(p)
    p.add_argument("--traces", help="x,y,z = [a],[b],[ab] instead of matrices")
    common(p)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("lemmas", help="run the trace-inequality property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    common(p)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("lab", help="exact counterexamples for real traces")
    p.add_argument("--case", choices=["iv1", "iv2", "iv3", "nonfree"], required=True)
    common(p)
    p.set_defaults(func=cmd_lab)

    p = sub.add_parser("gen", help="seeded random pairs of L, N products")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-factors", type=int, default=5)
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fixtures", help="print a named matrix")
    p.add_argument("name")
    common(p)
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidMatrixError as exc:
        print(f"invalid matrix: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistencyError as exc:
        print(f"inconsistent data: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY


if __name__ == "__main__":
    sys.exit(main())
