"""``qhowe`` command-line interface.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage, parse or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Sequence

from qhowe.errors import DecompositionError, PoleError, QHoweError
from qhowe.expr import ParseError, operator_environment, parse, parse_spinor
from qhowe.qarith import RatQ
from qhowe.qweyl import AlgebraElement, format_element
from qhowe.sampling import DEFAULT_SEED
from qhowe.spinor import SpinorVector, apply
from qhowe.spinor.text import format_key

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITE_NAMES = ("weyl", "sl2", "pair", "adjoint", "projector", "fischer", "symmetries", "qcalculus", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 already; keep the message format
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--q", type=_rational, default=None, metavar="Q0",
                        help="specialize output coefficients at q = Q0")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--d-max", type=_nonneg, default=6)
    bounds.add_argument("--n-max", type=_nonneg, default=4)
    bounds.add_argument("--m-max", type=_nonneg, default=3)
    bounds.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = _Parser(prog="qhowe", description="Exact computations for the rank-one quantum metaplectic Howe duality.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common, bounds], help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES)

    p = sub.add_parser("monogenic", parents=[common], help="print p+(d) or p-(d)")
    p.add_argument("d", type=_nonneg)
    p.add_argument("sign", choices=["+", "-"])
    p.add_argument("--raise", dest="raise_n", type=_nonneg, default=0, metavar="N",
                   help="apply the diagonal raising operator N times")

    p = sub.add_parser("project", parents=[common], help="apply the projection onto monogenics")
    p.add_argument("d", type=_nonneg)
    p.add_argument("input", nargs="?", help="spinor expression (default: stdin)")

    p = sub.add_parser("decompose", parents=[common], help="Fischer decomposition of a homogeneous spinor")
    p.add_argument("input", nargs="?", help="spinor expression (default: stdin)")

    p = sub.add_parser("act", parents=[common], help="apply an operator expression to a spinor")
    p.add_argument("operator")
    p.add_argument("input", nargs="?", help="spinor expression (default: stdin)")

    p = sub.add_parser("eval", parents=[common], help="normal form of a scalar or operator expression")
    p.add_argument("expr", nargs="?", help="expression (default: stdin)")

    sub.add_parser("table", parents=[common], help="print the adjoint table of the diagonal action")
    return parser


# -- helpers -----------------------------------------------------------------

def _read_input(value: str | None) -> str:
    if value is None or value == "-":
        text = sys.stdin.read()
        if not text.strip():
            raise UsageError("no input given (pass it as an argument or on stdin)")
        return text.strip()
    return value


def _scalar_text(c: RatQ, q0: Fraction | None) -> str:
    return str(c) if q0 is None else str(c.evaluate(q0))


def _scalar_json(c: RatQ, q0: Fraction | None) -> Any:
    return c.to_json() if q0 is None else str(c.evaluate(q0))


def spinor_text(v: SpinorVector, q0: Fraction | None = None) -> str:
    if q0 is None:
        return str(v)
    terms = []
    for key, c in v:
        val = c.evaluate(q0)
        if val:
            terms.append((key, val))
    if not terms:
        return "0"
    out = []
    for i, (key, val) in enumerate(terms):
        mono = format_key(*key)
        mag = abs(val)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} {mono}"
        sep = ("-" if val < 0 else "") if i == 0 else (" - " if val < 0 else " + ")
        out.append(sep + body)
    return "".join(out)


def spinor_json(v: SpinorVector, q0: Fraction | None = None) -> dict:
    return {
        "terms": [[a, b, c, _scalar_json(coeff, q0)] for (a, b, c), coeff in v],
        "text": spinor_text(v, q0),
    }


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


# -- commands ----------------------------------------------------------------

def cmd_verify(args) -> int:
    from qhowe.suites import Bounds, run_suite

    bounds = Bounds(args.d_max, args.n_max, args.m_max, args.seed)
    start = time.perf_counter()
    report = run_suite(args.suite, bounds)
    elapsed = time.perf_counter() - start
    if args.json:
        payload = report.to_json()
        payload.update({"suite": args.suite, "seed": args.seed, "bounds": vars(bounds), "seconds": round(elapsed, 3)})
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(f"suite: {args.suite}  seed: {args.seed}  d_max={args.d_max} n_max={args.n_max} m_max={args.m_max}")
        print(report.render())
        print(f"elapsed: {elapsed:.2f}s")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_monogenic(args) -> int:
    from qhowe.duality import build_sigma_delta, p_minus, p_plus
    from qhowe.spinor import apply_power

    v = p_plus(args.d) if args.sign == "+" else p_minus(args.d)
    if args.raise_n:
        v = apply_power(build_sigma_delta().E, v, args.raise_n)
    _emit(args, spinor_text(v, args.q), {"d": args.d, "sign": args.sign, "raise": args.raise_n, **spinor_json(v, args.q)})
    return EXIT_OK


def cmd_project(args) -> int:
    from qhowe.duality import project

    v = parse_spinor(_read_input(args.input))
    result = project(args.d, v)
    _emit(args, spinor_text(result, args.q), {"d": args.d, "input": str(v), "result": spinor_json(result, args.q)})
    return EXIT_OK


def cmd_decompose(args) -> int:
    from qhowe.duality import fischer_decompose

    v = parse_spinor(_read_input(args.input))
    fc = fischer_decompose(v)
    recon = fc.reconstruct()
    lines = []
    for k in range(fc.degree, -1, -1):
        lines.append(f"m{k} = {spinor_text(fc.component(k), args.q)}")
    lines.append(f"reconstruction = {spinor_text(recon, args.q)}")
    lines.append(f"round-trip exact: {recon == v}")
    payload = {
        "degree": fc.degree,
        "input": str(v),
        "components": [{"k": k, **spinor_json(fc.component(k), args.q)} for k in range(fc.degree, -1, -1)],
        "reconstruction": spinor_json(recon, args.q),
        "round_trip": recon == v,
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if recon == v else EXIT_FAIL


def _operator(text: str) -> AlgebraElement:
    value = operator_environment().evaluate(parse(text))
    return value if isinstance(value, AlgebraElement) else AlgebraElement.scalar(value)


def cmd_act(args) -> int:
    A = _operator(args.operator)
    v = parse_spinor(_read_input(args.input))
    result = apply(A, v)
    _emit(args, spinor_text(result, args.q), {"operator": format_element(A), "input": str(v), "result": spinor_json(result, args.q)})
    return EXIT_OK


def cmd_eval(args) -> int:
    value = operator_environment().evaluate(parse(_read_input(args.expr)))
    if isinstance(value, RatQ):
        text = _scalar_text(value, args.q)
        payload = {"kind": "scalar", "text": str(value), "value": value.to_json()}
        if args.q is not None:
            payload["specialized"] = text
    else:
        if args.q is not None:
            raise UsageError("--q applies to scalar expressions only")
        text = format_element(value)
        payload = {"kind": "operator", "text": text, "terms": value.to_json()}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_table(args) -> int:
    from qhowe.duality import adjoint, adjoint_table, build_sigma_delta

    t = build_sigma_delta()
    rows = []
    ok = True
    for x, label, A, want in adjoint_table():
        got = adjoint(x, t, A)
        ok = ok and got == want
        rows.append({"x": x, "argument": label, "value": format_element(got), "matches": got == want})
    if args.json:
        print(json.dumps({"rows": rows, "passed": ok}, indent=2, ensure_ascii=False))
    else:
        width = max(len(f"ad_{r['x'].upper()}_delta({r['argument']})") for r in rows)
        for r in rows:
            head = f"ad_{r['x'].upper()}_delta({r['argument']})"
            print(f"{head:<{width}} = {r['value']}")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "verify": cmd_verify,
    "monogenic": cmd_monogenic,
    "project": cmd_project,
    "decompose": cmd_decompose,
    "act": cmd_act,
    "eval": cmd_eval,
    "table": cmd_table,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qhowe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qhowe: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DecompositionError as exc:
        print(f"qhowe: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (PoleError, QHoweError, ValueError) as exc:
        print(f"qhowe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
