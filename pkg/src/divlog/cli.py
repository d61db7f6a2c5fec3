"""Command-line surface: lattice arithmetic, interval algebra, formula
evaluation, and exhaustive law sweeps, with plain or JSON output.

Exit status: 0 on success, 1 on a domain error (reported in the output
document), 2 on a usage error.  ``DIVLOG_ENUM_CAP`` and
``DIVLOG_SEARCH_CAP`` override the enumeration and tautology-search
caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import DivlogError, FormulaSyntaxError
from .factorization import divides, factorize
from .formulas import DEFAULT_SEARCH_CAP, check_valid, evaluate, parse
from .intervals import DEFAULT_ENUMERATION_CAP, Interval
from .lattice import join, meet
from .oracle import verify_heyting, verify_lattice_laws, verify_projective


def _enum_cap() -> int:
    return _env_cap("DIVLOG_ENUM_CAP", DEFAULT_ENUMERATION_CAP)


def _search_cap() -> int:
    return _env_cap("DIVLOG_SEARCH_CAP", DEFAULT_SEARCH_CAP)


def _env_cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        print(f"divlog: {name} must be an integer, got {raw!r}", file=sys.stderr)
        raise SystemExit(2)


def _binding(text: str) -> tuple[str, int]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected var=value, got {text!r}")
    try:
        return name, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"value for {name!r} must be an integer")


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# Handlers: each returns (result payload, report list or None, text renderer)
# ---------------------------------------------------------------------------


def _cmd_factor(args):
    vector = factorize(args.n)
    result = {"n": args.n, "factors": {str(p): e for p, e in vector.items()}}

    def text():
        if len(vector):
            body = " * ".join(
                f"{p}^{e}" if e > 1 else str(p) for p, e in vector.items()
            )
        else:
            body = "1"
        print(f"{args.n} = {body}")

    return result, None, text


def _cmd_gcd(args):
    value = meet(args.a, args.b)
    return value, None, lambda: print(value)


def _cmd_lcm(args):
    value = join(args.a, args.b)
    return value, None, lambda: print(value)


def _cmd_divides(args):
    flag = divides(args.a, args.b)
    return flag, None, lambda: print(_bool_text(flag))


def _cmd_interval(args):
    q = Interval(args.bottom, args.top)
    if args.action == "size":
        value = q.size()
        return value, None, lambda: print(value)
    if args.action == "is-boolean":
        flag = q.is_boolean()
        return flag, None, lambda: print(_bool_text(flag))
    members = q.members(_enum_cap())

    def text():
        for m in members:
            print(m)

    return members, None, text


def _cmd_neg(args):
    value = Interval(args.bottom, args.top).neg(args.a)
    return value, None, lambda: print(value)


def _cmd_imp(args):
    value = Interval(args.bottom, args.top).imp(args.a, args.b)
    return value, None, lambda: print(value)


def _cmd_complement(args):
    value = Interval(args.bottom, args.top).complement(args.a)
    return value, None, lambda: print(value)


def _cmd_eval(args):
    q = Interval(args.bottom, args.top)
    env = dict(args.let or [])
    value = evaluate(q, parse(args.formula), env)
    return value, None, lambda: print(value)


def _cmd_taut(args):
    q = Interval(args.bottom, args.top)
    found = check_valid(q, parse(args.formula), _search_cap(), _enum_cap())
    if found is None:
        return {"valid": True}, None, lambda: print("valid")
    result = {
        "valid": False,
        "counterexample": {name: value for name, value in found.assignment},
        "value": found.value,
    }

    def text():
        bindings = " ".join(f"{n}={v}" for n, v in found.assignment)
        prefix = f"counterexample: {bindings} " if bindings else "counterexample: "
        print(f"{prefix}(value {found.value})")

    return result, None, text


def _report_text(reports):
    def text():
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{r.law_name}: cases={r.cases_checked} "
                f"counterexamples={len(r.counterexamples)} "
                f"skipped={len(r.skipped)} {status}"
            )

    return text


def _cmd_verify_laws(args):
    reports = verify_lattice_laws(args.max)
    result = {"passed": all(r.passed for r in reports)}
    return result, reports, _report_text(reports)


def _cmd_verify_heyting(args):
    reports = verify_heyting(args.top_max, args.size_cap)
    result = {"passed": all(r.passed for r in reports)}
    return result, reports, _report_text(reports)


def _cmd_verify_projective(args):
    report = verify_projective(args.max)
    result = {"passed": report.passed}
    return result, [report], _report_text([report])


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------


def _add_json_flag(parser):
    # SUPPRESS keeps a subparser from clobbering a --json given earlier
    parser.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="emit a structured JSON document instead of plain text",
    )


def _add_interval_flags(parser):
    parser.add_argument("--bottom", type=int, required=True, help="interval bottom")
    parser.add_argument("--top", type=int, required=True, help="interval top")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divlog",
        description="Divisibility-lattice logic: gcd/lcm arithmetic, interval "
        "Heyting algebras, formula evaluation, and exhaustive law sweeps.",
    )
    _add_json_flag(parser)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("factor", help="prime factorization of N")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_factor)
    _add_json_flag(p)

    p = sub.add_parser("gcd", help="greatest common divisor (lattice meet)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_gcd)
    _add_json_flag(p)

    p = sub.add_parser("lcm", help="least common multiple (lattice join)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_lcm)
    _add_json_flag(p)

    p = sub.add_parser("divides", help="does A divide B?")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_divides)
    _add_json_flag(p)

    p = sub.add_parser("interval", help="inspect the interval [BOTTOM, TOP]")
    _add_interval_flags(p)
    p.add_argument("action", choices=["list", "size", "is-boolean"])
    p.set_defaults(handler=_cmd_interval)
    _add_json_flag(p)

    p = sub.add_parser("neg", help="pseudocomplement of A in the interval")
    _add_interval_flags(p)
    p.add_argument("a", type=int)
    p.set_defaults(handler=_cmd_neg)
    _add_json_flag(p)

    p = sub.add_parser("imp", help="relative pseudocomplement A -> B in the interval")
    _add_interval_flags(p)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_imp)
    _add_json_flag(p)

    p = sub.add_parser(
        "complement", help="Boolean complement top*bottom/A (Boolean intervals only)"
    )
    _add_interval_flags(p)
    p.add_argument("a", type=int)
    p.set_defaults(handler=_cmd_complement)
    _add_json_flag(p)

    p = sub.add_parser("eval", help="evaluate a formula in the interval")
    _add_interval_flags(p)
    p.add_argument("formula")
    p.add_argument(
        "--let",
        action="append",
        type=_binding,
        metavar="VAR=VALUE",
        help="bind a variable (repeatable)",
    )
    p.set_defaults(handler=_cmd_eval)
    _add_json_flag(p)

    p = sub.add_parser("taut", help="exhaustive validity check in the interval")
    _add_interval_flags(p)
    p.add_argument("formula")
    p.set_defaults(handler=_cmd_taut)
    _add_json_flag(p)

    p = sub.add_parser("verify", help="run exhaustive law sweeps")
    _add_json_flag(p)
    vsub = p.add_subparsers(dest="sweep", required=True, metavar="SWEEP")

    v = vsub.add_parser("laws", help="lattice laws on [1, MAX]")
    v.add_argument("--max", type=int, default=100)
    v.set_defaults(handler=_cmd_verify_laws)
    _add_json_flag(v)

    v = vsub.add_parser("heyting", help="interval operations against the oracle")
    v.add_argument("--top-max", type=int, default=60)
    v.add_argument("--size-cap", type=int, default=512)
    v.set_defaults(handler=_cmd_verify_heyting)
    _add_json_flag(v)

    v = vsub.add_parser("projective", help="meet/join projective identity on [1, MAX]")
    v.add_argument("--max", type=int, default=100)
    v.set_defaults(handler=_cmd_verify_projective)
    _add_json_flag(v)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)

    try:
        result, reports, text = args.handler(args)
    except DivlogError as err:
        error = {"name": err.name, "message": str(err)}
        if isinstance(err, FormulaSyntaxError):
            error["position"] = err.position
        document = {"command": argv, "error": error}
        if as_json:
            print(json.dumps(document, indent=2))
        else:
            print(f"error[{error['name']}]: {error['message']}", file=sys.stderr)
        return 1

    if as_json:
        document = {"command": argv, "result": result}
        if reports is not None:
            document["report"] = [r.to_dict() for r in reports]
        print(json.dumps(document, indent=2))
    else:
        text()
    return 0


if __name__ == "__main__":
    sys.exit(main())
