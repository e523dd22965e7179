"""Command-line front end.

Subcommands: table, enumerate, count, eval, product, reduce, continue,
limit.  Every command accepts --json for machine-readable output (schema
versioned via the top-level "schema" field, no timestamps, keys sorted, so
identical invocations are byte-identical).  Exit codes: 0 ok, 2 usage,
3 capability, 4 resource, 5 pole.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .algebra import reduce_to_basis, stuffle_product
from .continuation import evaluate_complex
from .errors import HsumsError, UsageError
from .exact import EvalCache, eval_exact, eval_float, eval_oracle, limit_value
from .expressions import HarmonicExpr
from .indices import (
    IndexVector,
    count_basis_no_minus_one,
    count_no_minus_one,
    count_total,
    enumerate_sums,
    lyndon_words,
    reduction_table,
)

SCHEMA = "hsums/1"

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)"
    r"(?:\s*(?P<sign>[+-])\s*(?P<im>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)\s*[ij])?\s*$"
)


def parse_complex(text: str) -> complex:
    """Parse "a", "a+bi" or "a-bi" (also accepts a trailing j)."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise UsageError(f"cannot parse complex number {text!r}; expected a+bi")
    re_part = float(m.group("re"))
    im_part = 0.0
    if m.group("im") is not None:
        im_part = float(m.group("im"))
        if m.group("sign") == "-":
            im_part = -im_part
    return complex(re_part, im_part)


def format_complex(z: complex) -> str:
    if z.imag == 0.0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        payload = {"schema": SCHEMA, "status": "ok", **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


# -- subcommand handlers -----------------------------------------------------


def _cmd_table(args) -> None:
    table = reduction_table(args.max_weight)
    lines = []
    for key, title in (("full", "alphabet: full"), ("no_minus_one", "alphabet: no-minus-one")):
        rows = table[key]
        ws = list(range(1, args.max_weight + 1))
        lines.append(title)
        lines.append("  w     " + " ".join(f"{w:>6d}" for w in ws))
        lines.append("  total " + " ".join(f"{n:>6d}" for n in rows["total"]))
        lines.append("  basis " + " ".join(f"{n:>6d}" for n in rows["basis"]))
        lines.append("")
    lines.append("counts are cumulative over weights 1..w; the no-minus-one")
    lines.append("basis entry at w=1 uses the corrected count (1, not the")
    lines.append("formula value 2).")
    _emit({"max_weight": args.max_weight, "tables": table}, args.json, lines)


def _cmd_enumerate(args) -> None:
    vectors = enumerate_sums(args.weight, allow_minus_one=not args.no_minus_one)
    strings = [str(v) for v in vectors]
    _emit(
        {
            "weight": args.weight,
            "no_minus_one": args.no_minus_one,
            "count": len(strings),
            "vectors": strings,
        },
        args.json,
        strings,
    )


def _cmd_count(args) -> None:
    w = args.weight
    if args.kind == "total":
        value = count_no_minus_one(w) if args.no_minus_one else count_total(w)
    else:
        value = (
            count_basis_no_minus_one(w)
            if args.no_minus_one
            else len(lyndon_words(w, allow_minus_one=True))
        )
    _emit(
        {"weight": w, "kind": args.kind, "no_minus_one": args.no_minus_one, "value": value},
        args.json,
        [str(value)],
    )


def _eval_one(task) -> dict:
    index, n, mode, precision = task
    v = IndexVector.parse(index)
    if mode == "exact":
        val = eval_exact(v, n)
        return {"index": index, "n": n, "mode": mode, "value": str(val)}
    if mode == "oracle":
        val = eval_oracle(v, n)
        return {"index": index, "n": n, "mode": mode, "value": str(val)}
    fe = eval_float(v, n, precision=precision)
    return {
        "index": index,
        "n": n,
        "mode": mode,
        "value": fe.decimal_str,
        "error_bound": fe.error_bound,
        "precision_bits": fe.precision_bits,
    }


def _cmd_eval(args) -> None:
    tasks = [(idx, args.n, args.mode, args.precision) for idx in args.index]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_eval_one, tasks))
    else:
        results = [_eval_one(t) for t in tasks]
    payload = {"results": results} if len(results) > 1 else results[0]
    _emit(payload, args.json, [r["value"] for r in results])


def _verify_expr(expr: HarmonicExpr, reference, n_max: int) -> bool:
    cache = EvalCache()
    for n in range(1, n_max + 1):
        if expr.eval_exact_at(n, cache=cache) != reference(n, cache):
            return False
    return True


def _cmd_product(args) -> None:
    a = IndexVector.parse(args.a)
    b = IndexVector.parse(args.b)
    expr = stuffle_product(a, b)
    lines = [str(expr)]
    verified = None
    if args.verify_n:
        verified = _verify_expr(
            expr,
            lambda n, c: eval_exact(a, n, cache=c) * eval_exact(b, n, cache=c),
            args.verify_n,
        )
        lines.append(
            f"verified: exact, N=1..{args.verify_n}" if verified else "VERIFICATION FAILED"
        )
        if not verified:
            raise AssertionError("stuffle identity failed exact verification")
    payload = {"a": args.a, "b": args.b, "expression": expr.to_json_obj()}
    if verified is not None:
        payload["verified_n"] = args.verify_n
    _emit(payload, args.json, lines)


def _cmd_reduce(args) -> None:
    v = IndexVector.parse(args.index)
    expr = reduce_to_basis(v, allow_heavy=args.allow_heavy)
    lines = [str(expr)]
    verified = None
    if args.verify_n:
        verified = _verify_expr(
            expr, lambda n, c: eval_exact(v, n, cache=c), args.verify_n
        )
        lines.append(
            f"verified: exact, N=1..{args.verify_n}" if verified else "VERIFICATION FAILED"
        )
        if not verified:
            raise AssertionError("reduction failed exact verification")
    payload = {"index": args.index, "expression": expr.to_json_obj()}
    if verified is not None:
        payload["verified_n"] = args.verify_n
    _emit(payload, args.json, lines)


def _cmd_continue(args) -> None:
    z = parse_complex(args.z)
    value = evaluate_complex(args.fn, z)
    _emit(
        {
            "fn": args.fn,
            "z": {"re": z.real, "im": z.imag},
            "value": {"re": value.real, "im": value.imag},
            "precision_bits": 53,
        },
        args.json,
        [format_complex(value)],
    )


def _cmd_limit(args) -> None:
    v = IndexVector.parse(args.index)
    result = limit_value(v)
    if result.kind == "divergent":
        _emit({"index": args.index, "kind": "divergent"}, args.json, ["divergent"])
    else:
        _emit(
            {
                "index": args.index,
                "kind": "finite",
                "value": result.value,
                "error_estimate": result.error_estimate,
            },
            args.json,
            [f"{result.value!r} (error estimate {result.error_estimate:.2e})"],
        )


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hsums", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hsums {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("table", _cmd_table, help="cumulative reduction tables")
    p.add_argument("--max-weight", type=int, default=6)

    p = add("enumerate", _cmd_enumerate, help="index vectors of a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--no-minus-one", action="store_true")

    p = add("count", _cmd_count, help="counting formulas")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--no-minus-one", action="store_true")
    p.add_argument("--kind", choices=("total", "basis"), default="total")

    p = add("eval", _cmd_eval, help="evaluate a sum at integer argument")
    p.add_argument("--index", action="append", required=True,
                   help="index vector 'a1,a2,...'; repeat for batch evaluation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "float", "oracle"), default="exact")
    p.add_argument("--precision", type=int, default=53, help="bits (float mode)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for batches")

    p = add("product", _cmd_product, help="stuffle product of two sums")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--verify-n", type=int, default=0)

    p = add("reduce", _cmd_reduce, help="rewrite in the Lyndon basis")
    p.add_argument("--index", required=True)
    p.add_argument("--allow-heavy", action="store_true", help="enable weight 6")
    p.add_argument("--verify-n", type=int, default=0)

    p = add("continue", _cmd_continue, help="analytic continuation at complex z")
    p.add_argument("--fn", required=True)
    p.add_argument("--z", required=True, help='complex argument "a+bi"')

    p = add("limit", _cmd_limit, help="N -> infinity limit")
    p.add_argument("--index", required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
        return 0
    except HsumsError as exc:
        payload = {"schema": SCHEMA, "status": exc.status, "message": str(exc)}
        as_json = bool(argv and "--json" in argv) or "--json" in sys.argv
        if as_json:
            print(json.dumps(payload, sort_keys=True, indent=2))
        else:
            print(f"error ({exc.status}): {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
