"""Command-line interface.

Examples::

    carrychain carries-matrix --base 2 --addends 3 --format json
    carrychain stationary --addends 3
    carrychain phib-apply --numerator 1 --pole-order 3 --base 2
    carrychain converge --numerator 1 --pole-order 4 --base 2 --iterations 10 --format csv
    carrychain simulate --base 2 --addends 3 --columns 40 --seed 7,8 --jobs 2

All numbers are printed exactly as ``p/q``.  ``--approx`` adds float fields to
JSON output.  Exit status: 0 success, 1 invalid mathematical input, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .carries import carries_matrix_holte, carries_stationary, matrix_to_csv
from .errors import ConsistencyError, DomainError, ShapeError
from .exact import Polynomial, RatMatrix, format_rational, parse_rational
from .phib import (ClassAFunction, convergence_trace, phi_b_iterate, phi_b_limit,
                   phi_b_matrix)
from .simulator import (SimulationConfig, empirical_transition, occupation_distribution,
                        simulate_many)
from .veronese import (HilbertFunction, carries_submatrix_check, veronese_matrix,
                       veronese_transform)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _floats(values) -> list[float]:
    return [float(v) for v in values]


def _matrix_floats(m: RatMatrix) -> list[list[float]]:
    return [_floats(r) for r in m.to_rows()]


# argparse type callbacks: raising ArgumentTypeError gives exit status 2

def _polynomial_arg(text: str) -> Polynomial:
    try:
        return Polynomial(parse_rational(c) for c in text.split(","))
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_arg(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    return parse


def _seeds_arg(text: str) -> list[int]:
    try:
        seeds = [int(s) for s in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must be integers: {text!r}") from None
    if any(not 0 <= s < 1 << 64 for s in seeds):
        raise argparse.ArgumentTypeError("seeds must be unsigned 64-bit integers")
    return seeds


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carrychain",
        description="Exact carries chain, Eulerian polynomials and the Phi_b operator.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help, *, base=False, addends=False, numerator=False, pole=False,
            iterations=False, fmt=False):
        p = sub.add_parser(name, help=help)
        if base:
            p.add_argument("--base", type=_int_arg(1), required=True)
        if addends:
            p.add_argument("--addends", type=_int_arg(1), required=True)
        if numerator:
            p.add_argument("--numerator", type=_polynomial_arg, required=True,
                           help="ascending comma-separated coefficients, e.g. 1,0,-3/2")
        if pole:
            p.add_argument("--pole-order", type=_int_arg(0), required=True)
        if iterations:
            p.add_argument("--iterations", type=_int_arg(0), required=True)
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--approx", action="store_true", help="add float fields to JSON output")
        return p

    add("carries-matrix", "base-b carries transition matrix", base=True, addends=True, fmt=True)
    add("stationary", "Eulerian stationary law of the carries chain", addends=True)
    add("phib-apply", "apply Phi_b once to h(x)/(1-x)^n",
        numerator=True, pole=True, base=True)
    add("phib-iterate", "apply Phi_b repeatedly",
        numerator=True, pole=True, base=True, iterations=True)
    add("phib-limit", "limit of the normalized iterates of Phi_b", numerator=True, pole=True)
    add("converge", "max-norm distances of normalized iterates to the limit",
        numerator=True, pole=True, base=True, iterations=True, fmt=True)
    add("veronese", "numerator of the decimated series of h(x)/(1-x)^p, p = pole order",
        numerator=True, pole=True, base=True)
    add("veronese-matrix", "matrix of the decimation map for pole order p",
        pole=True, base=True, fmt=True)
    add("submatrix-check", "compare the interior of the decimation matrix with K_b",
        pole=True, base=True)
    for name, help in (("simulate", "simulate carries by random digit addition"),
                       ("empirical", "empirical transition and occupation of a simulation")):
        p = add(name, help, base=True, addends=True, fmt=(name == "empirical"))
        p.add_argument("--columns", type=_int_arg(1), required=True)
        p.add_argument("--seed", type=_seeds_arg, default=[0],
                       help="one seed, or a comma-separated list of independent seeds")
        p.add_argument("--jobs", type=_int_arg(1), default=1)
    return parser


def _hilbert_n(pole_order: int) -> int:
    if pole_order < 1:
        raise DomainError(f"pole order of a Hilbert series must be >= 1, got {pole_order}")
    return pole_order - 1


def _class_a(args) -> ClassAFunction:
    return ClassAFunction(args.numerator, args.pole_order)


def _function_out(f: ClassAFunction, approx: bool) -> str:
    out = f.to_dict()
    if approx:
        out["approx"] = _floats(f.numerator)
    return _dump(out)


def _execute(args) -> str:
    cmd = args.command
    if cmd == "carries-matrix":
        k = carries_matrix_holte(args.base, args.addends)
        if args.format == "csv":
            return k.to_csv()
        out = k.to_dict()
        if args.approx:
            out["approx"] = _matrix_floats(k.matrix)
        return _dump(out)

    if cmd == "stationary":
        pi = carries_stationary(args.addends)
        exact = [format_rational(x) for x in pi]
        return _dump({"stationary": exact, "approx": _floats(pi)} if args.approx else exact)

    if cmd == "phib-apply":
        return _function_out(phi_b_matrix(_class_a(args), args.base), args.approx)

    if cmd == "phib-iterate":
        return _function_out(phi_b_iterate(_class_a(args), args.base, args.iterations),
                             args.approx)

    if cmd == "phib-limit":
        return _function_out(phi_b_limit(_class_a(args)), args.approx)

    if cmd == "converge":
        d = convergence_trace(_class_a(args), args.base, args.iterations)
        if args.format == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["r", "distance"])
            for r, x in enumerate(d, start=1):
                w.writerow([r, format_rational(x)])
            return buf.getvalue()
        out = {"base": args.base, "pole_order": args.pole_order,
               "distances": [format_rational(x) for x in d]}
        if args.approx:
            out["approx"] = _floats(d)
        return _dump(out)

    if cmd == "veronese":
        f = HilbertFunction(args.numerator, _hilbert_n(args.pole_order))
        g = veronese_transform(f, args.base)
        out = g.to_dict()
        if args.approx:
            out["approx"] = _floats(g.numerator)
        return _dump(out)

    if cmd == "veronese-matrix":
        v = veronese_matrix(_hilbert_n(args.pole_order), args.base)
        if args.format == "csv":
            return matrix_to_csv(v.matrix)
        out = v.to_dict()
        if args.approx:
            out["approx"] = _matrix_floats(v.matrix)
        return _dump(out)

    if cmd == "submatrix-check":
        n = _hilbert_n(args.pole_order)
        result = carries_submatrix_check(n, args.base)
        out = {"base": args.base, "n": n, "ok": result.ok}
        if result.witness is not None:
            i, j, found, expected = result.witness
            out["witness"] = {"row": i, "col": j, "found": format_rational(found),
                              "expected": format_rational(expected)}
        return _dump(out)

    if cmd in ("simulate", "empirical"):
        configs = [SimulationConfig(args.base, args.addends, args.columns, s) for s in args.seed]
        runs = simulate_many(configs, jobs=args.jobs)
        if cmd == "simulate":
            dicts = [r.to_dict() for r in runs]
            return _dump(dicts[0] if len(dicts) == 1 else dicts)
        results = []
        for run in runs:
            emp = empirical_transition(run)
            if args.format == "csv":
                results.append(matrix_to_csv(emp.matrix))
                continue
            occ = occupation_distribution(run)
            out = {"config": run.to_dict()["config"],
                   "transition": emp.matrix.to_json(),
                   "unvisited": list(emp.unvisited),
                   "occupation": [format_rational(x) for x in occ]}
            if args.approx:
                out["transition_approx"] = _matrix_floats(emp.matrix)
                out["occupation_approx"] = _floats(occ)
            results.append(out)
        if args.format == "csv":
            return "\n".join(results)
        return _dump(results[0] if len(results) == 1 else results)

    raise AssertionError(f"unhandled command {cmd}")  # pragma: no cover


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = _execute(args)
    except (DomainError, ShapeError) as exc:
        print(f"carrychain {args.command}: error: {exc}", file=stderr)
        return 1
    except ConsistencyError as exc:  # pragma: no cover - a bug, not bad input
        print(f"carrychain {args.command}: internal error: {exc}", file=stderr)
        return 1
    stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
