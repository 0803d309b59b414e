"""Command-line front end: ``symtensor <subcommand> ...`` with JSON on stdout.

Exit codes: 0 success, 2 malformed arguments or input files, 3 order or
weight mismatch, 4 size cap exceeded, 5 verification failure. Errors are
written to stderr as ``{"error": code, "message": text}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .derivatives import METHODS, derivative_values, methods_agree
from .errors import DegenerateOrderWarning, MethodDisagreementError, ShapeError, SizeLimitError
from .immanant import immanant, immanantal_adjoint, laplace_expansion
from .indexcomb import build_basis_index_set
from .serialize import load_matrix, matrix_entries_to_json, matrix_to_json, scalar_to_json
from .symgroup import Partition, character_table
from .tensorpower import k_chi, k_chi_derivative, symmetric_power_basis
from .verify import SUITES, run_suite

EXIT_PARSE, EXIT_MISMATCH, EXIT_SIZE, EXIT_VERIFY = 2, 3, 4, 5


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def thread_cap() -> int:
    raw = os.environ.get("SYMTENSOR_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"SYMTENSOR_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"SYMTENSOR_THREADS must be a positive integer, got {raw!r}")
    return value


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _index_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}") from None


def _load(path: str, exact_mode: bool):
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    try:
        return load_matrix(path, exact_mode)
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        if isinstance(exc, ShapeError):
            raise
        raise UsageError(f"cannot read matrix {path}: {exc}") from None


def _directions(args, exact_mode: bool):
    paths = [p for p in args.directions.split(",") if p]
    dirs = [_load(p, exact_mode) for p in paths]
    if len(dirs) == 1 and args.order > 1:
        dirs = dirs * args.order
    if len(dirs) != args.order:
        raise UsageError(f"--order {args.order} needs 1 or {args.order} direction files, got {len(dirs)}")
    return dirs


def cmd_char_table(args):
    table = character_table(args.m)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition"] + [str(mu) for mu in table.cycle_types])
        for lam, row in zip(table.partitions, table.values):
            writer.writerow([str(lam)] + [int(v) for v in row])
        return buf.getvalue()
    rows = [{"partition": list(lam.parts),
             "values": {str(mu): int(v) for mu, v in zip(table.cycle_types, row)}}
            for lam, row in zip(table.partitions, table.values)]
    return {"m": table.m, "rows": rows}


def cmd_index_sets(args):
    b = build_basis_index_set(args.partition, args.m, args.n)
    as_lists = lambda maps: [list(a) for a in maps]  # noqa: E731
    return {"omega": as_lists(b.omega), "delta": as_lists(b.delta),
            "delta_bar": as_lists(b.delta_bar), "delta_hat": as_lists(b.delta_hat)}


def cmd_immanant(args):
    A = _load(args.matrix, args.exact)
    return {"value": scalar_to_json(immanant(A, args.partition))}


def cmd_adjoint(args):
    A = _load(args.matrix, args.exact)
    return {"matrix": matrix_to_json(immanantal_adjoint(A, args.partition))}


def cmd_laplace(args):
    A = _load(args.matrix, args.exact)
    if args.k is not None and args.k != len(args.alpha):
        raise ShapeError(f"--k {args.k} does not match --alpha of length {len(args.alpha)}")
    exp = laplace_expansion(A, args.partition, args.alpha)
    return {"alpha": list(exp.alpha), "value": scalar_to_json(exp.total),
            "summands": [{"beta": list(t.beta), "matrix": matrix_to_json(t.matrix),
                          "value": scalar_to_json(t.value)} for t in exp.terms]}


def cmd_derivative(args):
    A = _load(args.matrix, args.exact)
    dirs = _directions(args, args.exact)
    methods = METHODS if args.method == "all" else (args.method,)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateOrderWarning)
        values = derivative_values(A, dirs, args.partition, methods)
    out = {"value": scalar_to_json(values[methods[0]])}
    if args.method == "all":
        agree = methods_agree(values, args.exact)
        out["values"] = {k: scalar_to_json(v) for k, v in values.items()}
        out["methods_agree"] = agree
        if not agree:
            print(json.dumps(out), file=sys.stdout)
            raise VerificationFailed(f"derivative methods disagree: {out['values']}")
    out["degenerate"] = any(issubclass(w.category, DegenerateOrderWarning) for w in caught)
    return out


def _tensor_header(args, A):
    index_set, _ = symmetric_power_basis(args.partition, args.m, A.shape[0])
    return [list(a) for a in index_set.delta_hat]


def cmd_tensor_power(args):
    A = _load(args.matrix, args.exact)
    K = k_chi(A, args.partition, args.m)
    return {"delta_hat": _tensor_header(args, A), "matrix": matrix_entries_to_json(K)}


def cmd_tensor_power_derivative(args):
    A = _load(args.matrix, args.exact)
    dirs = _directions(args, args.exact)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateOrderWarning)
        D = k_chi_derivative(A, dirs, args.partition, args.m)
    return {"delta_hat": _tensor_header(args, A), "matrix": matrix_entries_to_json(D),
            "degenerate": any(issubclass(w.category, DegenerateOrderWarning) for w in caught)}


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    workers = min(thread_cap(), len(names))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_suite, names))
    else:
        results = [run_suite(name) for name in names]
    checks = [c for batch in results for c in batch]
    report = "\n".join(c.line() for c in checks)
    failed = sum(not c.passed for c in checks)
    report += f"\n{len(checks) - failed}/{len(checks)} checks passed\n"
    if failed:
        sys.stdout.write(report)
        raise VerificationFailed(f"{failed} verification checks failed")
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symtensor", description="Immanants, their derivatives and symmetric tensor powers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    mode = _Parser(add_help=False)
    mode.add_argument("--mode", choices=("exact", "float"), default="exact",
                      help="Gaussian-rational or complex floating-point arithmetic")
    mode.add_argument("--output", help="write JSON here instead of stdout")

    p = sub.add_parser("char-table", parents=[mode], help="character table of S_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("index-sets", parents=[mode], help="Omega, Delta, Delta-bar, Delta-hat")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.set_defaults(func=cmd_index_sets)

    for name, func, text in [("immanant", cmd_immanant, "immanant of a matrix"),
                             ("adjoint", cmd_adjoint, "immanantal adjoint")]:
        p = sub.add_parser(name, parents=[mode], help=text)
        p.add_argument("--matrix", required=True)
        p.add_argument("--partition", type=_partition, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("laplace", parents=[mode], help="Laplace expansion along rows alpha")
    p.add_argument("--matrix", required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--alpha", type=_index_list, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_laplace)

    p = sub.add_parser("derivative", parents=[mode], help="k-th directional derivative of an immanant")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--directions", required=True, help="comma list of matrix files")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="first")
    p.set_defaults(func=cmd_derivative)

    p = sub.add_parser("tensor-power", parents=[mode], help="m-th chi-symmetric tensor power")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_tensor_power)

    p = sub.add_parser("tensor-power-derivative", parents=[mode], help="k-th derivative of the tensor power")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--directions", required=True)
    p.set_defaults(func=cmd_tensor_power_derivative)

    p = sub.add_parser("verify", parents=[mode], help="run the oracle comparison suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def _fail(code: str, message: str, status: int) -> int:
    print(json.dumps({"error": code, "message": message}), file=sys.stderr)
    return status


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.exact = args.mode == "exact"
        thread_cap()
        if getattr(args, "order", 1) < 1:
            raise UsageError("--order must be at least 1")
        result = args.func(args)
    except UsageError as exc:
        return _fail("parse_error", str(exc), EXIT_PARSE)
    except ShapeError as exc:
        return _fail("dimension_mismatch", str(exc), EXIT_MISMATCH)
    except SizeLimitError as exc:
        return _fail("size_cap", str(exc), EXIT_SIZE)
    except (VerificationFailed, MethodDisagreementError) as exc:
        return _fail("verification_failed", str(exc), EXIT_VERIFY)
    text = result if isinstance(result, str) else json.dumps(result) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
