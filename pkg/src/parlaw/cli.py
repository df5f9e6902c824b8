"""Command-line entry point.

Exit codes: 0 verified, 1 identity violation, 2 input or usage error.

Input documents are JSON objects ``{"vectors": [[...], ...]}`` whose entries
are integers, decimal numbers or ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import combinatorics as cb
from .errors import InputError, ParlawError
from .exterior import EXACT, FLOAT, MODES, format_scalar, k_measure_sq
from .harness import DEFAULT_HIGH, DEFAULT_LOW, InstanceSpec, random_generators, sweep
from .parallelotope import (
    DEFAULT_TOL,
    Generators,
    diagonal_measure_sq,
    face_measure_sq,
    verify,
    verify_all,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _entry_is_decimal(x) -> bool:
    if isinstance(x, str):
        return "/" not in x and any(c in x for c in ".eE")
    return isinstance(x, float)


def read_document(path: str) -> list:
    try:
        with open(path) as fh:
            doc = json.load(fh, parse_float=str)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc
    if not isinstance(doc, dict) or "vectors" not in doc:
        raise InputError(f'{path}: expected an object with a "vectors" key')
    rows = doc["vectors"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(f"{path}: vectors must be a list of rows")
    if len(rows) < 2:
        raise InputError(f"{path}: need at least 2 vectors, got {len(rows)}")
    if len({len(r) for r in rows}) != 1 or not rows[0]:
        raise InputError(f"{path}: ragged rows (lengths {[len(r) for r in rows]})")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise InputError(f"{path}: non-numeric entry {x!r}")
            if isinstance(x, str):
                try:
                    Fraction(x.strip())
                except (ValueError, ZeroDivisionError):
                    raise InputError(f"{path}: cannot parse entry {x!r}") from None
    return rows


def load_generators(path: str, mode: str | None = None) -> Generators:
    rows = read_document(path)
    if mode is None:
        mode = FLOAT if any(_entry_is_decimal(x) for r in rows for x in r) else EXACT
    return Generators.from_rows(rows, mode)


def write_document(path: str, g: Generators) -> None:
    rows = [[int(x) if Fraction(x).denominator == 1 else format_scalar(x) for x in r] for r in g.rows()]
    with open(path, "w") as fh:
        json.dump({"vectors": rows}, fh)
        fh.write("\n")


def _table(rows: list, columns: list) -> str:
    cells = [[str(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _csv(rows: list, columns: list) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def render(rows: list, fmt: str, columns: list | None = None, extra: dict | None = None) -> str:
    columns = columns or (list(rows[0]) if rows else [])
    if fmt == "json":
        return json.dumps(dict(rows=rows, **(extra or {})), indent=2)
    if fmt == "csv":
        return _csv(rows, columns)
    return _table(rows, columns)


REPORT_COLUMNS = [
    "N", "n", "k", "mode", "face_count", "diagonal_count", "face_sq_sum", "diag_sq_sum",
    "face_mean_sq", "diag_mean_sq", "ratio_sq", "ratio", "expected", "residual", "passed",
]


def cmd_verify(args) -> int:
    g = load_generators(args.input, args.mode)
    if args.all_k:
        reports = verify_all(g, args.tol)
    else:
        if args.k is None:
            raise InputError("give -k K or --all-k")
        reports = [verify(g, args.k, args.tol)]
    rows = [r.as_dict() for r in reports]
    ok = all(r.passed for r in reports)
    print(render(rows, args.format, REPORT_COLUMNS, {"ok": ok}))
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_enumerate(args) -> int:
    g = load_generators(args.input, args.mode)
    N, k = g.N, args.k
    rows = []
    if args.what == "faces":
        for f in cb.face_labels(N, k):
            row = {"subset": _fmt_set(f.subset), "translation": "".join(map(str, f.translation))}
            if args.measures:
                row["measure_sq"] = format_scalar(face_measure_sq(g, f))
            rows.append(row)
        expected, closed = cb.count_faces(N, k), f"2^{N - k} * C({N},{k})"
    else:
        for d in cb.diagonal_labels(N, k):
            row = {"t": _fmt_set(d.t), "part1": _fmt_set(d.part1), "part2": _fmt_set(d.part2)}
            if args.measures:
                row["measure_sq"] = format_scalar(diagonal_measure_sq(g, d))
            rows.append(row)
        expected, closed = cb.count_diagonals(N, k), f"2^{N - k} * C({N},{N - k + 1})"
    count_line = f"{len(rows)} = {closed}"
    ok = len(rows) == expected
    if not ok:
        count_line = f"{len(rows)} != {expected} = {closed}"
    if args.format == "json":
        print(render(rows, "json", extra={"count": len(rows), "closed_form": closed, "expected": expected}))
    else:
        print(render(rows, args.format))
        print(("# " if args.format == "csv" else "") + count_line)
    return EXIT_OK if ok else EXIT_VIOLATION


def _fmt_set(idx) -> str:
    return "{" + ",".join(map(str, idx)) + "}"


def cmd_random(args) -> int:
    spec = InstanceSpec(N=args.N, n=args.n, entry_low=args.low, entry_high=args.high,
                        seed=args.seed, mode=EXACT)
    g = random_generators(spec)
    try:
        write_document(args.out, g)
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror}") from exc
    print(args.out)
    print(f"gram_det={format_scalar(k_measure_sq(g.vectors))}")
    return EXIT_OK


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError(f"bad N range {text!r}; use LO..HI") from None
    if lo > hi:
        raise InputError(f"empty N range {text!r}")
    return range(lo, hi + 1)


def cmd_sweep(args) -> int:
    mode = args.mode or EXACT
    summary = sweep(parse_range(args.range), args.trials, args.seed, mode, args.tol, args.workers)
    if args.format == "json":
        print(summary.to_json())
    else:
        rows = summary.as_dict()["cells"]
        print(render(rows, args.format, ["N", "k", "expected", "trials", "max_abs_residual"]))
        for f in summary.failures:
            print(("# " if args.format == "csv" else "") + "FAIL " + json.dumps(f, sort_keys=True))
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--mode", choices=MODES, default=None,
                        help="arithmetic mode (default: exact unless the input has decimals)")
    shared.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="relative tolerance for float mode (default: %(default)g)")
    shared.add_argument("--format", choices=("json", "csv", "table"), default="table")
    shared.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed")

    p = argparse.ArgumentParser(prog="parlaw", description="Parallelotope face/diagonal measure checks.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[shared], help="check the diagonal/face mean-square ratio")
    v.add_argument("input")
    grp = v.add_mutually_exclusive_group()
    grp.add_argument("-k", type=int)
    grp.add_argument("--all-k", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", parents=[shared], help="list k-faces or k-diagonals")
    e.add_argument("input")
    e.add_argument("-k", type=int, required=True)
    e.add_argument("--what", choices=("faces", "diagonals"), default="faces")
    e.add_argument("--measures", action="store_true", help="include squared measures")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("random", parents=[shared], help="write a random independent instance")
    r.add_argument("N", type=int)
    r.add_argument("n", type=int)
    r.add_argument("-o", "--out", required=True)
    r.add_argument("--low", type=int, default=DEFAULT_LOW)
    r.add_argument("--high", type=int, default=DEFAULT_HIGH)
    r.set_defaults(func=cmd_random)

    s = sub.add_parser("sweep", parents=[shared], help="verify random instances over a range of N")
    s.add_argument("range", help="N range, e.g. 2..6")
    s.add_argument("--trials", type=int, default=5)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParlawError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
