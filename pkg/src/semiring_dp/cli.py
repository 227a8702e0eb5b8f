"""Command-line front end: semiring-dp <segment|align|events|lis|bench>.

Results are emitted as a canonical JSON document (sorted keys, floats
at 12 significant digits) so outputs are byte-stable under a
parse/re-serialize round trip.  Exit codes: 0 success, 1 usage error,
2 data error, 3 oracle-check failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from .algorithms import (
    AlignmentProblem,
    SegmentationProblem,
    combinations,
    events_m_of_n,
    nw_align,
    nw_align_max_constrained,
    nw_align_sum_constrained,
    segment_opt,
)
from .lifting import max_count_algebra, min_count_algebra, ordering_algebra, subset_size_algebra
from .pathsets import (
    PathBudgetError,
    PathSet,
    evaluate_paths,
    filter_paths,
    generator_semiring,
    singleton_weights,
)
from .regression import (
    SegmentCostModel,
    SegmentCosts,
    TimeSeries,
    piecewise_values,
    segment_series,
)
from .semirings import (
    Scored,
    Semiring,
    instrumented,
    max_product_semiring,
    maxplus_semiring,
    minplus_semiring,
    probability_semiring,
    standard_semirings,
    viterbi_simple_semiring,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_ORACLE = 3

VERIFY_PATH_CAP = 20_000


class DataError(Exception):
    """Malformed or out-of-range input data."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# --- canonical JSON ----------------------------------------------------------


def format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"cannot serialize {x!r} in a result document")
    return f"{x:.12g}"


def canonical_json(doc) -> str:
    """Serialize with sorted keys and 12-significant-digit floats.

    Parsing the output and re-serializing reproduces it byte for byte,
    which makes documents diffable and golden-testable.
    """
    pieces: list[str] = []

    def emit(x):
        if x is None:
            pieces.append("null")
        elif x is True:
            pieces.append("true")
        elif x is False:
            pieces.append("false")
        elif isinstance(x, float):
            pieces.append(format_float(x))
        elif isinstance(x, int):
            pieces.append(str(x))
        elif isinstance(x, str):
            pieces.append(json.dumps(x))
        elif isinstance(x, dict):
            pieces.append("{")
            for pos, key in enumerate(sorted(x)):
                if pos:
                    pieces.append(",")
                pieces.append(json.dumps(str(key)))
                pieces.append(":")
                emit(x[key])
            pieces.append("}")
        elif isinstance(x, (list, tuple)):
            pieces.append("[")
            for pos, item in enumerate(x):
                if pos:
                    pieces.append(",")
                emit(item)
            pieces.append("]")
        else:
            raise TypeError(f"cannot serialize {type(x).__name__} in a result document")

    emit(doc)
    return "".join(pieces)


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


# --- input readers -----------------------------------------------------------


def read_numeric_column(path: str, *, header: bool = False) -> list[float]:
    """One number per line; '#'-prefixed lines are comments."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    values: list[float] = []
    skip_pending = header
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if skip_pending:
            skip_pending = False
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise DataError(f"{path}:{lineno}: not a number: {line!r}") from None
    return values


def read_sequence(path: str, *, tokens: bool = False) -> list[str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    if tokens:
        return text.split()
    return [ch for ch in text if not ch.isspace()]


# --- semiring selection ------------------------------------------------------


def resolve_semiring(name: str) -> tuple[Semiring, Semiring, bool]:
    """Return (semiring to run, scalar base for scoring, tupled?)."""
    catalog = standard_semirings()
    if name.startswith("viterbi:"):
        base_name = name.split(":", 1)[1]
        base = catalog.get(base_name)
        if base is None:
            raise DataError(f"unknown base semiring {base_name!r} in {name!r}")
        return viterbi_simple_semiring(base), base, True
    if name in catalog:
        s = catalog[name]
        return s, s, False
    raise DataError(f"unknown semiring {name!r} (choices: {', '.join(catalog)}, viterbi:<base>)")


def _unit_weighted(name: str) -> bool:
    # counting-style semirings grade structure, not cost
    return name in ("count", "bool")


# --- oracle checks -----------------------------------------------------------


def _oracle_skipped(reason: str) -> dict:
    return {"status": "skipped", "reason": reason}


def _oracle_verdict(base: Semiring, got, want) -> dict:
    if base.eq(got, want):
        return {"status": "pass", "reason": None}
    return {"status": "fail", "reason": f"direct {got!r} != exhaustive {want!r}"}


def _verify_segment(n, scalar_weight, constraint, base, got) -> dict:
    if 2 ** (n - 1) > VERIFY_PATH_CAP:
        return _oracle_skipped(f"2^{n - 1} covers exceed the {VERIFY_PATH_CAP}-path cap")
    gen = generator_semiring()
    problem = SegmentationProblem(n, lambda i, j: singleton_weights((i, j)))
    try:
        paths = segment_opt(problem, gen)
        if constraint is not None:
            kind, lo, hi = constraint
            if kind == "count":
                alg = subset_size_algebra(
                    hi, label_map=lambda e: 1, accept=lambda m: lo <= m <= hi
                )
            else:  # min-length, >= semantics
                alg = min_count_algebra(
                    n, label_map=lambda e: e[1] - e[0] + 1, accept=lambda m: m >= lo
                )
            paths = filter_paths(alg, paths)
        want = evaluate_paths(base, scalar_weight, paths)
    except PathBudgetError as exc:
        return _oracle_skipped(str(exc))
    return _oracle_verdict(base, got, want)


def _verify_align(p_labels, constraint, base, scalar_weight, got) -> dict:
    n, m = p_labels.rows, p_labels.cols
    from .algorithms import delannoy

    if delannoy(n, m) > VERIFY_PATH_CAP:
        return _oracle_skipped(f"{delannoy(n, m)} alignments exceed the {VERIFY_PATH_CAP}-path cap")
    gen = generator_semiring()
    try:
        paths = nw_align(
            AlignmentProblem(n, m, lambda i, j: singleton_weights((i, j))), gen
        )
        if constraint is not None:
            kind, cap = constraint
            gap = lambda e: abs(e[0] - e[1])
            if kind == "sum":
                alg = subset_size_algebra(cap, label_map=gap, accept=lambda t: t <= cap)
            else:
                alg = max_count_algebra(
                    max(n, m, cap), label_map=gap, accept=lambda t: t <= cap
                )
            paths = filter_paths(alg, paths)
        want = evaluate_paths(base, scalar_weight, paths)
    except PathBudgetError as exc:
        return _oracle_skipped(str(exc))
    return _oracle_verdict(base, got, want)


def _verify_events(probs, occurrences, base, scalar_weight, got) -> dict:
    n = len(probs)
    if 2**n > VERIFY_PATH_CAP:
        return _oracle_skipped(f"2^{n} outcome sequences exceed the {VERIFY_PATH_CAP}-path cap")
    gen = generator_semiring()
    try:
        # generate every outcome sequence, then filter by occurrence count
        paths = gen.one
        for k in range(1, n + 1):
            branch = gen.add(singleton_weights((0, k)), singleton_weights((1, k)))
            paths = gen.mul(paths, branch)
        alg = subset_size_algebra(
            max(n, 1), label_map=lambda e: e[0], accept=lambda m: m == occurrences
        )
        paths = filter_paths(alg, paths)
        want = evaluate_paths(base, scalar_weight, paths)
    except PathBudgetError as exc:
        return _oracle_skipped(str(exc))
    return _oracle_verdict(base, got, want)


def _verify_lis(values, relation, got_length) -> dict:
    n = len(values)
    if n == 0:
        return {"status": "pass", "reason": "empty input is trivially length 0"}
    if 2**n > VERIFY_PATH_CAP:
        return _oracle_skipped(f"2^{n} subsequences exceed the {VERIFY_PATH_CAP}-path cap")
    from .algorithms import nonempty_subsequences

    gen = generator_semiring()
    try:
        paths = nonempty_subsequences(n, gen, lambda k: singleton_weights(k))
        kept = filter_paths(ordering_algebra(values, relation), paths)
        base = maxplus_semiring()
        want = evaluate_paths(base, lambda k: 1.0, kept)
    except PathBudgetError as exc:
        return _oracle_skipped(str(exc))
    want_length = 0 if want == -math.inf else int(want)
    if want_length == got_length:
        return {"status": "pass", "reason": None}
    return {"status": "fail", "reason": f"direct {got_length} != exhaustive {want_length}"}


# --- command handlers --------------------------------------------------------


def _make_doc(command, config, result, witness, counts, elapsed, oracle) -> dict:
    return {
        "command": command,
        "config": config,
        "result": _jsonable(result),
        "witness": _jsonable(witness),
        "op_counts": {"add": counts.add, "mul": counts.mul},
        "wall_time_s": elapsed,
        "oracle_check": oracle,
    }


def cmd_segment(args) -> tuple[dict, list | None]:
    values = read_numeric_column(args.input, header=args.header)
    try:
        ts = TimeSeries(values)
        model = SegmentCostModel(kind=args.model, regularization=args.lam)
    except ValueError as exc:
        raise DataError(str(exc)) from None
    n = len(ts)

    constraint = None
    if args.count is not None:
        if not 1 <= args.count <= n:
            raise DataError(f"--count {args.count} infeasible for {n} samples")
        constraint = ("count", args.count, args.count)
    elif args.count_range is not None:
        lo, hi = args.count_range
        if not 1 <= lo <= hi <= n:
            raise DataError(f"--count-range {lo} {hi} infeasible for {n} samples")
        constraint = ("count", lo, hi)
    elif args.min_length is not None:
        if not 1 <= args.min_length <= n:
            raise DataError(f"--min-length {args.min_length} infeasible for {n} samples")
        constraint = ("min-length", args.min_length, args.min_length)

    run_s, base, tupled = resolve_semiring(args.semiring)
    costs = SegmentCosts(ts, model)
    if _unit_weighted(base.name):
        scalar_weight = lambda e: base.one
    else:
        scalar_weight = lambda e: costs.weight(e[0], e[1])

    counted, counts = instrumented(run_s)
    if tupled:
        weight = lambda i, j: Scored(scalar_weight((i, j)), ((i, j),))
    else:
        weight = lambda i, j: scalar_weight((i, j))
    problem = SegmentationProblem(n, weight)

    start = time.perf_counter()
    if constraint is None:
        value = segment_opt(problem, counted)
    elif constraint[0] == "count":
        from .algorithms import segment_fixed_count

        value = segment_fixed_count(problem, constraint[1], constraint[2], counted)
    else:
        from .algorithms import segment_min_length

        value = segment_min_length(problem, constraint[1], counted, at_least=True)
    elapsed = time.perf_counter() - start

    witness = None
    if tupled:
        score, witness_raw = value.score, value.witness
        if base.eq(score, base.zero):
            raise DataError("constraint infeasible: no segmentation satisfies it")
        witness = [list(seg) for seg in witness_raw]
        result = score
    else:
        result = value

    oracle = _oracle_skipped("not requested")
    if args.verify:
        oracle = _verify_segment(
            n, scalar_weight, constraint, base, result if not tupled else value.score
        )

    config = {
        "input": args.input,
        "semiring": args.semiring,
        "model": args.model,
        "lambda": args.lam,
        "constraint": None
        if constraint is None
        else {"kind": constraint[0], "lo": constraint[1], "hi": constraint[2]},
        "header": args.header,
    }
    doc = _make_doc("segment", config, result, witness, counts, elapsed, oracle)

    table = None
    if witness is not None:
        fit = piecewise_values(ts, model, [tuple(seg) for seg in witness])
        table = [("index", "value", "fit", "segment")]
        seg_of = {}
        for ordinal, (i, j) in enumerate(witness, start=1):
            for k in range(i, j + 1):
                seg_of[k] = ordinal
        for k in range(1, n + 1):
            table.append((k, ts.values[k - 1], fit[k - 1], seg_of[k]))
        doc["breakpoints"] = [seg[1] for seg in witness[:-1]]
    return doc, table


def _align_weights(a, b, base, tupled, unit, mismatch_cost, gap_cost):
    def scalar(e):
        i, j = e
        if unit:
            return base.one
        if i and j:
            return 0.0 if a[i - 1] == b[j - 1] else mismatch_cost
        return gap_cost

    if tupled:
        return scalar, lambda i, j: Scored(scalar((i, j)), ((i, j),))
    return scalar, lambda i, j: scalar((i, j))


def cmd_align(args) -> tuple[dict, list | None]:
    a = read_sequence(args.first, tokens=args.tokens)
    b = read_sequence(args.second, tokens=args.tokens)
    name = "count" if args.count_paths else args.semiring
    run_s, base, tupled = resolve_semiring(name)
    unit = _unit_weighted(base.name)

    constraint = None
    if args.sum_misalign is not None:
        if args.sum_misalign < 0:
            raise DataError("--sum-misalign must be non-negative")
        constraint = ("sum", args.sum_misalign)
    elif args.max_misalign is not None:
        if not 0 <= args.max_misalign <= max(len(a), len(b), 0):
            raise DataError(f"--max-misalign {args.max_misalign} out of range")
        constraint = ("max", args.max_misalign)

    scalar_weight, weight = _align_weights(
        a, b, base, tupled, unit, args.mismatch_cost, args.gap_cost
    )
    counted, counts = instrumented(run_s)

    sweep_rows = None
    if args.sweep:
        sizes = _parse_sizes(args.sweep)
        sweep_rows = [("size", "add_ops", "mul_ops", "seconds")]
        for size in sizes:
            if size > len(a) or size > len(b):
                raise DataError(f"--sweep size {size} exceeds an input length")
            sub_s, sub_counts = instrumented(run_s)
            sw_scalar, sw_weight = _align_weights(
                a[:size], b[:size], base, tupled, unit, args.mismatch_cost, args.gap_cost
            )
            problem = AlignmentProblem(size, size, sw_weight)
            t0 = time.perf_counter()
            _run_alignment(problem, constraint, sub_s)
            sweep_rows.append(
                (size, sub_counts.add, sub_counts.mul, time.perf_counter() - t0)
            )

    problem = AlignmentProblem(len(a), len(b), weight)
    start = time.perf_counter()
    value = _run_alignment(problem, constraint, counted)
    elapsed = time.perf_counter() - start

    witness = None
    if tupled:
        result = value.score
        witness = [list(move) for move in value.witness]
    else:
        result = value

    oracle = _oracle_skipped("not requested")
    if args.verify:
        oracle = _verify_align(
            problem, constraint, base, scalar_weight, value.score if tupled else value
        )

    config = {
        "inputs": [args.first, args.second],
        "semiring": name,
        "tokens": args.tokens,
        "gap_cost": args.gap_cost,
        "mismatch_cost": args.mismatch_cost,
        "constraint": None if constraint is None else {"kind": constraint[0], "cap": constraint[1]},
    }
    doc = _make_doc("align", config, result, witness, counts, elapsed, oracle)
    if sweep_rows is not None:
        doc["sweep"] = [list(r) for r in sweep_rows[1:]]
    return doc, sweep_rows


def _run_alignment(problem, constraint, s):
    if constraint is None:
        return nw_align(problem, s)
    kind, cap = constraint
    if kind == "sum":
        return nw_align_sum_constrained(problem, cap, s)
    return nw_align_max_constrained(problem, cap, s)


def cmd_events(args) -> tuple[dict, list | None]:
    probs = read_numeric_column(args.input, header=args.header)
    for pos, p in enumerate(probs, start=1):
        if not 0.0 <= p <= 1.0:
            raise DataError(f"probability #{pos} is {p}, outside [0, 1]")
    n = len(probs)
    occurrences = args.occurrences
    if occurrences < 0:
        raise DataError("--occurrences must be non-negative")

    if args.mode == "exact":
        base = probability_semiring()
        counted, counts = instrumented(base)
        pairs = [(1.0 - p, p) for p in probs]
        start = time.perf_counter()
        value = events_m_of_n(pairs, occurrences, counted)
        elapsed = time.perf_counter() - start
        result, witness = value, None
        scalar_weight = lambda e: probs[e[1] - 1] if e[0] else 1.0 - probs[e[1] - 1]
        score = value
    else:  # most probable combination
        base = max_product_semiring()
        vit = viterbi_simple_semiring(base)
        counted, counts = instrumented(vit)
        pairs = [
            (Scored(1.0 - p, ()), Scored(p, (k,)))
            for k, p in enumerate(probs, start=1)
        ]
        start = time.perf_counter()
        value = events_m_of_n(pairs, occurrences, counted)
        elapsed = time.perf_counter() - start
        if base.eq(value.score, base.zero):
            raise DataError("no outcome has the requested number of occurrences")
        result, witness = value.score, list(value.witness)
        scalar_weight = lambda e: probs[e[1] - 1] if e[0] else 1.0 - probs[e[1] - 1]
        score = value.score

    oracle = _oracle_skipped("not requested")
    if args.verify:
        oracle = _verify_events(probs, occurrences, base, scalar_weight, score)

    config = {
        "input": args.input,
        "occurrences": occurrences,
        "mode": args.mode,
        "header": args.header,
    }
    return _make_doc("events", config, result, witness, counts, elapsed, oracle), None


_RELATIONS = {
    "lt": lambda x, y: x < y,
    "le": lambda x, y: x <= y,
    "subset-demo": lambda x, y: (int(x) | int(y)) == int(y),
}


def cmd_lis(args) -> tuple[dict, list | None]:
    values = read_numeric_column(args.input, header=args.header)
    if args.relation == "subset-demo":
        for pos, v in enumerate(values, start=1):
            if v < 0 or v != int(v):
                raise DataError(
                    f"value #{pos} is {v}; subset-demo needs non-negative integers (bit masks)"
                )
    relation = _RELATIONS[args.relation]

    counted, counts = instrumented(viterbi_simple_semiring(maxplus_semiring()))
    start = time.perf_counter()
    if values:
        from .algorithms import ordered_subsequences

        folded = ordered_subsequences(
            values, counted, lambda k: Scored(1.0, (k,)), relation
        )
        length = 0 if folded.score == -math.inf else int(folded.score)
        witness = [values[k - 1] for k in folded.witness]
    else:
        length, witness = 0, []
    elapsed = time.perf_counter() - start

    oracle = _oracle_skipped("not requested")
    if args.verify:
        oracle = _verify_lis(values, relation, length)

    config = {"input": args.input, "relation": args.relation, "header": args.header}
    return (
        _make_doc("lis", config, length, witness or None, counts, elapsed, oracle),
        None,
    )


def _parse_sizes(spec: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError:
        raise DataError(f"bad size list {spec!r}; expected comma-separated integers") from None
    if not sizes or any(s < 1 for s in sizes):
        raise DataError("size list must contain positive integers")
    return sizes


def cmd_bench(args) -> tuple[dict, list | None]:
    sizes = _parse_sizes(args.sizes)
    from .semirings import counting_semiring

    rows = [("size", "add_ops", "mul_ops", "seconds")]
    for size in sizes:
        counted, counts = instrumented(counting_semiring())
        t0 = time.perf_counter()
        if args.op == "combinations":
            combinations(size, min(8, size), counted, lambda k: 1)
        elif args.op == "align":
            nw_align(AlignmentProblem(size, size, lambda i, j: 1), counted)
        else:  # align-sum
            nw_align_sum_constrained(
                AlignmentProblem(size, size, lambda i, j: 1), size, counted
            )
        rows.append((size, counts.add, counts.mul, time.perf_counter() - t0))

    config = {"op": args.op, "sizes": sizes}
    doc = {
        "command": "bench",
        "config": config,
        "result": None,
        "witness": None,
        "op_counts": {"add": rows[-1][1], "mul": rows[-1][2]},
        "wall_time_s": rows[-1][3],
        "oracle_check": _oracle_skipped("not applicable"),
        "table": [list(r) for r in rows[1:]],
    }
    return doc, rows


# --- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semiring-dp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--out", help="write the JSON result document here (default: stdout)")
        p.add_argument("--out-table", help="write plot-ready CSV columns here")
        p.add_argument("--verify", action="store_true",
                       help="cross-check against the exhaustive path oracle when small enough")

    p = sub.add_parser("segment", help="segmented regression over a numeric CSV column")
    p.add_argument("input")
    p.add_argument("--model", choices=("constant", "linear"), default="linear")
    p.add_argument("--lambda", dest="lam", type=float, default=0.0,
                   help="per-segment regularization penalty")
    p.add_argument("--count", type=int, help="exact number of segments")
    p.add_argument("--count-range", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--min-length", type=int,
                   help="require every segment to span at least this many samples")
    p.add_argument("--semiring", default="viterbi:minplus",
                   help="catalog name or viterbi:<base>; count/bool use unit weights, "
                        "others weight segments by fit cost + lambda")
    p.add_argument("--header", action="store_true", help="skip one leading line")
    common(p)
    p.set_defaults(handler=cmd_segment)

    p = sub.add_parser("align", help="sequence alignment between two text files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--tokens", action="store_true",
                   help="split on whitespace instead of one symbol per character")
    p.add_argument("--semiring", default="minplus")
    p.add_argument("--count-paths", action="store_true",
                   help="count alignments (forces the counting semiring, unit weights)")
    p.add_argument("--gap-cost", type=float, default=1.0)
    p.add_argument("--mismatch-cost", type=float, default=1.0)
    p.add_argument("--sum-misalign", type=int,
                   help="cap the summed index gap over alignment moves")
    p.add_argument("--max-misalign", type=int,
                   help="cap the maximum index gap over alignment moves")
    p.add_argument("--sweep", help="comma-separated prefix sizes for a timing table")
    common(p)
    p.set_defaults(handler=cmd_align)

    p = sub.add_parser("events", help="exact M-of-N event probability")
    p.add_argument("input", help="file with one probability per line")
    p.add_argument("-M", "--occurrences", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "viterbi"), default="exact",
                   help="exact probability, or the most probable combination")
    p.add_argument("--header", action="store_true")
    common(p)
    p.set_defaults(handler=cmd_events)

    p = sub.add_parser("lis", help="longest chained subsequence of a numeric file")
    p.add_argument("input")
    p.add_argument("--relation", choices=("lt", "le", "subset-demo"), default="lt")
    p.add_argument("--header", action="store_true")
    common(p)
    p.set_defaults(handler=cmd_lis)

    p = sub.add_parser("bench", help="operation-count/time scaling table")
    p.add_argument("--op", choices=("combinations", "align", "align-sum"), required=True)
    p.add_argument("--sizes", required=True, help="comma-separated sizes")
    common(p)
    p.set_defaults(handler=cmd_bench)

    return parser


def _write_outputs(args, doc, table) -> None:
    payload = canonical_json(doc) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    if args.out_table:
        if table is None:
            raise DataError("this invocation has no tabular output")
        lines = [",".join(_csv_cell(v) for v in row) for row in table]
        Path(args.out_table).write_text("\n".join(lines) + "\n")


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        doc, table = args.handler(args)
        _write_outputs(args, doc, table)
    except DataError as exc:
        print(f"semiring-dp: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    if doc["oracle_check"]["status"] == "fail":
        print(f"semiring-dp: oracle check failed: {doc['oracle_check']['reason']}",
              file=sys.stderr)
        return EXIT_ORACLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
