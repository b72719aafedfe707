"""Command-line interface over the analytic and corpus routines.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 I/O error.
All floats are emitted with 12 significant digits and rows in a fixed
order, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import sys
from typing import IO, Iterator

from . import compare as compare_mod
from . import corpus, entropy, monkey
from .zeta import zeta, zeta_derivative
from .zipf import ZipfModel


def _fmt(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if value is None:
        return ""
    return str(value)


def _round_floats(obj: object) -> object:
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


@contextlib.contextmanager
def _open_output(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def _write_record(record: dict, fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        json.dump(_round_floats(record), out, indent=2)
        out.write("\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow([_fmt(v) for v in record.values()])


def _write_rows(fieldnames: list[str], rows: list[dict], fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        json.dump(_round_floats(rows), out, indent=2)
        out.write("\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_fmt(row.get(name)) for name in fieldnames])


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text}") from exc


def _float_grid(lo: float, hi: float, step: float) -> list[float]:
    if hi < lo:
        raise ValueError(f"grid end {hi} is below start {lo}")
    steps = int(math.floor((hi - lo) / step + 1e-9))
    return [lo + i * step for i in range(steps + 1)]


def cmd_entropy(args: argparse.Namespace) -> int:
    model = ZipfModel(exponent=args.s, size=args.n)
    if args.s > 0:
        bounds = entropy.entropy_bounds(model)
    else:
        # the bracket needs s > 0; the direct sum does not
        exact = entropy.entropy_exact(model)
        bounds = entropy.EntropyBounds(
            lower=exact, upper=exact, exact=exact, method="exact-sum", head_terms=model.size
        )
    record = {
        "s": args.s,
        "N": args.n,
        "lower": bounds.lower,
        "upper": bounds.upper,
    }
    if bounds.exact is not None:
        record["exact"] = bounds.exact
    record["gap"] = bounds.upper - bounds.lower
    record["method"] = bounds.method
    with _open_output(args.output) as out:
        _write_record(record, args.format or "json", out)
    return 0


def cmd_surface(args: argparse.Namespace) -> int:
    s_grid = _float_grid(args.s_min, args.s_max, args.s_step)
    points = entropy.entropy_surface(s_grid, args.n_list)
    rows = [
        {"s": p.s, "N": p.n, "h_mid": p.h_mid, "h_gap": p.h_gap} for p in points
    ]
    with _open_output(args.output) as out:
        _write_rows(["s", "N", "h_mid", "h_gap"], rows, args.format or "csv", out)
    return 0


def cmd_infinite(args: argparse.Namespace) -> int:
    s_grid = _float_grid(args.s_min, args.s_max, args.s_step)
    finite_sizes = args.n or []
    fieldnames = ["s", "h_infinite"] + [f"h_finite_{n}" for n in finite_sizes]
    rows = []
    for s in s_grid:
        try:
            h_inf = entropy.entropy_infinite(s)
        except ValueError:
            continue  # divergent grid points are skipped, not fatal
        row = {"s": s, "h_infinite": h_inf}
        for n in finite_sizes:
            row[f"h_finite_{n}"] = entropy.entropy_exact(ZipfModel(exponent=s, size=n))
        rows.append(row)
    with _open_output(args.output) as out:
        _write_rows(fieldnames, rows, args.format or "csv", out)
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    tokens = corpus.read_tokens(args.path)
    if not tokens:
        raise ValueError(f"no tokens found in {args.path}")
    table = corpus.count(tokens)
    summary: dict = {
        "total_tokens": table.total_tokens,
        "distinct_types": table.distinct_types,
    }
    try:
        fit = corpus.fit_zipf(table, min_count=args.min_count)
        summary["s_hat"] = fit.s_hat
        summary["r_squared"] = fit.r_squared
    except corpus.InsufficientDataError as exc:
        print(f"warning: exponent fit skipped: {exc}", file=sys.stderr)
        summary["s_hat"] = None
        summary["r_squared"] = None
    summary["empirical_entropy_bits"] = corpus.empirical_entropy(table)
    if args.smoothing:
        smoothed = corpus.good_turing(table)
        summary["smoothed_entropy_bits"] = corpus.smoothed_entropy(
            smoothed, table, include_unseen=args.unseen_as_symbol
        )
        summary["p_unseen"] = smoothed.p_unseen_total
        summary["smoothing_fallback"] = smoothed.fallback
    if args.table is not None:
        corpus.write_table_csv(table, args.table, top_k=args.top_k)
    with _open_output(args.output) as out:
        _write_record(summary, args.format or "json", out)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    tables = []
    for path in (args.path_a, args.path_b):
        tokens = corpus.read_tokens(path)
        if not tokens:
            raise ValueError(f"no tokens found in {path}")
        tables.append(corpus.count(tokens))
    report = compare_mod.zipf_dissimilarity(tables[0], tables[1], max_rank=args.max_rank)
    record = {
        "value": report.value,
        "shared_ranks": report.shared_ranks,
        "measure": compare_mod.MEASURE,
    }
    with _open_output(args.output) as out:
        _write_record(record, args.format or "json", out)
    return 0


def cmd_monkey(args: argparse.Namespace) -> int:
    config = monkey.MonkeyConfig(
        alphabet_size=args.m,
        space_probability=args.q,
        token_count=args.count,
        seed=args.seed,
    )
    if args.oracle:
        table = monkey.theoretical_table(config, args.max_word_length)
        rows = [
            {"rank": rank, "word": word, "probability": p}
            for rank, (word, p) in enumerate(table.entries, start=1)
        ]
        with _open_output(args.output) as out:
            _write_rows(["rank", "word", "probability"], rows, args.format or "csv", out)
        return 0
    words = monkey.generate(config)
    if args.rank_table:
        table = corpus.count(words)
        with _open_output(args.output) as out:
            corpus.write_table_csv(table, out)
        return 0
    with _open_output(args.output) as out:
        out.write("\n".join(words))
        if words:
            out.write("\n")
    return 0


def cmd_zeta(args: argparse.Namespace) -> int:
    z = zeta(args.s)
    zp = zeta_derivative(args.s)
    record = {
        "s": args.s,
        "zeta": z.zeta,
        "zeta_prime": zp.zeta_prime,
        "zeta_error_bound": z.abs_error_bound,
        "zeta_prime_error_bound": zp.abs_error_bound,
    }
    with _open_output(args.output) as out:
        _write_record(record, args.format or "json", out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zipfentropy",
        description="Entropy of Zipf-distributed lexicons and corpus estimators.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default=None)
    common.add_argument("--output", metavar="PATH", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common], help="entropy bracket for one (s, N)")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("surface", parents=[common], help="bracket midpoints over a grid")
    p.add_argument("--s-min", type=float, required=True)
    p.add_argument("--s-max", type=float, required=True)
    p.add_argument("--s-step", type=_positive_float, required=True)
    p.add_argument("--n-list", type=_int_list, required=True, metavar="N1,N2,...")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("infinite", parents=[common], help="infinite-lexicon entropy curve")
    p.add_argument("--s-min", type=float, required=True)
    p.add_argument("--s-max", type=float, required=True)
    p.add_argument("--s-step", type=_positive_float, required=True)
    p.add_argument("--n", type=_int_list, default=None, metavar="N1,N2,...",
                   help="also emit exact finite-lexicon columns at these sizes")
    p.set_defaults(func=cmd_infinite)

    p = sub.add_parser("analyze", parents=[common], help="corpus statistics from a text file")
    p.add_argument("path")
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--no-smoothing", dest="smoothing", action="store_false")
    p.add_argument("--unseen-as-symbol", action="store_true",
                   help="fold the unseen mass into the smoothed entropy as one symbol")
    p.add_argument("--table", metavar="PATH", default=None,
                   help="also write the rank-frequency table as CSV")
    p.add_argument("--top-k", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", parents=[common], help="dissimilarity of two text files")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--max-rank", type=int, default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("monkey", parents=[common], help="random-typing word source")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--count", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rank-table", action="store_true",
                   help="emit the generated words as a rank-frequency CSV")
    p.add_argument("--oracle", action="store_true",
                   help="emit the exact truncated word distribution instead of sampling")
    p.add_argument("--max-word-length", type=int, default=12)
    p.set_defaults(func=cmd_monkey)

    p = sub.add_parser("zeta", parents=[common], help="zeta diagnostics at one point")
    p.add_argument("--s", type=float, required=True)
    p.set_defaults(func=cmd_zeta)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
