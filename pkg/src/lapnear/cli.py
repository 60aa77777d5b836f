"""Command-line interface.

Subcommands: ``project`` (nearest Laplacian of a matrix file),
``generate`` (synthetic instance to a directory), ``oracle`` (LP-certified
optimum at small sizes), ``spectra`` (eigenvalues to CSV),
``experiment table2`` (noise-sensitivity sweep), ``bench`` (timing).

Every randomized command requires an explicit ``--seed``; identical flags
reproduce identical data files.  Exit codes: 0 success, 1 semantic error
(dimensions, caps, invalid parameters), 2 parse or I/O error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .bench import bench_projection
from .errors import DimensionError, FormatError, NumericalError
from .lp_oracle import DEFAULT_MAX_ITERS, oracle_optimum
from .matrices import (
    read_edges,
    read_matrix_csv,
    sha256_file,
    validate_laplacian,
    write_edges,
    write_matrix_csv,
)
from .projection import nearest_laplacian
from .spectra import ave_var, eigenvalues
from .synth import SynthParams, generate_instance

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2
EXIT_NUMERICAL = 3


def _float_list(text: str):
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad float list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _int_list(text: str):
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _g17(x: float) -> str:
    return format(x, ".17g")


def cmd_project(args) -> int:
    A = read_matrix_csv(args.matrix)
    edges = read_edges(args.edges)
    start = time.perf_counter()
    result = nearest_laplacian(A, edges)
    wall = time.perf_counter() - start
    check = validate_laplacian(result.L, edges)

    write_matrix_csv(result.L, args.out)
    if args.report:
        report = {
            "command": "project",
            "inputs": {
                "matrix": {"path": str(args.matrix), "sha256": sha256_file(args.matrix)},
                "edges": {"path": str(args.edges), "sha256": sha256_file(args.edges)},
            },
            "params": {},
            "objective": result.objective,
            "relaxed_objective": result.relaxed_objective,
            "alpha": [float(a) for a in result.alpha],
            "check": {
                "row_sum_residual": check.row_sum_residual,
                "sign_violation": check.sign_violation,
                "structure_violation": check.structure_violation,
                "is_valid": check.is_valid,
            },
            "wall_time_seconds": wall,
        }
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_generate(args) -> int:
    params = SynthParams(n=args.n, k=args.k, beta=args.beta, s=args.s, seed=args.seed)
    instance = generate_instance(params)
    os.makedirs(args.out_dir, exist_ok=True)
    write_matrix_csv(instance.observed, os.path.join(args.out_dir, "A.csv"))
    write_matrix_csv(instance.true_laplacian, os.path.join(args.out_dir, "Lstar.csv"))
    write_edges(instance.edges, os.path.join(args.out_dir, "edges.txt"))
    with open(os.path.join(args.out_dir, "params.json"), "w", encoding="utf-8") as fh:
        json.dump(
            {"n": params.n, "k": params.k, "beta": params.beta, "s": params.s, "seed": params.seed},
            fh,
            indent=2,
            sort_keys=True,
        )
        fh.write("\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    A = read_matrix_csv(args.matrix)
    edges = read_edges(args.edges)
    value = oracle_optimum(A, edges, max_iters=args.max_iters)
    print(f"optimum {_g17(value)}")
    return EXIT_OK


def cmd_spectra(args) -> int:
    M = read_matrix_csv(args.matrix)
    summary = eigenvalues(M)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("re,im\n")
        for value in summary.eigenvalues:
            fh.write(f"{_g17(value.real)},{_g17(value.imag)}\n")
    return EXIT_OK


def cmd_experiment_table2(args) -> int:
    rows = [
        ave_var(
            s=s,
            n=args.n,
            k=args.k,
            beta=args.beta,
            trials=args.trials,
            seed=args.seed,
            workers=args.workers,
        )
        for s in args.s_list
    ]
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("s,trials,ave,var\n")
        for row in rows:
            fh.write(f"{_g17(row.s)},{row.trials},{_g17(row.ave)},{_g17(row.var)}\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    records = bench_projection(args.sizes, args.repeats, args.seed)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("n,repeats,median_seconds,min_seconds\n")
        fh.flush()
        for rec in records:
            fh.write(
                f"{rec.n},{rec.repeats},{_g17(rec.median_seconds)},{_g17(rec.min_seconds)}\n"
            )
            fh.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapnear",
        description="Nearest graph Laplacian construction and experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", help="nearest Laplacian of a matrix file")
    p.add_argument("--matrix", required=True, help="input matrix CSV")
    p.add_argument("--edges", required=True, help="edge structure file")
    p.add_argument("--out", required=True, help="output Laplacian CSV")
    p.add_argument("--report", help="optional JSON run report")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("generate", help="synthetic instance to a directory")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="even mean degree")
    p.add_argument("--beta", type=float, required=True, help="rewiring probability")
    p.add_argument("--s", type=float, required=True, help="noise scale")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="LP-certified optimum (small n only)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--edges", required=True)
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("spectra", help="eigenvalues of a matrix to CSV")
    p.add_argument("--matrix", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_spectra)

    p = sub.add_parser("experiment", help="statistical experiments")
    esub = p.add_subparsers(dest="experiment", required=True)
    p2 = esub.add_parser("table2", help="noise-sensitivity sweep of Re(lambda_2)")
    p2.add_argument("--n", type=int, required=True)
    p2.add_argument("--k", type=int, required=True)
    p2.add_argument("--beta", type=float, default=0.3)
    p2.add_argument("--trials", type=int, required=True)
    p2.add_argument("--s-list", type=_float_list, required=True)
    p2.add_argument("--seed", type=int, required=True)
    p2.add_argument("--out", required=True)
    p2.add_argument("--workers", type=int, default=1)
    p2.set_defaults(func=cmd_experiment_table2)

    p = sub.add_parser("bench", help="projection timing per size")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
