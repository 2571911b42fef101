"""Command-line front end: count, mavc, oracle, gen-weights, bench."""

import argparse
import logging
import sys

from .cnf import WeightFormat, read_cnf, to_dimacs
from .counter import ClusterKind
from .harness import (RunConfig, format_count, generate_weights, orders_for, parse_configs,
                      run_bench, run_count, write_cactus_csv, write_csv)
from .mavc import compute_mavc
from .oracle import brute_force_count

HEURISTICS = ["random", "mcs", "invmcs", "lexp", "invlexp", "lexm", "invlexm"]
KINDS = [k.value for k in ClusterKind]


def _add_config_args(p):
    p.add_argument("--wf", default="unweighted", choices=[f.value for f in WeightFormat],
                   help="weight format (default: unweighted)")
    p.add_argument("--cf", default="bmtree", choices=KINDS, help="clustering heuristic")
    p.add_argument("--cv", default="lexp", choices=HEURISTICS, help="cluster variable order")
    p.add_argument("--dv", default="mcs", choices=HEURISTICS, help="diagram variable order")
    p.add_argument("--seed", type=int, default=0, help="seed for the random order")


def build_parser():
    parser = argparse.ArgumentParser(prog="addcount",
                                     description="Exact weighted model counting with ADDs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="weighted model count of a CNF file")
    p.add_argument("file")
    _add_config_args(p)
    p.add_argument("--timeout", type=float, default=None, help="seconds (cooperative)")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force count")

    p = sub.add_parser("mavc", help="maximum ADD variable count, as one CSV row")
    p.add_argument("file")
    _add_config_args(p)

    p = sub.add_parser("oracle", help="brute-force count (small files only)")
    p.add_argument("file")
    p.add_argument("--wf", default="unweighted", choices=[f.value for f in WeightFormat])

    p = sub.add_parser("gen-weights", help="emit the file with random 0.5/1.5 literal weights")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)

    p = sub.add_parser("bench", help="sweep configurations over a directory of .cnf files")
    p.add_argument("dir")
    p.add_argument("--configs", default="bmtree:lexp:mcs",
                   help="kind:cv:dv items separated by ';', '*' wildcards, or 'all'")
    p.add_argument("--out", default="-")
    p.add_argument("--cactus", default=None, help="also write sorted solve times here")
    p.add_argument("--wf", default="unweighted", choices=[f.value for f in WeightFormat])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-seed", type=int, default=None,
                   help="generate 0.5/1.5 weights with this seed")
    p.add_argument("--timeout", type=float, default=10.0)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _config(args, mode):
    return RunConfig(args.file, args.wf, args.cf, args.cv, args.dv, args.seed,
                     getattr(args, "timeout", None), mode)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _dispatch(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args):
    if args.command == "count":
        cfg = _config(args, "count")
        formula, weights = read_cnf(cfg.input_path, cfg.weight_format)
        row = run_count(cfg, formula, weights)
        if row.status != "solved":
            print(f"status: {row.status}", file=sys.stderr)
            return 1
        print(format_count(row.count))
        if args.verbose:
            print(f"mavc={row.mavc} elapsedMs={row.elapsed_ms:.3f}", file=sys.stderr)
        if args.oracle:
            print(format_count(brute_force_count(formula, weights)))
        return 0

    if args.command == "mavc":
        cfg = _config(args, "mavc")
        formula, _ = read_cnf(cfg.input_path, cfg.weight_format)
        _, rho = orders_for(formula, cfg)
        report = compute_mavc(formula, rho, cfg.cluster_kind)
        print(f"{cfg.input_path},{cfg.cluster_kind.value},{cfg.cluster_order.value},{report.mavc}")
        return 0

    if args.command == "oracle":
        formula, weights = read_cnf(args.file, args.wf)
        print(format_count(brute_force_count(formula, weights)))
        return 0

    if args.command == "gen-weights":
        formula, _ = read_cnf(args.file, "unweighted")
        text = to_dimacs(formula, generate_weights(formula, args.seed))
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0

    if args.command == "bench":
        rows = run_bench(args.dir, parse_configs(args.configs), weight_format=args.wf,
                         seed=args.seed, time_limit=args.timeout, jobs=args.jobs,
                         weight_seed=args.weight_seed)
        if args.out == "-":
            write_csv(rows, sys.stdout)
        else:
            with open(args.out, "w") as fh:
                write_csv(rows, fh)
        if args.cactus:
            with open(args.cactus, "w") as fh:
                write_cactus_csv(rows, fh)
        return 0 if all(r.status != "error" for r in rows) else 1

    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
