"""Command-line front end.

    shakebal balance   one optimization run, prints the solution, writes
                       convergence.csv and polar.csv
    shakebal calibrate recommend constraint bounds from random sampling
    shakebal bench     full benchmark campaign (results/summary/convergence/
                       runtime CSVs)
    shakebal profile   polar cost profiles for named solutions from a CSV

Flags override config-file values, which override built-in defaults.
Output files are only overwritten with --force.  Exit codes: 0 success,
1 usage/config error, 2 run failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from .config import AppConfig, ConfigError, optimizer_params_map, parse_config
from .mechanism import DecisionVector
from .objective import calibrate_bounds, evaluate
from .optimizers import ALGORITHM_NAMES, OPTIMIZERS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUN_FAILURE = 2


class CliError(Exception):
    """Usage/config-level failure (exit code 1)."""


def _load_config(path: str | None) -> AppConfig:
    if path is None:
        return AppConfig()
    if not os.path.exists(path):
        raise CliError(f"config file not found: {path}")
    return parse_config(path)


def _prepare_outputs(out_dir: str, names: list[str], force: bool) -> dict[str, Path]:
    """Create the output directory and refuse to clobber existing files
    unless --force was given."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    targets = {name: out / name for name in names}
    if not force:
        existing = [str(p) for p in targets.values() if p.exists()]
        if existing:
            raise CliError(
                "refusing to overwrite existing output (use --force): " + ", ".join(existing)
            )
    return targets


def _run_params(config: AppConfig, algo: str, iters: int | None):
    params = optimizer_params_map(config)[algo]
    if iters is not None:
        params = dataclasses.replace(params, iterations=iters)
    return params


def cmd_balance(args) -> int:
    config = _load_config(args.config)
    targets = _prepare_outputs(args.out, ["convergence.csv", "polar.csv"], args.force)
    params = _run_params(config, args.algo, args.iters)

    objective = bench_mod.make_objective(config.mechanism, config.objective)
    try:
        result = OPTIMIZERS[args.algo](objective, config.objective.bounds, params, args.seed)
    except Exception as exc:
        print(f"error: run aborted: {exc}", file=sys.stderr)
        return EXIT_RUN_FAILURE

    dv = DecisionVector.from_array(result.best_x)
    breakdown = evaluate(config.mechanism, dv, config.objective)
    for name, value in [
        ("algorithm", args.algo),
        ("seed", args.seed),
        ("iterations", params.iterations),
        ("m1", dv.m_1),
        ("m2", dv.m_2),
        ("phi1", dv.phi_1),
        ("phi2", dv.phi_2),
        ("raw_cost", breakdown.raw_cost),
        ("c1", breakdown.c1),
        ("c2", breakdown.c2),
        ("total_cost", breakdown.total),
    ]:
        print(f"{name:<12} {value:.10g}" if isinstance(value, float) else f"{name:<12} {value}")

    row = bench_mod.ResultRow(
        algorithm=args.algo,
        budget=params.iterations,
        experiment=1,
        seed=args.seed,
        result=result,
    )
    bench_mod.emit_convergence([row], targets["convergence.csv"])
    bench_mod.emit_polar(
        config.mechanism,
        DecisionVector.zero(),
        [(args.algo, dv)],
        config.objective.n_samples,
        targets["polar.csv"],
    )
    return EXIT_OK


def cmd_calibrate(args) -> int:
    config = _load_config(args.config)
    c1_max, c2_max = calibrate_bounds(
        config.mechanism,
        config.objective.bounds,
        n_random=args.samples,
        fraction=args.fraction,
        seed=args.seed,
        n_samples=config.objective.n_samples,
    )
    print(f"c1_max       {c1_max!r}")
    print(f"c2_max       {c2_max!r}")
    if args.write_config:
        lines: list[str] = []
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                for raw in fh:
                    key = raw.split("#", 1)[0].split("=", 1)[0].strip()
                    if key not in ("objective.c1_max", "objective.c2_max"):
                        lines.append(raw.rstrip("\n"))
        lines.append(f"objective.c1_max = {c1_max!r}")
        lines.append(f"objective.c2_max = {c2_max!r}")
        Path(args.write_config).write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote        {args.write_config}")
    return EXIT_OK


def cmd_bench(args) -> int:
    config = _load_config(args.config)
    targets = _prepare_outputs(
        args.out,
        ["results.csv", "summary.csv", "convergence.csv", "runtime.csv"],
        args.force,
    )
    plan = bench_mod.ExperimentPlan(
        algorithms=config.bench.algorithms,
        iteration_budgets=config.bench.iteration_budgets,
        repeats=config.bench.repeats,
        base_seed=config.bench.base_seed,
        mechanism=config.mechanism,
        objective=config.objective,
        optimizer_params=optimizer_params_map(config),
    )
    rows = bench_mod.run_plan(plan, jobs=args.jobs)
    bench_mod.write_results(rows, targets["results.csv"])
    bench_mod.write_summary(bench_mod.summarize(rows), targets["summary.csv"])
    bench_mod.emit_convergence(rows, targets["convergence.csv"])
    bench_mod.emit_runtime_growth(rows, targets["runtime.csv"])

    n_failed = sum(1 for r in rows if r.status != "ok")
    print(f"completed {len(rows) - n_failed}/{len(rows)} runs -> {args.out}")
    if n_failed:
        print(f"warning: {n_failed} runs failed (see status column)", file=sys.stderr)
    return EXIT_OK if n_failed < len(rows) else EXIT_RUN_FAILURE


def _read_solutions(path: str) -> list[tuple[str, DecisionVector]]:
    """Named decision vectors from a CSV with header name,m1,m2,phi1,phi2."""
    if not os.path.exists(path):
        raise CliError(f"solutions file not found: {path}")
    out: list[tuple[str, DecisionVector]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["name", "m1", "m2", "phi1", "phi2"]:
            raise CliError(f"{path}: expected header 'name,m1,m2,phi1,phi2', got {header}")
        for lineno, rec in enumerate(reader, start=2):
            if not rec or not "".join(rec).strip():
                continue
            try:
                out.append(
                    (rec[0].strip(), DecisionVector(float(rec[1]), float(rec[2]), float(rec[3]), float(rec[4])))
                )
            except (IndexError, ValueError) as exc:
                raise CliError(f"{path}:{lineno}: bad solution row {rec} ({exc})") from None
    return out


def cmd_profile(args) -> int:
    config = _load_config(args.config)
    solutions = _read_solutions(args.solutions)
    targets = _prepare_outputs(args.out, ["polar.csv"], args.force)
    bench_mod.emit_polar(
        config.mechanism, DecisionVector.zero(), solutions, args.samples, targets["polar.csv"]
    )
    print(f"wrote {targets['polar.csv']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shakebal",
        description="Counterweight balancing of a double crank-slider mechanism "
        "with four metaheuristics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(
            name, help=help_text, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        p.add_argument("--config", default=None, help="config file (section.key = value lines)")
        p.set_defaults(func=func)
        return p

    p = add("balance", cmd_balance, "run one balancing optimization")
    p.add_argument("--algo", choices=ALGORITHM_NAMES, default="pso", help="optimizer")
    p.add_argument("--iters", type=int, default=None, help="iteration budget (default: from config)")
    p.add_argument("--seed", type=int, default=1, help="random seed")
    p.add_argument("--out", default="out", help="output directory")
    p.add_argument("--force", action="store_true", help="overwrite existing output files")

    p = add("calibrate", cmd_calibrate, "recommend c1_max/c2_max from random sampling")
    p.add_argument("--samples", type=int, default=10000, help="number of random decision vectors")
    p.add_argument("--fraction", type=float, default=0.5, help="fraction of the observed maxima")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument(
        "--write-config", default=None, metavar="PATH",
        help="write a config copy with the recommended bounds filled in",
    )

    p = add("bench", cmd_bench, "run the full benchmark campaign")
    p.add_argument("--out", default="out", help="output directory")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="parallel runs")
    p.add_argument("--force", action="store_true", help="overwrite existing output files")

    p = add("profile", cmd_profile, "polar cost profiles for named solutions")
    p.add_argument("--solutions", required=True, help="CSV of solutions (name,m1,m2,phi1,phi2)")
    p.add_argument("--samples", type=int, default=360, help="theta grid resolution")
    p.add_argument("--out", default="out", help="output directory")
    p.add_argument("--force", action="store_true", help="overwrite existing output files")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (CliError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
