"""Command-line entry point: ``ircgain {verify-example,sweep,selftest,bench}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from . import bench as bench_mod
from . import golden, selftest
from .comp import run_sweep
from .config import build_config, load_file, parse_override
from .errors import IrcError
from .instances import to_jsonable

DEFAULT_SEED = 42
SWEEP_COLUMNS = ("sir_db", "single_cell_sm_db", "multi_cell_sim_sm_db", "multi_cell_theory_sm_db")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_verify_example(args) -> int:
    report = golden.verify_example()
    print("\n".join(report.lines()))
    if not report.ok:
        _err("verify-example: FAILED")
        for line in report.lines()[4:]:
            if "MISMATCH" in line:
                _err("  " + line)
        return 1
    return 0


def _resolve_sweep_config(args):
    file_values = load_file(args.config) if args.config else {}
    overrides = dict(parse_override(item) for item in args.set)
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.iterations is not None:
        overrides["iterations"] = args.iterations
    if args.sir_list is not None:
        overrides["sir_points_db"] = parse_override(f"sir_points_db={args.sir_list}")[1]
    return build_config(file_values, overrides)


def render_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow([f"{getattr(row, c):.17g}" for c in SWEEP_COLUMNS])
    return buf.getvalue()


def render_json(rows, cfg) -> str:
    doc = {
        "metadata": {"config": cfg.as_dict(), "seed": cfg.seed, "columns": list(SWEEP_COLUMNS)},
        "rows": [asdict(r) for r in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_sweep(args) -> int:
    cfg = _resolve_sweep_config(args)
    rows = run_sweep(cfg)
    text = render_csv(rows) if args.format == "csv" else render_json(rows, cfg)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _print_failure(suite: str, seed: int, index: int, trial) -> None:
    _err(f"selftest: {suite} trial {index} failed (value {trial.error!r})")
    _err(f"  replay with: ircgain selftest --seed {seed} --replay {suite}:{index}")
    _err("  instance: " + json.dumps(to_jsonable(trial.instance)))


def cmd_selftest(args) -> int:
    if args.replay:
        name, _, idx = args.replay.partition(":")
        if name not in selftest.SUITE_NAMES or not idx.isdigit():
            _err(f"selftest: bad --replay {args.replay!r}; expected SUITE:TRIAL "
                 f"with SUITE in {selftest.SUITE_NAMES}")
            return 2
        trial = selftest.run_trial(args.seed, name, int(idx))
        print(json.dumps({"suite": name, "trial": int(idx), "value": trial.error,
                          "ok": trial.ok, "instance": to_jsonable(trial.instance)}))
        return 0 if trial.ok else 1

    results = selftest.run_all(args.seed, args.trials, args.suite or None)
    failed = False
    for res in results:
        status = "PASS" if res.ok else f"FAIL ({len(res.failures)} violations)"
        print(f"{res.name:<14} trials={res.trials:<6} {res.metric} = {res.value:.6g}  {status}")
        for index, trial in res.failures[:3]:
            _print_failure(res.name, args.seed, index, trial)
        failed |= not res.ok
    return 1 if failed else 0


def cmd_bench(args) -> int:
    points = bench_mod.parse_grid(args.grid)
    try:
        rows = bench_mod.run_bench(points, seed=args.seed, repeats=args.repeats)
    except bench_mod.AgreementError as exc:
        _err(f"bench: paths disagree, no timings reported: {exc}")
        return 1
    print(bench_mod.format_table(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ircgain", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-example", help="check the published numerical example")
    p.set_defaults(func=cmd_verify_example)

    p = sub.add_parser("sweep", help="single- vs multi-cell SINR over an SIR sweep")
    p.add_argument("--config", help="key=value scenario file")
    p.add_argument("--seed", type=int, default=None,
                   help=f"RNG seed (default {DEFAULT_SEED}, or the config file's)")
    p.add_argument("--output", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--sir-list", help='comma-separated SIR points in dB, e.g. "-10,0,10"')
    p.add_argument("--iterations", type=int)
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                   help="override a config field; repeatable")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="randomized property suites")
    p.add_argument("--trials", type=int, default=10_000, help="trials per suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--suite", action="append", choices=selftest.SUITE_NAMES)
    p.add_argument("--replay", metavar="SUITE:TRIAL", help="rerun one trial and print it")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="incremental vs. recompute timings")
    p.add_argument("--grid", default=bench_mod.DEFAULT_GRID,
                   help='points as "nr=4,z=8,a=12;nr=8,z=8,a=8"')
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--repeats", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IrcError as exc:
        _err(f"ircgain {args.command}: {exc}")
        return 2
    except OSError as exc:
        _err(f"ircgain {args.command}: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
