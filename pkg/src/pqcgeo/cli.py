"""Command-line interface.

Subcommands: run-vqe, scan-landscape, hopf, validate.
Exit codes: 0 success, 1 validation failure, 2 configuration error.
Parameter indices on the command line are 1-based (theta_1 .. theta_m).
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import ansatz, harness, optimize, qgt, vqe


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pqcgeo",
                                     description="two-qubit circuit geometry and VQE laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run-vqe", help="multi-trial VQE with trace CSVs and summary JSON")
    run.add_argument("--ansatz", required=True, choices=ansatz.ANSATZE)
    run.add_argument("--hamiltonian", required=True,
                     help="Hamiltonian JSON path, or bundled name 'entangled'/'product'")
    run.add_argument("--optimizer", default="gd", choices=(optimize.GD, optimize.QNG))
    run.add_argument("--metric", default="block", choices=("dense", "block", "diag"))
    run.add_argument("--inversion", default="pinv", choices=("pinv", "tikhonov"))
    run.add_argument("--rcond", type=float, default=1e-8, help="pseudo-inverse cutoff")
    run.add_argument("--epsilon", type=float, default=1e-3, help="tikhonov ridge")
    run.add_argument("--lr", type=float, default=0.05)
    run.add_argument("--steps", type=int, default=200)
    run.add_argument("--tol", type=float, default=1e-6)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--trials", type=int, default=harness.DEFAULT_TRIALS)
    run.add_argument("--out", default="out")

    scan = sub.add_parser("scan-landscape", help="curvature grid over two parameters")
    scan.add_argument("--ansatz", required=True, choices=ansatz.ANSATZE)
    scan.add_argument("--scan", type=int, nargs=2, default=(1, 2), metavar=("A", "B"),
                      help="1-based indices of the two scanned parameters")
    scan.add_argument("--fix", action="append", default=[], metavar="INDEX=VALUE",
                      help="fix a remaining parameter, repeatable (1-based index)")
    scan.add_argument("--grid", type=int, default=harness.DEFAULT_GRID)
    scan.add_argument("--clip", type=float, nargs=2, default=harness.DEFAULT_CLIP,
                      metavar=("LO", "HI"))
    scan.add_argument("--out", default="landscape", help="output path prefix")

    hopf = sub.add_parser("hopf", help="print Hopf base/fiber coordinates as JSON")
    hopf.add_argument("--ansatz", required=True, choices=ansatz.ANSATZE)
    hopf.add_argument("--theta", required=True,
                      help="comma-separated parameter values, e.g. 0.3,1.2,0,0")

    sub.add_parser("validate", help="run every oracle suite and print a pass/fail table")
    return parser


def _resolve_hamiltonian_path(arg: str) -> str:
    if arg in ("entangled", "product"):
        return str(vqe.bundled_path(arg))
    return arg


def _cmd_run_vqe(args) -> int:
    policy = qgt.PseudoInverse(rcond=args.rcond) if args.inversion == "pinv" \
        else qgt.Tikhonov(epsilon=args.epsilon)
    opt = optimize.OptConfig(learning_rate=args.lr, max_steps=args.steps, tol=args.tol,
                             optimizer=args.optimizer, metric_mode=args.metric,
                             inversion=policy, seed=args.seed)
    config = harness.ExperimentConfig(kind=args.ansatz, opt=opt,
                                      hamiltonian_path=_resolve_hamiltonian_path(args.hamiltonian),
                                      trials=args.trials, out_dir=args.out)
    summary = harness.run_vqe_experiment(config)
    med = summary["median_steps_to_threshold"]
    print(f"wrote {args.trials} trace files and summary.json to {args.out}")
    print(f"reached {summary['threshold']:g} Ha error in "
          f"{summary['reached_fraction'] * 100:.0f}% of trials"
          + (f", median {med:g} steps" if med is not None else ""))
    return 0


def _cmd_scan(args) -> int:
    kind = args.ansatz
    m = ansatz.param_count(kind)
    fixed = np.zeros(m)
    for item in args.fix:
        try:
            idx, val = item.split("=")
            fixed[int(idx) - 1] = float(val)
        except (ValueError, IndexError) as exc:
            raise ValueError(f"bad --fix argument {item!r}; expected INDEX=VALUE") from exc
    a, b = (i - 1 for i in args.scan)
    _, mask, meta = harness.scan_landscape(kind, (a, b), fixed_theta=fixed,
                                           resolution=args.grid, clip=tuple(args.clip),
                                           out_prefix=args.out)
    print(f"wrote {meta['resolution']}x{meta['resolution']} grid to {args.out}.csv "
          f"({int(mask.sum())} clipped cells)")
    return 0


def _cmd_hopf(args) -> int:
    theta = [float(v) for v in args.theta.split(",") if v.strip() != ""]
    report = harness.hopf_report(args.ansatz, theta)
    print(json.dumps(report, indent=1))
    return 0


def _cmd_validate() -> int:
    ok, rows = harness.run_validation()
    width = max(len(name) for name, _, _ in rows)
    for name, passed, detail in rows:
        print(f"{name:<{width}}  {'PASS' if passed else 'FAIL'}  {detail}")
    print("all suites passed" if ok else "VALIDATION FAILED")
    return 0 if ok else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run-vqe":
            return _cmd_run_vqe(args)
        if args.command == "scan-landscape":
            return _cmd_scan(args)
        if args.command == "hopf":
            return _cmd_hopf(args)
        return _cmd_validate()
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
