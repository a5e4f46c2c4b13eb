"""Command line interface.

Subcommands
-----------
``bounds-table``
    Print the error-bound constants table (CSV or markdown).
``simulate``
    Simulate one system and its fitted surrogate; writes trajectory CSVs.
``sweep``
    Run an error-vs-N sweep; writes errors.csv, fit.csv, meta.json.
``fit``
    Power-law fit of an existing errors.csv; prints A and B.

Exit codes: 0 success, 1 invalid input (including usage errors),
2 numerical failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys

from .errors import InputError, NumericalError

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors surface as InputError (exit 1)."""

    def error(self, message: str):  # noqa: D102 - argparse hook
        raise InputError(f"{self.prog}: {message}")


def _floats_arg(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected comma-separated floats, got {text!r}") from exc


def _ints_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="kedmd",
        description="Kernel-based Koopman approximation of stochastic systems, "
        "with probabilistic error-bound constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser(
        "bounds-table",
        help="print the bound-constants table",
        description="Print, per sample count, the squared success probability "
        "(percent) at the marginal admissible failure level and the matching "
        "error constant.",
    )
    p_table.add_argument("--c1", type=float, default=0.5, help="embedding-gap constant")
    p_table.add_argument("--k-inf", type=float, default=1.0, help="kernel sup-norm")
    p_table.add_argument(
        "--n-values", type=_ints_arg, default=None, help="comma-separated sample counts"
    )
    p_table.add_argument(
        "--format", choices=("csv", "markdown"), default="csv", help="output format"
    )
    p_table.add_argument("--out", default=None, help="optional output file (default stdout)")
    p_table.set_defaults(func=_cmd_bounds_table)

    p_sim = sub.add_parser(
        "simulate",
        help="simulate a system and its fitted surrogate",
        description="Sample training pairs, fit a model, then write the "
        "true-system ensemble (trajectories_true.csv) and the model's "
        "stochastic prediction ensemble (trajectories_kedmd.csv).",
    )
    _add_model_flags(p_sim)
    p_sim.add_argument("--out", default="simulate_out", help="output directory")
    p_sim.add_argument("--n-train", type=int, default=200, help="training sample count")
    p_sim.add_argument("--x0", type=_floats_arg, default=None, help="initial state (csv floats)")
    p_sim.add_argument("--horizon", type=int, default=None, help="number of steps")
    p_sim.add_argument("--n-realizations", type=int, default=30, help="ensemble size")
    p_sim.add_argument("--n-zeta", type=int, default=30, help="noise-lift draws per step")
    p_sim.set_defaults(func=_cmd_simulate)

    p_sweep = sub.add_parser(
        "sweep",
        help="run an error-vs-N sweep",
        description="Run the configured sweep and write errors.csv, fit.csv "
        "and meta.json into the output directory.",
    )
    p_sweep.add_argument("--config", default=None, help="flat JSON config file")
    _add_model_flags(p_sweep)
    p_sweep.add_argument("--delta", type=float, default=None, help="bound failure level")
    p_sweep.add_argument("--out", default="sweep_out", help="output directory")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_fit = sub.add_parser(
        "fit",
        help="power-law fit of an existing errors.csv",
        description="Fit error = A * N**B through all rows of an errors.csv "
        "and print A and B.",
    )
    p_fit.add_argument("--in", dest="infile", required=True, help="errors.csv path")
    p_fit.set_defaults(func=_cmd_fit)

    return parser


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--system",
        choices=("linear", "sir", "multiplicative"),
        default=None,
        help="test system",
    )
    p.add_argument("--seed", type=int, default=None, help="root random seed")
    p.add_argument("--alpha", type=float, default=None, help="linear-system coupling")
    p.add_argument("--beta", type=float, default=None, help="SIR infection rate")
    p.add_argument("--gamma", type=float, default=None, help="SIR recovery rate")
    p.add_argument("--sigma", type=float, default=None, help="noise standard deviation")
    p.add_argument("--nu", type=float, default=None, help="Matern smoothness order")
    p.add_argument("--ell", type=float, default=None, help="kernel length-scale")
    p.add_argument("--ridge", type=float, default=None, help="Gram-matrix ridge")


def _config_from_args(args) -> "ExperimentConfig":
    from .harness import ExperimentConfig

    if getattr(args, "config", None) is not None:
        cfg = ExperimentConfig.from_file(args.config)
    else:
        cfg = ExperimentConfig(system=args.system or "linear")
    overrides = {}
    for key in ("system", "seed", "alpha", "beta", "gamma", "sigma", "nu", "ell", "ridge"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "delta", None) is not None:
        overrides["delta"] = args.delta
    if overrides:
        from dataclasses import replace

        cfg = replace(cfg, **overrides)
    return cfg


def _cmd_bounds_table(args) -> int:
    from .bounds import TABLE_N_VALUES, table

    rows = table(args.n_values or TABLE_N_VALUES, c1=args.c1, k_inf=args.k_inf)
    if args.format == "csv":
        lines = ["N,success_pct,c_tilde"]
        lines += [f"{n},{pct!r},{ct!r}" for n, pct, ct in rows]
    else:
        lines = [
            "| N | success probability (%) | error constant |",
            "| ---: | ---: | ---: |",
        ]
        lines += [f"| {n} | {pct:.2f} | {ct:.2f} |" for n, pct, ct in rows]
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


def _cmd_simulate(args) -> int:
    import json
    from dataclasses import asdict
    from pathlib import Path

    import numpy as np

    from . import __version__
    from .dynamics import sample_pairs
    from .koopman import fit
    from .rng import STREAM_PREDICT, STREAM_REFERENCE, STREAM_TRAINING, substream
    from .trajectory import TrajectoryConfig, predict_stochastic, simulate_true, write_bundle_csv

    cfg = _config_from_args(args)
    if args.x0 is not None:
        from dataclasses import replace

        cfg = replace(cfg, x0=args.x0)
    if args.horizon is not None:
        from dataclasses import replace

        cfg = replace(cfg, horizon=args.horizon)
    cfg = cfg.resolved()

    system = cfg.build_system()
    kernel = cfg.kernel()
    n = args.n_train
    if n < 1:
        raise InputError(f"--n-train must be >= 1, got {n}")
    data = sample_pairs(system, n, substream(cfg.seed, STREAM_TRAINING, n, 0))
    model = fit(data, kernel, cfg.ridge)
    tcfg = TrajectoryConfig(
        x0=np.asarray(cfg.x0, dtype=float),
        horizon=cfg.horizon,
        n_realizations=args.n_realizations,
        n_zeta=args.n_zeta,
    )
    true_bundle = simulate_true(system, tcfg, substream(cfg.seed, STREAM_REFERENCE, n, 0))
    pred_bundle = predict_stochastic(
        model, system, tcfg, substream(cfg.seed, STREAM_PREDICT, n, 0)
    )

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    write_bundle_csv(true_bundle, outdir / "trajectories_true.csv")
    write_bundle_csv(pred_bundle, outdir / "trajectories_kedmd.csv")
    meta = {
        "config": asdict(cfg),
        "n_train": n,
        "extrapolated": pred_bundle.extrapolated,
        "versions": {"kedmd": __version__, "numpy": np.__version__},
    }
    with open(outdir / "meta.json", "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {outdir / 'trajectories_true.csv'} and {outdir / 'trajectories_kedmd.csv'}")
    return 0


def _cmd_sweep(args) -> int:
    from .harness import emit_results, run_sweep

    cfg = _config_from_args(args)
    result = run_sweep(cfg)
    paths = emit_results(result, args.out)
    print(
        f"fitted error ~ {result.amplitude:.4g} * N**({result.exponent:.4g}); "
        f"wrote {paths['errors']}, {paths['fit']}, {paths['meta']}"
    )
    return 0


def _cmd_fit(args) -> int:
    from .harness import fit_power_law, read_errors_csv

    rows = read_errors_csv(args.infile)
    amplitude, exponent = fit_power_law([(n, err) for n, _, err in rows])
    print(f"A={amplitude!r}")
    print(f"B={exponent!r}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
