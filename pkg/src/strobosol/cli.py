"""Command-line front end.

Verbs:

    run       simulate a scenario file, write per-curve trajectory CSVs
    refine    polish an invariant profile and write it as a snapshot CSV
    estimate  convert laboratory parameters to the dimensionless map
    validate  parse and validate a scenario file, no simulation
    sweep     run several scenario files in one invocation

Exit codes: 0 success, 1 config/validation error, 2 runtime failure,
3 refiner did not converge.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .config import ConfigError, InitialSpec, RunConfig, Scenario, parse_config
from .core import Grid, WaveFunction, boost, make_grid, normalize
from .io import (
    read_snapshot_csv,
    write_manifest,
    write_snapshot_csv,
    write_trajectory_csv,
)
from .propagator import evolve
from .refiner import (
    PHASE_PEAK,
    PHASE_PROJECTION,
    RefinerOptions,
    find_fixed_point,
)
from .soliton import matched_gaussian, phi0, soliton_state
from .units import epsilon_from_physical, scale_factors

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2
EXIT_NO_CONVERGENCE = 3

log = logging.getLogger("strobosol")


def build_initial(grid: Grid, spec: InitialSpec, scenario: Scenario, config_dir: Path) -> WaveFunction:
    """Construct the state described by one [initial.*] section."""
    if spec.kind == "gaussian":
        if spec.width is None:
            state = matched_gaussian(grid, center=spec.center)
        else:
            state = matched_gaussian(grid, center=spec.center, width=spec.width)
    elif spec.kind == "phi0":
        state = normalize(phi0(grid, center=spec.center))
    elif spec.kind == "soliton":
        state, _ = soliton_state(
            grid,
            scenario.epsilon,
            velocity=spec.velocity,
            center=spec.center,
            odd_coeff=spec.odd_coeff,
            even_coeff=spec.even_coeff,
        )
        return state  # the soliton constructor already applies the boost
    elif spec.kind == "file":
        assert spec.path is not None
        path = Path(spec.path)
        if not path.is_absolute():
            path = config_dir / path
        state = read_snapshot_csv(path, grid)
    else:  # pragma: no cover - rejected by config validation
        raise ValueError(f"unknown initial kind {spec.kind!r}")
    if spec.velocity != 0.0:
        state = boost(state, spec.velocity)
    return state


def run_scenario(config: RunConfig, out_dir: Path) -> dict:
    """Simulate every curve of a scenario; returns the manifest payload."""
    scenario = config.scenario
    if scenario is None:
        raise ConfigError(f"{config.path}: no simulation sections, nothing to run")
    grid = make_grid(scenario.grid_points, scenario.grid_length)
    model = scenario.kick_model()
    config_dir = Path(config.path).resolve().parent
    out_dir.mkdir(parents=True, exist_ok=True)

    variants = []
    started = time.perf_counter()
    for spec in scenario.initials:
        state = build_initial(grid, spec, scenario, config_dir)
        record = scenario.record_spec(spec)
        strength = None if spec.kicked else 0.0
        trajectory = evolve(
            state,
            scenario.epsilon,
            scenario.n_kicks,
            model=model,
            record=record,
            strength=strength,
        )
        curve_dir = out_dir / spec.label
        curve_dir.mkdir(parents=True, exist_ok=True)
        trajectory_path = curve_dir / "trajectory.csv"
        write_trajectory_csv(trajectory, trajectory_path)
        snapshot_entries = []
        for t, snap in trajectory.snapshots:
            kick_index = int(round(t / scenario.epsilon))
            snap_path = curve_dir / f"snapshot_{kick_index:06d}.csv"
            write_snapshot_csv(snap, snap_path)
            snapshot_entries.append({"t": t, "file": str(snap_path.relative_to(out_dir))})
        variants.append(
            {
                "label": spec.label,
                "kind": spec.kind,
                "kicked": spec.kicked,
                "velocity": spec.velocity,
                "center": spec.center,
                "width": spec.width,
                "odd_coeff": spec.odd_coeff,
                "even_coeff": spec.even_coeff,
                "source_path": spec.path,
                "trajectory": str(trajectory_path.relative_to(out_dir)),
                "snapshots": snapshot_entries,
                "final_fidelity": float(trajectory.fidelities[-1]),
                "final_width": float(trajectory.widths[-1]),
            }
        )
        log.info(
            "%s: %d samples, final fidelity %.6g, final width %.6g",
            spec.label,
            trajectory.times.size,
            trajectory.fidelities[-1],
            trajectory.widths[-1],
        )

    payload = {
        "tool": {"name": "strobosol", "version": __version__},
        "config": str(config.path),
        "grid": {
            "n_points": grid.n_points,
            "length": grid.length,
            "dx": grid.dx,
        },
        "evolution": {
            "epsilon": scenario.epsilon,
            "n_kicks": scenario.n_kicks,
            "kick": scenario.kick_variant,
            "tau": scenario.tau,
            "substep_dt": scenario.substep_dt,
        },
        "record": {
            "at": scenario.record_at,
            "comoving": scenario.comoving,
            "snapshots": scenario.snapshots,
            "snapshot_stride": scenario.snapshot_stride,
        },
        "variants": variants,
        "wall_time_s": time.perf_counter() - started,
    }
    write_manifest(payload, out_dir / "manifest.json")
    return payload


def estimate_report(config: RunConfig) -> dict:
    physical = config.physical
    if physical is None:
        raise ConfigError(f"{config.path}: no [physical] section to estimate from")
    params = physical.physical_params()
    scales = scale_factors(params)
    return {
        "inputs": {
            "atom_count": physical.atom_count,
            "mass_u": physical.mass_u,
            "scattering_length_nm": physical.scattering_length_nm,
            "transverse_length_um": physical.transverse_length_um,
            "kick_duration_us": physical.kick_duration_us,
            "kick_period_ms": physical.kick_period_ms,
        },
        "derived": {
            "kick_length_m": params.kick_length_m,
            "epsilon": epsilon_from_physical(params),
            "position_scale_per_m": scales.position,
            "time_scale_per_s": scales.time,
            "amplitude_scale_sqrt_m": scales.amplitude,
        },
    }


def _default_out(config_path: str) -> Path:
    return Path("out") / Path(config_path).stem


def _cmd_run(args: argparse.Namespace) -> int:
    config = parse_config(args.config)
    out_dir = Path(args.out) if args.out else _default_out(args.config)
    run_scenario(config, out_dir)
    log.info("outputs written to %s", out_dir)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    config = parse_config(args.config)
    parts = []
    if config.scenario is not None:
        parts.append(f"{len(config.scenario.initials)} initial state(s)")
    if config.physical is not None:
        parts.append("physical section")
    print(f"OK: {args.config} ({', '.join(parts)})")
    return EXIT_OK


def _cmd_estimate(args: argparse.Namespace) -> int:
    config = parse_config(args.config)
    report = estimate_report(config)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "estimate.json").write_text(text + "\n")
        log.info("estimate written to %s", out_dir / "estimate.json")
    if not args.quiet:
        print(text)
    return EXIT_OK


def _build_seed(args: argparse.Namespace, grid: Grid) -> WaveFunction:
    if args.seed_file:
        return read_snapshot_csv(args.seed_file, grid)
    if args.seed == "soliton":
        return soliton_state(grid, args.epsilon)[0]
    if args.seed == "phi0":
        return normalize(phi0(grid))
    return matched_gaussian(grid)


def _cmd_refine(args: argparse.Namespace) -> int:
    grid = make_grid(args.grid_points, args.grid_length)
    seed = _build_seed(args, grid)
    options = RefinerOptions(
        max_iters=args.max_iters,
        mixing=args.mixing,
        tol=args.tol,
        phase_convention=args.phase_convention,
        precondition=not args.no_precondition,
    )
    state, report = find_fixed_point(args.epsilon, seed, options)
    out_dir = Path(args.out) if args.out else Path("out") / f"refine_eps{args.epsilon:g}"
    out_dir.mkdir(parents=True, exist_ok=True)
    write_snapshot_csv(state, out_dir / "refined.csv")
    payload = {
        "epsilon": args.epsilon,
        "grid": {"n_points": grid.n_points, "length": grid.length},
        "seed": args.seed_file if args.seed_file else args.seed,
        "options": {
            "max_iters": options.max_iters,
            "mixing": options.mixing,
            "tol": options.tol,
            "phase_convention": options.phase_convention,
            "precondition": options.precondition,
        },
        "converged": report.converged,
        "iterations": report.iterations,
        "final_residual": report.final_residual,
        "alpha": report.alpha,
    }
    write_manifest(payload, out_dir / "refine_report.json")
    log.info(
        "refine eps=%g: converged=%s after %d iterations, residual %.3e, alpha %.6f",
        args.epsilon,
        report.converged,
        report.iterations,
        report.final_residual,
        report.alpha,
    )
    if not report.converged:
        print(
            f"refiner did not converge within {options.max_iters} iterations "
            f"(residual {report.final_residual:.3e})",
            file=sys.stderr,
        )
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    out_root = Path(args.out) if args.out else Path("out")
    worst = EXIT_OK
    for config_path in args.configs:
        try:
            config = parse_config(config_path)
            run_scenario(config, out_root / Path(config_path).stem)
            log.info("sweep: %s done", config_path)
        except (ConfigError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            worst = max(worst, EXIT_CONFIG)
        except Exception as exc:
            print(f"error: {config_path}: {exc}", file=sys.stderr)
            worst = max(worst, EXIT_RUNTIME)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strobosol",
        description="Simulator for the periodically kicked cubic Schrodinger equation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    run_p = sub.add_parser("run", help="simulate a scenario file")
    run_p.add_argument("--config", required=True, help="scenario file (INI)")
    run_p.add_argument("--out", help="output directory (default out/<config stem>)")
    run_p.add_argument("--quiet", action="store_true", help="suppress progress output")
    run_p.set_defaults(func=_cmd_run)

    val_p = sub.add_parser("validate", help="check a scenario file without running it")
    val_p.add_argument("--config", required=True)
    val_p.set_defaults(func=_cmd_validate, quiet=False)

    est_p = sub.add_parser("estimate", help="convert laboratory parameters to epsilon")
    est_p.add_argument("--config", required=True, help="file with a [physical] section")
    est_p.add_argument("--out", help="also write estimate.json to this directory")
    est_p.add_argument("--quiet", action="store_true")
    est_p.set_defaults(func=_cmd_estimate)

    ref_p = sub.add_parser("refine", help="refine an invariant profile")
    ref_p.add_argument("--epsilon", type=float, required=True)
    ref_p.add_argument("--grid-points", type=int, default=2048)
    ref_p.add_argument("--grid-length", type=float, default=80.0)
    ref_p.add_argument(
        "--seed",
        choices=["soliton", "phi0", "gaussian"],
        default="soliton",
        help="built-in seed profile (ignored with --seed-file)",
    )
    ref_p.add_argument("--seed-file", help="snapshot CSV to use as the seed")
    ref_p.add_argument("--tol", type=float, default=1e-10)
    ref_p.add_argument("--max-iters", type=int, default=500)
    ref_p.add_argument("--mixing", type=float, default=0.5)
    ref_p.add_argument(
        "--phase-convention",
        choices=[PHASE_PEAK, PHASE_PROJECTION],
        default=PHASE_PEAK,
    )
    ref_p.add_argument(
        "--no-precondition",
        action="store_true",
        help="use plain damped iteration (slow; for diagnostics)",
    )
    ref_p.add_argument("--out", help="output directory")
    ref_p.add_argument("--quiet", action="store_true")
    ref_p.set_defaults(func=_cmd_refine)

    sweep_p = sub.add_parser("sweep", help="run several scenario files")
    sweep_p.add_argument("configs", nargs="+", help="scenario files")
    sweep_p.add_argument("--out", help="output root (default out/)")
    sweep_p.add_argument("--quiet", action="store_true")
    sweep_p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if getattr(args, "quiet", False) else logging.INFO,
        format="%(message)s",
    )
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # noqa: BLE001 - map any failure to exit 2
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
