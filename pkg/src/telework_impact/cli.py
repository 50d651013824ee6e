"""Command-line pipeline: validate | profile | delta | sweep | breakeven.

Exit codes are a stable contract: 0 success, 1 input or configuration
error, 2 insufficient data, 3 no root in the given bracket. Machine
artifacts are deterministic; the console summary is rounded to ``--round``
decimals and wall-clock metadata lives only in the run_info sidecar.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .aggregation import (
    aggregate_profiles,
    day_counts,
    profiles_from_dict,
)
from .config import AppConfig, load_config
from .diary import apply_quality_filter, parse_diary_path
from .energy import compare_day_types, direct_components
from .errors import (
    ConfigError,
    MissingProfileError,
    NoRootError,
    TeleworkImpactError,
)
from .model import COMPARABLE_DAY_TYPES, Activity, DayType, validate_factor_table
from .scenario import Scenario, break_even, load_scenario, sweep
from . import report as rpt

CONFIG_ENV_VAR = "TELEWORK_IMPACT_CONFIG"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INSUFFICIENT_DATA = 2
EXIT_NO_ROOT = 3

_BASELINE_CHOICES = {
    "office": (DayType.EMPLOYER_OFFICE,),
    "home": (DayType.HOME,),
    "both": (DayType.EMPLOYER_OFFICE, DayType.HOME),
}


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; our contract reserves 2
    for insufficient data, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser, diaries: bool = True) -> None:
    parser.add_argument(
        "--config",
        help=f"configuration JSON (falls back to ${CONFIG_ENV_VAR})",
    )
    if diaries:
        parser.add_argument("--diaries", help="diary CSV file")
    parser.add_argument("--out", default="out", help="output directory (default: out)")
    parser.add_argument(
        "--format",
        choices=("csv", "json", "both"),
        default="both",
        help="artifact formats for result tables (default: both)",
    )
    parser.add_argument(
        "--round",
        type=int,
        default=2,
        metavar="N",
        help="decimals for the console summary (files keep full precision)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="telework-impact",
        description="Energy accounting for co-working versus office and home days.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse diaries and report rejected days")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("profile", help="aggregate activity and modal profiles per day type")
    _add_common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("delta", help="energy delta of a co-working day versus baselines")
    _add_common(p)
    p.add_argument(
        "--baseline",
        choices=("office", "home", "both"),
        default="office",
        help="baseline day type(s) (default: office)",
    )
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("sweep", help="evaluate one parameter over a list of values")
    _add_common(p)
    p.add_argument("--profiles", help="profiles JSON from a previous 'profile' run")
    p.add_argument("--scenario", help="scenario JSON file")
    p.add_argument("--baseline", choices=("office", "home"), default="office")
    p.add_argument("--parameter", required=True, help="parameter to sweep")
    p.add_argument(
        "--values", type=float, nargs="+", required=True, help="parameter values"
    )
    p.add_argument(
        "--parallel", type=int, default=1, metavar="N", help="worker threads for sweep points"
    )
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("breakeven", help="find the parameter value where net energy is zero")
    _add_common(p)
    p.add_argument("--profiles", help="profiles JSON from a previous 'profile' run")
    p.add_argument("--scenario", help="scenario JSON file")
    p.add_argument("--baseline", choices=("office", "home"), default="office")
    p.add_argument("--parameter", required=True)
    p.add_argument(
        "--bounds", type=float, nargs=2, required=True, metavar=("LO", "HI")
    )
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.set_defaults(func=cmd_breakeven)

    return parser


def _config_path(args) -> str:
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if not path:
        raise ConfigError(
            f"no configuration file given; pass --config or set ${CONFIG_ENV_VAR}"
        )
    return path


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _run_pipeline(args, config: AppConfig):
    if not getattr(args, "diaries", None):
        raise ConfigError("no diary file given; pass --diaries")
    try:
        days, parse_rejected = parse_diary_path(args.diaries)
    except OSError as exc:
        raise ConfigError(f"cannot read diary file {args.diaries}: {exc}") from exc
    kept, quality_rejected = apply_quality_filter(days, config.quality_rules)
    rejected = sorted(
        parse_rejected + quality_rejected,
        key=lambda item: (item.row is None, item.row or 0),
    )
    return days, kept, rejected


def _rows_seen(days, rejected) -> int:
    """Data rows in the input file: parsed days plus parse failures."""
    return len(days) + sum(1 for item in rejected if item.day is None)


def _load_profiles(args, config: AppConfig):
    """Profiles either recomputed from diaries or loaded from a profiles JSON."""
    if getattr(args, "profiles", None):
        path = Path(args.profiles)
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read profiles file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"profiles file {path} is not valid JSON: {exc}") from exc
        try:
            return profiles_from_dict(payload.get("profiles", payload)), {"profiles": str(path)}
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"profiles file {path} is malformed: {exc}") from exc
    days, kept, _ = _run_pipeline(args, config)
    return aggregate_profiles(kept), {"diaries": str(args.diaries)}


def _round(value: float, args) -> float:
    return round(value, args.round)


def cmd_validate(args) -> int:
    config = load_config(_config_path(args))
    days, kept, rejected = _run_pipeline(args, config)
    out = _out_dir(args)

    rpt.write_csv(out / "rejections.csv", rpt.REJECTION_HEADER, rpt.rejection_rows(rejected))
    report = rpt.base_report("validate", config, __version__, {"diaries": str(args.diaries)})
    report["input_summary"] = rpt.input_summary(
        args.diaries, _rows_seen(days, rejected), len(kept), rejected
    )
    report["day_counts"] = {t.value: n for t, n in day_counts(kept).items()}
    rpt.write_json(out / "report.json", report)
    rpt.write_run_info(out)

    print(f"parsed {report['input_summary']['rows_parsed']} rows from {args.diaries}")
    print(f"kept {len(kept)}, rejected {len(rejected)} (see {out / 'rejections.csv'})")
    for reason, count in sorted(report["input_summary"]["rejected_by_reason"].items()):
        print(f"  {reason}: {count}")
    return EXIT_OK if kept else EXIT_INSUFFICIENT_DATA


def cmd_profile(args) -> int:
    config = load_config(_config_path(args))
    days, kept, rejected = _run_pipeline(args, config)
    profiles = aggregate_profiles(kept)
    out = _out_dir(args)

    rpt.write_csv(out / "profiles.csv", rpt.PROFILE_HEADER, rpt.profile_rows(profiles))
    rpt.write_json(out / "profiles.json", {"profiles": rpt.profiles_section(profiles)})
    rpt.write_csv(out / "plot_data.csv", rpt.PLOT_HEADER, rpt.plot_rows(profiles))
    report = rpt.base_report("profile", config, __version__, {"diaries": str(args.diaries)})
    report["input_summary"] = rpt.input_summary(
        args.diaries, _rows_seen(days, rejected), len(kept), rejected
    )
    report["profiles"] = rpt.profiles_section(profiles)
    rpt.write_json(out / "report.json", report)
    rpt.write_run_info(out)

    missing = [t for t in COMPARABLE_DAY_TYPES if profiles[t].day_count == 0]
    for day_type in COMPARABLE_DAY_TYPES:
        profile = profiles[day_type]
        travel = profile.mean_activity_minutes[Activity.TRAVEL]
        print(
            f"{day_type.value}: {profile.day_count} days, "
            f"mean travel {_round(travel, args)} min"
        )
    if missing:
        print(
            "insufficient data: no days for "
            + ", ".join(t.value for t in missing),
            file=sys.stderr,
        )
        return EXIT_INSUFFICIENT_DATA
    return EXIT_OK


def _emit_deltas(args, out: Path, deltas) -> None:
    if args.format in ("csv", "both"):
        rpt.write_csv(out / "delta.csv", rpt.DELTA_HEADER, rpt.delta_rows(deltas))
    if args.format in ("json", "both"):
        rpt.write_json(out / "delta.json", {"deltas": [rpt.delta_to_dict(d) for d in deltas]})


def cmd_delta(args) -> int:
    config = load_config(_config_path(args))
    validate_factor_table(config.factors, config.inventory)
    days, kept, rejected = _run_pipeline(args, config)
    profiles = aggregate_profiles(kept)
    direct = direct_components(config.inventory, config.factors)

    deltas = [
        compare_day_types(profiles[DayType.COWORKING], profiles[baseline], direct, config.factors)
        for baseline in _BASELINE_CHOICES[args.baseline]
    ]

    out = _out_dir(args)
    _emit_deltas(args, out, deltas)
    report = rpt.base_report("delta", config, __version__, {"diaries": str(args.diaries)})
    report["input_summary"] = rpt.input_summary(
        args.diaries, _rows_seen(days, rejected), len(kept), rejected
    )
    report["profiles"] = rpt.profiles_section(profiles)
    report["deltas"] = [rpt.delta_to_dict(d) for d in deltas]
    rpt.write_json(out / "report.json", report)
    rpt.write_run_info(out)

    for delta in deltas:
        print(
            f"coworking vs {delta.baseline.value}: "
            f"facility {_round(delta.facility_mj, args):+}, "
            f"equipment {_round(delta.equipment_mj, args):+}, "
            f"travel {_round(delta.travel_mj, args):+}, "
            f"net {_round(delta.net_mj, args):+} MJ"
        )
    return EXIT_OK


def _scenario_from_args(args) -> Scenario:
    if getattr(args, "scenario", None):
        return load_scenario(args.scenario)
    return Scenario()


def cmd_sweep(args) -> int:
    config = load_config(_config_path(args))
    validate_factor_table(config.factors, config.inventory)
    profiles, profile_source = _load_profiles(args, config)
    scenario = _scenario_from_args(args)
    baseline = _BASELINE_CHOICES[args.baseline][0]

    result = sweep(
        config.inventory,
        config.factors,
        profiles,
        scenario,
        args.parameter,
        args.values,
        baseline=baseline,
        max_workers=args.parallel,
    )

    out = _out_dir(args)
    if args.format in ("csv", "both"):
        rpt.write_csv(out / "sweep.csv", rpt.SWEEP_HEADER, rpt.sweep_rows(result))
    if args.format in ("json", "both"):
        rpt.write_json(out / "sweep.json", rpt.sweep_to_dict(result))
    report = rpt.base_report("sweep", config, __version__, profile_source)
    report["scenario"] = scenario.name
    report["sweep"] = rpt.sweep_to_dict(result)
    rpt.write_json(out / "report.json", report)
    rpt.write_run_info(out)

    print(f"swept {args.parameter} over {len(result.points)} values (baseline {baseline.value})")
    for value, delta in result.points:
        print(f"  {args.parameter}={value:g}: net {_round(delta.net_mj, args):+} MJ")
    return EXIT_OK


def cmd_breakeven(args) -> int:
    config = load_config(_config_path(args))
    validate_factor_table(config.factors, config.inventory)
    profiles, profile_source = _load_profiles(args, config)
    scenario = _scenario_from_args(args)
    baseline = _BASELINE_CHOICES[args.baseline][0]
    lo, hi = args.bounds

    root = break_even(
        config.inventory,
        config.factors,
        profiles,
        scenario,
        args.parameter,
        (lo, hi),
        tolerance=args.tolerance,
        baseline=baseline,
    )
    # Components at the root, evaluated as a degenerate one-point sweep.
    at_root = sweep(
        config.inventory,
        config.factors,
        profiles,
        scenario,
        args.parameter,
        [root],
        baseline=baseline,
    )
    delta = at_root.points[0][1]

    out = _out_dir(args)
    if args.format in ("csv", "both"):
        rpt.write_csv(out / "breakeven.csv", rpt.SWEEP_HEADER, rpt.sweep_rows(at_root))
    payload = {
        "parameter": args.parameter,
        "root": root,
        "bounds": [lo, hi],
        "tolerance": args.tolerance,
        "baseline": baseline.value,
        "delta_at_root": rpt.scenario_delta_to_dict(delta),
    }
    if args.format in ("json", "both"):
        rpt.write_json(out / "breakeven.json", payload)
    report = rpt.base_report("breakeven", config, __version__, profile_source)
    report["scenario"] = scenario.name
    report["breakeven"] = payload
    rpt.write_json(out / "report.json", report)
    rpt.write_run_info(out)

    print(
        f"break-even {args.parameter} = {root} "
        f"(net {_round(delta.net_mj, args):+} MJ at root, baseline {baseline.value})"
    )
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoRootError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    except MissingProfileError as exc:
        print(f"error: insufficient data: {exc}", file=sys.stderr)
        return EXIT_INSUFFICIENT_DATA
    except TeleworkImpactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
