"""Deterministic CSV/JSON artifact writers.

All machine artifacts carry full float precision (shortest round-trip repr)
and contain no timestamps, so identical inputs produce byte-identical files.
Wall-clock metadata goes into a separate sidecar file that is excluded from
any comparison.
"""

from __future__ import annotations

import csv
import datetime as _dt
import json
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .aggregation import DayTypeProfile, profiles_to_dict
from .config import AppConfig
from .diary import RejectedDay
from .model import Activity, DayType, EnergyDelta, TransportMode
from .scenario import ScenarioDelta, SweepResult

REJECTION_HEADER = ("row", "participant_id", "date", "reason")
PROFILE_HEADER = ("day_type", "metric", "key", "value")
PLOT_HEADER = ("day_type", "series", "key", "value")
DELTA_HEADER = ("baseline", "facility_mj", "equipment_mj", "travel_mj", "net_mj")
SWEEP_HEADER = (
    "parameter",
    "value",
    "facility_mj",
    "equipment_mj",
    "travel_mj",
    "credit_mj",
    "net_mj",
)

RUN_INFO_FILENAME = "run_info.json"


def fmt(value) -> str:
    """Full-precision cell rendering; floats use shortest round-trip repr."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_json(path: str | Path, payload) -> Path:
    path = Path(path)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def rejection_rows(rejected: Iterable[RejectedDay]) -> list[list[str]]:
    return [
        [
            "" if item.row is None else str(item.row),
            item.participant_id,
            item.date,
            item.reason.value,
        ]
        for item in rejected
    ]


def profile_rows(profiles: Mapping[DayType, DayTypeProfile]) -> list[list[str]]:
    rows = []
    for day_type, profile in profiles.items():
        rows.append([day_type.value, "day_count", "days", str(profile.day_count)])
        for activity in Activity:
            rows.append(
                [
                    day_type.value,
                    "mean_activity_minutes",
                    activity.value,
                    fmt(profile.mean_activity_minutes[activity]),
                ]
            )
        for mode in TransportMode:
            rows.append(
                [
                    day_type.value,
                    "mean_mode_minutes",
                    mode.value,
                    fmt(profile.mean_mode_minutes[mode]),
                ]
            )
        for mode in TransportMode:
            rows.append(
                [day_type.value, "mode_share", mode.value, fmt(profile.mode_share[mode])]
            )
    return rows


def plot_rows(profiles: Mapping[DayType, DayTypeProfile]) -> list[list[str]]:
    """Stacked-bar friendly shape: one series per figure-style panel."""
    rows = []
    for day_type, profile in profiles.items():
        for activity in Activity:
            rows.append(
                [
                    day_type.value,
                    "activity_minutes",
                    activity.value,
                    fmt(profile.mean_activity_minutes[activity]),
                ]
            )
        for mode in TransportMode:
            rows.append(
                [
                    day_type.value,
                    "mode_minutes",
                    mode.value,
                    fmt(profile.mean_mode_minutes[mode]),
                ]
            )
        for mode in TransportMode:
            rows.append(
                [day_type.value, "mode_share", mode.value, fmt(profile.mode_share[mode])]
            )
    return rows


def delta_to_dict(delta: EnergyDelta) -> dict:
    return {
        "baseline": delta.baseline.value,
        "facility_mj": delta.facility_mj,
        "equipment_mj": delta.equipment_mj,
        "travel_mj": delta.travel_mj,
        "net_mj": delta.net_mj,
    }


def delta_rows(deltas: Iterable[EnergyDelta]) -> list[list[str]]:
    return [
        [
            delta.baseline.value,
            fmt(delta.facility_mj),
            fmt(delta.equipment_mj),
            fmt(delta.travel_mj),
            fmt(delta.net_mj),
        ]
        for delta in deltas
    ]


def scenario_delta_to_dict(delta: ScenarioDelta, cw_days_per_week: float | None = None) -> dict:
    payload = {
        "baseline": delta.baseline.value,
        "facility_mj": delta.facility_mj,
        "equipment_mj": delta.equipment_mj,
        "travel_mj": delta.travel_mj,
        "credit_mj": delta.credit_mj,
        "net_mj": delta.net_mj,
    }
    if cw_days_per_week is not None:
        payload["cw_days_per_week"] = cw_days_per_week
        payload["weekly_net_mj"] = cw_days_per_week * delta.net_mj
    return payload


def sweep_rows(result: SweepResult) -> list[list[str]]:
    return [
        [
            result.parameter,
            fmt(value),
            fmt(delta.facility_mj),
            fmt(delta.equipment_mj),
            fmt(delta.travel_mj),
            fmt(delta.credit_mj),
            fmt(delta.net_mj),
        ]
        for value, delta in result.points
    ]


def sweep_to_dict(result: SweepResult) -> dict:
    points = []
    for value, delta in result.points:
        days = value if result.parameter == "cw_days_per_week" else None
        entry = {"value": value, **scenario_delta_to_dict(delta, days)}
        points.append(entry)
    return {"parameter": result.parameter, "points": points}


def base_report(command: str, config: AppConfig, version: str, inputs: Mapping[str, str]) -> dict:
    return {
        "tool": {"name": "telework-impact", "version": version},
        "command": command,
        "config_fingerprint": config.fingerprint,
        "inputs": dict(inputs),
    }


def input_summary(
    diary_path: str | Path,
    parsed_count: int,
    kept_count: int,
    rejected: Sequence[RejectedDay],
) -> dict:
    by_reason: dict[str, int] = {}
    for item in rejected:
        by_reason[item.reason.value] = by_reason.get(item.reason.value, 0) + 1
    return {
        "diaries": str(diary_path),
        "rows_parsed": parsed_count,
        "kept": kept_count,
        "rejected": len(rejected),
        "rejected_by_reason": by_reason,
    }


def profiles_section(profiles: Mapping[DayType, DayTypeProfile]) -> dict:
    return profiles_to_dict(profiles)


def write_run_info(out_dir: str | Path) -> Path:
    """Sidecar with wall-clock metadata, excluded from determinism checks."""
    payload = {
        "generated_at": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    }
    return write_json(Path(out_dir) / RUN_INFO_FILENAME, payload)
