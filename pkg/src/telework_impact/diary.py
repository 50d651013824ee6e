"""Diary parsing, quality filtering, and work-location classification.

Diary files are UTF-8 CSV with exactly this header::

    participant_id,date,location,travel_min,work_min,chores_min,leisure_min,
    walk_min,bike_min,car_min,pt_min,other_mode_min

(one physical line; wrapped here for readability). Dates are ISO-8601,
minute fields are non-negative decimals, and the location vocabulary is
``office | coworking | home | other | multiple``. Unknown location strings
fall back to ``other_location`` with a logged warning.

Row-level problems never abort a parse; each bad row becomes a
:class:`RejectedDay` with reason ``PARSE_ERROR``. Only whole-file problems
(missing or wrong header) raise :class:`DiaryFormatError`.
"""

from __future__ import annotations

import csv
import datetime as _dt
import io
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO, Iterable

from .errors import DiaryFormatError
from .model import Activity, DayType, DiaryDay, TransportMode

logger = logging.getLogger(__name__)

DIARY_HEADER = (
    "participant_id",
    "date",
    "location",
    "travel_min",
    "work_min",
    "chores_min",
    "leisure_min",
    "walk_min",
    "bike_min",
    "car_min",
    "pt_min",
    "other_mode_min",
)

LOCATION_VOCABULARY = {
    "office": DayType.EMPLOYER_OFFICE,
    "coworking": DayType.COWORKING,
    "home": DayType.HOME,
    "other": DayType.OTHER_LOCATION,
    "multiple": DayType.MULTI_LOCATION,
}

_ACTIVITY_COLUMNS = (
    ("travel_min", Activity.TRAVEL),
    ("work_min", Activity.WORK),
    ("chores_min", Activity.EVERYDAY_CHORES),
    ("leisure_min", Activity.LEISURE),
)

_MODE_COLUMNS = (
    ("walk_min", TransportMode.WALK),
    ("bike_min", TransportMode.BIKE),
    ("car_min", TransportMode.CAR),
    ("pt_min", TransportMode.PUBLIC_TRANSPORT),
    ("other_mode_min", TransportMode.OTHER),
)


class RejectReason(str, Enum):
    """Why a day was excluded; listed in the order rules are checked."""

    WORK_TOO_SHORT = "WORK_TOO_SHORT"
    TOTAL_TOO_SHORT = "TOTAL_TOO_SHORT"
    MODE_MISMATCH = "MODE_MISMATCH"
    EXCLUDED_LOCATION = "EXCLUDED_LOCATION"
    PARSE_ERROR = "PARSE_ERROR"


@dataclass(frozen=True)
class QualityRules:
    """Thresholds for excluding low-quality entries and untypical workdays.

    Defaults: at least 4 h of work, at least 8 h recorded in total, and at
    most 100 min absolute difference between the travel activity and the sum
    of the per-mode times.
    """

    min_work_minutes: float = 240.0
    min_total_minutes: float = 480.0
    max_mode_mismatch_minutes: float = 100.0
    exclude_multi_location: bool = True

    def __post_init__(self):
        for name in ("min_work_minutes", "min_total_minutes", "max_mode_mismatch_minutes"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


@dataclass(frozen=True)
class RejectedDay:
    """A day excluded from analysis, with the first failing rule as primary
    reason and every failing rule in ``failures``."""

    reason: RejectReason
    day: DiaryDay | None = None
    row: int | None = None
    participant_id: str = ""
    date: str = ""
    detail: str = ""
    failures: tuple[RejectReason, ...] = ()


def classify_day(raw_location: str) -> DayType:
    """Map a raw location string to a :class:`DayType`.

    Total function: anything outside the documented vocabulary maps to
    ``other_location`` and logs a warning.
    """
    key = str(raw_location).strip()
    day_type = LOCATION_VOCABULARY.get(key)
    if day_type is None:
        logger.warning("unknown location %r, classifying as other_location", raw_location)
        return DayType.OTHER_LOCATION
    return day_type


def _parse_row(values: list[str], row_number: int) -> DiaryDay:
    if len(values) != len(DIARY_HEADER):
        raise ValueError(f"expected {len(DIARY_HEADER)} fields, got {len(values)}")
    record = dict(zip(DIARY_HEADER, values))
    date = _dt.date.fromisoformat(record["date"].strip())
    day_type = classify_day(record["location"])
    activity_minutes = {
        activity: float(record[column]) for column, activity in _ACTIVITY_COLUMNS
    }
    mode_minutes = {mode: float(record[column]) for column, mode in _MODE_COLUMNS}
    return DiaryDay(
        participant_id=record["participant_id"].strip(),
        date=date,
        day_type=day_type,
        activity_minutes=activity_minutes,
        mode_minutes=mode_minutes,
        source_row=row_number,
    )


def parse_diary_file(stream: IO) -> tuple[list[DiaryDay], list[RejectedDay]]:
    """Parse a diary CSV stream into days plus PARSE_ERROR rejections.

    Accepts a binary or text stream. Row order is preserved; blank lines are
    skipped.
    """
    if isinstance(stream, (io.RawIOBase, io.BufferedIOBase)) or "b" in getattr(
        stream, "mode", ""
    ):
        stream = io.TextIOWrapper(stream, encoding="utf-8", newline="")
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise DiaryFormatError("diary file is empty (missing header)") from None
    if tuple(h.strip() for h in header) != DIARY_HEADER:
        raise DiaryFormatError(
            "unexpected diary header; expected exactly: " + ",".join(DIARY_HEADER)
        )

    days: list[DiaryDay] = []
    rejected: list[RejectedDay] = []
    for values in reader:
        if not values:
            continue
        row_number = reader.line_num
        try:
            days.append(_parse_row(values, row_number))
        except (ValueError, TypeError) as exc:
            record = dict(zip(DIARY_HEADER, values))
            rejected.append(
                RejectedDay(
                    reason=RejectReason.PARSE_ERROR,
                    row=row_number,
                    participant_id=record.get("participant_id", "").strip(),
                    date=record.get("date", "").strip(),
                    detail=str(exc),
                    failures=(RejectReason.PARSE_ERROR,),
                )
            )
    return days, rejected


def parse_diary_path(path: str | Path) -> tuple[list[DiaryDay], list[RejectedDay]]:
    with open(path, "r", encoding="utf-8", newline="") as handle:
        return parse_diary_file(handle)


def _failing_rules(day: DiaryDay, rules: QualityRules) -> list[tuple[RejectReason, str]]:
    failures = []
    work = day.activity(Activity.WORK)
    if work < rules.min_work_minutes:
        failures.append(
            (RejectReason.WORK_TOO_SHORT, f"work {work:g} < {rules.min_work_minutes:g} min")
        )
    total = day.activity_total()
    if total < rules.min_total_minutes:
        failures.append(
            (RejectReason.TOTAL_TOO_SHORT, f"total {total:g} < {rules.min_total_minutes:g} min")
        )
    mismatch = abs(day.activity(Activity.TRAVEL) - day.mode_total())
    if mismatch > rules.max_mode_mismatch_minutes:
        failures.append(
            (
                RejectReason.MODE_MISMATCH,
                f"|travel - modes| = {mismatch:g} > {rules.max_mode_mismatch_minutes:g} min",
            )
        )
    if rules.exclude_multi_location and day.day_type in (
        DayType.OTHER_LOCATION,
        DayType.MULTI_LOCATION,
    ):
        failures.append(
            (RejectReason.EXCLUDED_LOCATION, f"day type {day.day_type.value} excluded")
        )
    return failures


def apply_quality_filter(
    days: Iterable[DiaryDay], rules: QualityRules | None = None
) -> tuple[list[DiaryDay], list[RejectedDay]]:
    """Partition days into (kept, rejected) according to the quality rules.

    The first failing rule (in :class:`RejectReason` order) is the primary
    reason; all failing rules are attached.
    """
    rules = rules or QualityRules()
    kept: list[DiaryDay] = []
    rejected: list[RejectedDay] = []
    for day in days:
        failures = _failing_rules(day, rules)
        if not failures:
            kept.append(day)
            continue
        primary_reason, primary_detail = failures[0]
        rejected.append(
            RejectedDay(
                reason=primary_reason,
                day=day,
                row=day.source_row,
                participant_id=day.participant_id,
                date=day.date.isoformat(),
                detail="; ".join(detail for _, detail in failures),
                failures=tuple(reason for reason, _ in failures),
            )
        )
    return kept, rejected
