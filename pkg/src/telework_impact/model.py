"""Core domain types and units.

Conventions used everywhere in the package:

* time in diaries is **minutes**, energy is **MJ**,
* facility intensity is MJ/(m2*year), device energy is MJ/(device*day),
* mode speed is km/h, mode energy is MJ per person-km,
* all values are immutable after construction and safe to share across
  threads.

Missing entries in the minute maps of a :class:`DiaryDay` mean zero.
"""

from __future__ import annotations

import datetime as _dt
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .errors import MissingFactorError, NegativeFactorError

MINUTES_PER_DAY = 1440.0

#: Facility intensity components, all required in a factor table.
FACILITY_COMPONENTS = ("heating", "cooling", "lighting")

#: Named device kinds. Device kinds are open-ended strings; any other name
#: (coffee machine, projector, ...) is allowed as long as the factor table
#: carries a daily-energy value for it.
SCREEN = "screen"
DESKTOP_COMPUTER = "desktop_computer"
PRINTER = "printer"
TV = "tv"


class Activity(str, Enum):
    """The four recorded diary activities. Unrecorded time is simply absent."""

    TRAVEL = "travel"
    WORK = "work"
    EVERYDAY_CHORES = "everyday_chores"
    LEISURE = "leisure"


class TransportMode(str, Enum):
    """Closed set of transport modes; 'bike' includes e-bikes, 'other' covers
    anything else (boats, ...)."""

    WALK = "walk"
    BIKE = "bike"
    CAR = "car"
    PUBLIC_TRANSPORT = "public_transport"
    OTHER = "other"


class DayType(str, Enum):
    """Work location of a participant-day."""

    EMPLOYER_OFFICE = "employer_office"
    COWORKING = "coworking"
    HOME = "home"
    OTHER_LOCATION = "other_location"
    MULTI_LOCATION = "multi_location"


#: Day types that take part in aggregation and energy comparison.
COMPARABLE_DAY_TYPES = (DayType.EMPLOYER_OFFICE, DayType.COWORKING, DayType.HOME)


def _check_minutes(name: str, minutes: Mapping) -> dict:
    total = 0.0
    out = {}
    for key, value in minutes.items():
        value = float(value)
        if value < 0:
            raise ValueError(f"{name}[{getattr(key, 'value', key)}] is negative: {value}")
        total += value
        out[key] = value
    if total > MINUTES_PER_DAY:
        raise ValueError(f"{name} total {total} exceeds {MINUTES_PER_DAY} minutes")
    return out


@dataclass(frozen=True)
class DiaryDay:
    """One participant-day of a time-use diary.

    ``source_row`` is the physical line number in the source CSV (header is
    line 1); it is metadata only and excluded from equality.
    """

    participant_id: str
    date: _dt.date
    day_type: DayType
    activity_minutes: Mapping[Activity, float]
    mode_minutes: Mapping[TransportMode, float]
    source_row: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "activity_minutes", _check_minutes("activity_minutes", self.activity_minutes)
        )
        object.__setattr__(
            self, "mode_minutes", _check_minutes("mode_minutes", self.mode_minutes)
        )

    def activity(self, activity: Activity) -> float:
        return self.activity_minutes.get(activity, 0.0)

    def mode(self, mode: TransportMode) -> float:
        return self.mode_minutes.get(mode, 0.0)

    def activity_total(self) -> float:
        return sum(self.activity_minutes.values())

    def mode_total(self) -> float:
        return sum(self.mode_minutes.values())


@dataclass(frozen=True)
class SiteInventory:
    """Physical description of the co-working site used for allocation."""

    floor_area_m2: float
    workplace_count: int
    device_counts: Mapping[str, int]
    coworker_count: int
    workdays_per_year: int

    def __post_init__(self):
        if not self.floor_area_m2 > 0:
            raise ValueError(f"floor_area_m2 must be > 0, got {self.floor_area_m2}")
        if int(self.workplace_count) < 1:
            raise ValueError(f"workplace_count must be >= 1, got {self.workplace_count}")
        if int(self.coworker_count) < 1:
            raise ValueError(f"coworker_count must be >= 1, got {self.coworker_count}")
        if not 1 <= int(self.workdays_per_year) <= 366:
            raise ValueError(
                f"workdays_per_year must be in [1, 366], got {self.workdays_per_year}"
            )
        counts = {}
        for kind, count in self.device_counts.items():
            count = int(count)
            if count < 0:
                raise ValueError(f"device_counts[{kind}] is negative: {count}")
            counts[str(kind)] = count
        object.__setattr__(self, "floor_area_m2", float(self.floor_area_m2))
        object.__setattr__(self, "workplace_count", int(self.workplace_count))
        object.__setattr__(self, "coworker_count", int(self.coworker_count))
        object.__setattr__(self, "workdays_per_year", int(self.workdays_per_year))
        object.__setattr__(self, "device_counts", counts)


@dataclass(frozen=True)
class FactorTable:
    """All energy coefficients in one place.

    Construction is permissive; completeness and sign are established by
    :func:`validate_factor_table`, which every energy computation expects to
    have run.
    """

    facility_intensity: Mapping[str, float]
    device_daily_energy: Mapping[str, float]
    mode_speed: Mapping[TransportMode, float]
    mode_energy: Mapping[TransportMode, float]

    def __post_init__(self):
        object.__setattr__(
            self,
            "facility_intensity",
            {str(k): float(v) for k, v in self.facility_intensity.items()},
        )
        object.__setattr__(
            self,
            "device_daily_energy",
            {str(k): float(v) for k, v in self.device_daily_energy.items()},
        )
        object.__setattr__(
            self, "mode_speed", {TransportMode(k): float(v) for k, v in self.mode_speed.items()}
        )
        object.__setattr__(
            self, "mode_energy", {TransportMode(k): float(v) for k, v in self.mode_energy.items()}
        )

    def facility_intensity_total(self) -> float:
        """Summed heating + cooling + lighting intensity, MJ/(m2*year)."""
        return sum(self.facility_intensity.get(c, 0.0) for c in FACILITY_COMPONENTS)


def validate_factor_table(table: FactorTable, inventory: SiteInventory) -> FactorTable:
    """Check the factor table against the mode set and the site inventory.

    Returns the table unchanged when every transport mode has a speed and an
    energy factor, every device kind present in ``inventory.device_counts``
    has a daily-energy factor, and all three facility intensity components
    are present. Raises :class:`MissingFactorError` listing every missing
    key, or :class:`NegativeFactorError` for the first negative value.
    """
    missing = []
    for component in FACILITY_COMPONENTS:
        if component not in table.facility_intensity:
            missing.append(f"facility_intensity.{component}")
    for mode in TransportMode:
        if mode not in table.mode_speed:
            missing.append(f"mode_speed.{mode.value}")
        if mode not in table.mode_energy:
            missing.append(f"mode_energy.{mode.value}")
    for kind in inventory.device_counts:
        if kind not in table.device_daily_energy:
            missing.append(f"device_daily_energy.{kind}")
    if missing:
        raise MissingFactorError(missing)

    groups = (
        ("facility_intensity", table.facility_intensity),
        ("device_daily_energy", table.device_daily_energy),
        ("mode_speed", table.mode_speed),
        ("mode_energy", table.mode_energy),
    )
    for group_name, mapping in groups:
        for key, value in mapping.items():
            if value < 0:
                raise NegativeFactorError(f"{group_name}.{getattr(key, 'value', key)}", value)
    return table


@dataclass(frozen=True)
class EnergyDelta:
    """Component-wise MJ change of one co-working day versus a baseline day.

    ``net_mj`` is always the exact sum of the three components. Facility and
    equipment are direct contributions of the co-working site and therefore
    never negative; the travel component is signed.
    """

    baseline: DayType
    facility_mj: float
    equipment_mj: float
    travel_mj: float
    net_mj: float = field(init=False)

    def __post_init__(self):
        if self.facility_mj < 0:
            raise ValueError(f"facility_mj must be >= 0, got {self.facility_mj}")
        if self.equipment_mj < 0:
            raise ValueError(f"equipment_mj must be >= 0, got {self.equipment_mj}")
        object.__setattr__(
            self, "net_mj", self.facility_mj + self.equipment_mj + self.travel_mj
        )
