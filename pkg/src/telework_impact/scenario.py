"""What-if analysis: overrides, floor-space credits, sweeps, break-even.

A scenario can override inventory fields, replace the modal profile of a day
type, and claim an explicit floor-space credit (net reduction of heated
space elsewhere, valued at a user-supplied intensity and allocated like the
facility component). The credit is reported as its own component so the
three-way facility/equipment/travel split stays comparable; the scenario net
subtracts it.

Sweeps evaluate one parameter over a list of values; break-even bisects the
scenario net over a bracket. Integer-valued inventory parameters are relaxed
to reals for sweeping and root finding (round up for planning).
"""

from __future__ import annotations

import dataclasses
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Mapping, Sequence

from .aggregation import DayTypeProfile
from .energy import (
    annual_facility_energy,
    equipment_energy,
    per_coworker_day,
    travel_energy,
)
from .errors import (
    ConfigError,
    InvalidOverrideError,
    MissingProfileError,
    NonFiniteError,
    NoRootError,
    SweepPointError,
    TeleworkImpactError,
)
from .model import DayType, EnergyDelta, FactorTable, SiteInventory, TransportMode

#: Parameters supported by sweep() and break_even().
SWEEP_PARAMETERS = (
    "coworker_count",
    "workdays_per_year",
    "floor_area_m2",
    "floor_space_credit_m2",
    "cw_days_per_week",
)

_INVENTORY_FIELDS = tuple(f.name for f in dataclasses.fields(SiteInventory))

MAX_CW_DAYS_PER_WEEK = 5.0


@dataclass(frozen=True)
class Scenario:
    """One what-if configuration; the default instance changes nothing."""

    name: str = "baseline"
    overrides: Mapping[str, object] = field(default_factory=dict)
    modal_override: Mapping[DayType, Mapping[TransportMode, float]] | None = None
    floor_space_credit_m2: float = 0.0
    credit_intensity_mj_per_m2_year: float = 0.0
    cw_days_per_week: float | None = None

    def __post_init__(self):
        unknown = set(self.overrides) - set(_INVENTORY_FIELDS)
        if unknown:
            raise InvalidOverrideError(
                f"unknown inventory fields in overrides: {sorted(unknown)}"
            )
        if self.floor_space_credit_m2 < 0:
            raise InvalidOverrideError("floor_space_credit_m2 must be >= 0")
        if self.credit_intensity_mj_per_m2_year < 0:
            raise InvalidOverrideError("credit_intensity_mj_per_m2_year must be >= 0")
        if self.cw_days_per_week is not None and not (
            0.0 < self.cw_days_per_week <= MAX_CW_DAYS_PER_WEEK
        ):
            raise InvalidOverrideError(
                f"cw_days_per_week must be in (0, {MAX_CW_DAYS_PER_WEEK:g}], "
                f"got {self.cw_days_per_week}"
            )
        if self.modal_override is not None:
            normalized = {
                DayType(day_type): {
                    TransportMode(mode): float(minutes)
                    for mode, minutes in profile.items()
                }
                for day_type, profile in self.modal_override.items()
            }
            for day_type, profile in normalized.items():
                for mode, minutes in profile.items():
                    if minutes < 0:
                        raise InvalidOverrideError(
                            f"modal_override[{day_type.value}][{mode.value}] is negative"
                        )
            object.__setattr__(self, "modal_override", normalized)


@dataclass(frozen=True)
class ScenarioDelta:
    """Energy delta of a scenario point: the comparable three-way split plus
    the separately-labeled floor-space credit. ``net_mj`` subtracts the
    credit from facility + equipment + travel."""

    baseline: DayType
    facility_mj: float
    equipment_mj: float
    travel_mj: float
    credit_mj: float
    net_mj: float = field(init=False)

    def __post_init__(self):
        if self.facility_mj < 0 or self.equipment_mj < 0 or self.credit_mj < 0:
            raise ValueError("facility, equipment and credit components must be >= 0")
        object.__setattr__(
            self,
            "net_mj",
            self.facility_mj + self.equipment_mj + self.travel_mj - self.credit_mj,
        )

    def as_energy_delta(self) -> EnergyDelta:
        """The credit-free triple, for comparison against plain day-type deltas."""
        return EnergyDelta(
            baseline=self.baseline,
            facility_mj=self.facility_mj,
            equipment_mj=self.equipment_mj,
            travel_mj=self.travel_mj,
        )


@dataclass(frozen=True)
class SweepResult:
    """Deltas of one parameter sweep, ordered by parameter value."""

    parameter: str
    points: tuple[tuple[float, ScenarioDelta], ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("sweep produced no points")
        values = [value for value, _ in self.points]
        if values != sorted(values):
            raise ValueError("sweep points must be ordered by parameter value")


def load_scenario(path: str | Path) -> Scenario:
    """Read a scenario JSON document; unknown keys are rejected."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read scenario file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"scenario file {path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ConfigError(f"scenario file {path} must contain a JSON object")
    known = {
        "name",
        "overrides",
        "modal_override",
        "floor_space_credit_m2",
        "credit_intensity_mj_per_m2_year",
        "cw_days_per_week",
    }
    unknown = set(payload) - known
    if unknown:
        raise ConfigError(f"unknown scenario keys in {path}: {sorted(unknown)}")
    try:
        return Scenario(
            name=str(payload.get("name", path.stem)),
            overrides=payload.get("overrides", {}),
            modal_override=payload.get("modal_override"),
            floor_space_credit_m2=float(payload.get("floor_space_credit_m2", 0.0)),
            credit_intensity_mj_per_m2_year=float(
                payload.get("credit_intensity_mj_per_m2_year", 0.0)
            ),
            cw_days_per_week=(
                float(payload["cw_days_per_week"])
                if payload.get("cw_days_per_week") is not None
                else None
            ),
        )
    except (TypeError, ValueError, KeyError) as exc:
        raise ConfigError(f"invalid scenario in {path}: {exc}") from exc


def apply_scenario(
    inventory: SiteInventory, factors: FactorTable, scenario: Scenario
) -> tuple[SiteInventory, FactorTable, float]:
    """Apply inventory overrides and compute the floor-space credit.

    Returns the effective inventory, the factor table (unchanged; scenarios
    do not alter coefficients) and the credit in MJ per coworker-day. The
    credit uses the overridden coworker count and workdays.
    """
    if scenario.overrides:
        try:
            inventory = dataclasses.replace(inventory, **dict(scenario.overrides))
        except (TypeError, ValueError) as exc:
            raise InvalidOverrideError(str(exc)) from exc
    credit_mj = per_coworker_day(
        scenario.floor_space_credit_m2 * scenario.credit_intensity_mj_per_m2_year,
        inventory.coworker_count,
        inventory.workdays_per_year,
    )
    return inventory, factors, credit_mj


def _override_profiles(
    profiles: Mapping[DayType, DayTypeProfile], scenario: Scenario
) -> Mapping[DayType, DayTypeProfile]:
    if not scenario.modal_override:
        return profiles
    out = dict(profiles)
    for day_type, minutes in scenario.modal_override.items():
        if day_type in out:
            out[day_type] = out[day_type].with_mode_minutes(minutes)
    return out


def _point_delta(
    inventory: SiteInventory,
    factors: FactorTable,
    profiles: Mapping[DayType, DayTypeProfile],
    scenario: Scenario,
    baseline: DayType,
    parameter: str | None = None,
    value: float | None = None,
) -> ScenarioDelta:
    """Evaluate one scenario point, optionally forcing one parameter to a
    real value (the relaxed space used by sweeps and root finding)."""
    inventory, factors, _ = apply_scenario(inventory, factors, scenario)

    area = inventory.floor_area_m2
    coworkers = float(inventory.coworker_count)
    workdays = float(inventory.workdays_per_year)
    credit_m2 = scenario.floor_space_credit_m2

    if parameter is not None:
        value = float(value)
        if parameter == "floor_area_m2":
            if value < 0:
                raise InvalidOverrideError(f"floor_area_m2 must be >= 0, got {value}")
            area = value
        elif parameter == "coworker_count":
            if value <= 0:
                raise InvalidOverrideError(f"coworker_count must be > 0, got {value}")
            coworkers = value
        elif parameter == "workdays_per_year":
            if value <= 0:
                raise InvalidOverrideError(f"workdays_per_year must be > 0, got {value}")
            workdays = value
        elif parameter == "floor_space_credit_m2":
            if value < 0:
                raise InvalidOverrideError(f"floor_space_credit_m2 must be >= 0, got {value}")
            credit_m2 = value
        elif parameter == "cw_days_per_week":
            if not 0.0 < value <= MAX_CW_DAYS_PER_WEEK:
                raise InvalidOverrideError(
                    f"cw_days_per_week must be in (0, {MAX_CW_DAYS_PER_WEEK:g}], got {value}"
                )
            # Affects the weekly aggregate only, never the per-day delta.
        else:
            raise InvalidOverrideError(
                f"unsupported parameter {parameter!r}; supported: {', '.join(SWEEP_PARAMETERS)}"
            )

    effective = _override_profiles(profiles, scenario)
    cw_profile = effective.get(DayType.COWORKING)
    baseline_profile = effective.get(baseline)
    if cw_profile is None or cw_profile.day_count == 0:
        raise MissingProfileError(DayType.COWORKING)
    if baseline_profile is None or baseline_profile.day_count == 0:
        raise MissingProfileError(baseline)

    facility = per_coworker_day(annual_facility_energy(area, factors), coworkers, workdays)
    equipment = equipment_energy(inventory, factors)
    travel = travel_energy(cw_profile.mean_mode_minutes, factors) - travel_energy(
        baseline_profile.mean_mode_minutes, factors
    )
    credit = per_coworker_day(
        credit_m2 * scenario.credit_intensity_mj_per_m2_year, coworkers, workdays
    )
    return ScenarioDelta(
        baseline=baseline,
        facility_mj=facility,
        equipment_mj=equipment,
        travel_mj=travel,
        credit_mj=credit,
    )


def evaluate_scenario(
    inventory: SiteInventory,
    factors: FactorTable,
    profiles: Mapping[DayType, DayTypeProfile],
    scenario: Scenario,
    baseline: DayType = DayType.EMPLOYER_OFFICE,
) -> ScenarioDelta:
    """Energy delta of one scenario against one baseline day type."""
    return _point_delta(inventory, factors, profiles, scenario, baseline)


def weekly_net_mj(delta: ScenarioDelta, cw_days_per_week: float) -> float:
    """Weekly aggregate: one co-working day avoids one commute, so the weekly
    net scales linearly with the number of co-working days."""
    return cw_days_per_week * delta.net_mj


def sweep(
    inventory: SiteInventory,
    factors: FactorTable,
    profiles: Mapping[DayType, DayTypeProfile],
    scenario: Scenario,
    parameter: str,
    values: Sequence[float],
    baseline: DayType = DayType.EMPLOYER_OFFICE,
    max_workers: int | None = None,
) -> SweepResult:
    """Evaluate one parameter over a list of values.

    Points are independent and evaluated in ascending parameter order; the
    result is identical whether computed serially or in parallel.
    """
    if parameter not in SWEEP_PARAMETERS:
        raise InvalidOverrideError(
            f"unsupported parameter {parameter!r}; supported: {', '.join(SWEEP_PARAMETERS)}"
        )
    if not values:
        raise InvalidOverrideError("sweep needs at least one value")
    ordered = sorted(float(v) for v in values)

    def evaluate(value: float) -> ScenarioDelta:
        try:
            return _point_delta(
                inventory, factors, profiles, scenario, baseline, parameter, value
            )
        except TeleworkImpactError as exc:
            raise SweepPointError(parameter, value, exc) from exc

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            deltas = list(pool.map(evaluate, ordered))
    else:
        deltas = [evaluate(value) for value in ordered]
    return SweepResult(parameter=parameter, points=tuple(zip(ordered, deltas)))


def bisect_root(
    f: Callable[[float], float], lo: float, hi: float, tolerance: float = 1e-6
) -> float:
    """Bisection on f over [lo, hi] until the bracket is narrower than
    ``tolerance``; returns the bracket midpoint.

    Raises :class:`NoRootError` when the endpoints have the same sign and
    :class:`NonFiniteError` when an evaluation fails or is not finite.
    Assumes f is monotone enough for bisection to be meaningful.
    """
    if not lo < hi:
        raise ValueError(f"bounds must satisfy lo < hi, got [{lo}, {hi}]")
    if not tolerance > 0:
        raise ValueError(f"tolerance must be > 0, got {tolerance}")

    def safe_eval(x: float) -> float:
        try:
            y = f(x)
        except TeleworkImpactError as exc:
            raise NonFiniteError(f"evaluation failed at {x}: {exc}") from exc
        if not math.isfinite(y):
            raise NonFiniteError(f"evaluation at {x} is not finite: {y}")
        return y

    f_lo = safe_eval(lo)
    f_hi = safe_eval(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise NoRootError(lo, hi, f_lo, f_hi)

    while hi - lo >= tolerance:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket at float resolution
        f_mid = safe_eval(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)


def break_even(
    inventory: SiteInventory,
    factors: FactorTable,
    profiles: Mapping[DayType, DayTypeProfile],
    scenario: Scenario,
    parameter: str,
    bounds: tuple[float, float],
    tolerance: float = 1e-6,
    baseline: DayType = DayType.EMPLOYER_OFFICE,
) -> float:
    """Parameter value at which the scenario net energy delta crosses zero."""
    if parameter not in SWEEP_PARAMETERS:
        raise InvalidOverrideError(
            f"unsupported parameter {parameter!r}; supported: {', '.join(SWEEP_PARAMETERS)}"
        )
    lo, hi = float(bounds[0]), float(bounds[1])

    def net(value: float) -> float:
        return _point_delta(
            inventory, factors, profiles, scenario, baseline, parameter, value
        ).net_mj

    return bisect_root(net, lo, hi, tolerance)
