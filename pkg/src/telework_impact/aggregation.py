"""Per-day-type statistics over quality-filtered diaries.

Produces, for each comparable day type (employer office, co-working, home),
the arithmetic mean minutes per activity and per transport mode, plus the
modal split as a share of mean travel-mode time. Shares are computed from
means of minutes (equivalently, totals), not as means of per-day shares, so
short-travel days are weighted by their actual travel time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import MissingProfileError
from .model import COMPARABLE_DAY_TYPES, Activity, DayType, DiaryDay, TransportMode

SHARE_SUM_TOLERANCE = 1e-9


def mode_shares(mode_minutes: Mapping[TransportMode, float]) -> dict[TransportMode, float]:
    """Share of each mode in the total; all zeros when the total is zero."""
    total = float(sum(mode_minutes.get(m, 0.0) for m in TransportMode))
    if total <= 0.0:
        return {m: 0.0 for m in TransportMode}
    return {m: mode_minutes.get(m, 0.0) / total for m in TransportMode}


@dataclass(frozen=True)
class DayTypeProfile:
    """Aggregated mean activity minutes and modal profile for one day type."""

    day_type: DayType
    day_count: int
    mean_activity_minutes: Mapping[Activity, float]
    mean_mode_minutes: Mapping[TransportMode, float]
    mode_share: Mapping[TransportMode, float]

    def __post_init__(self):
        for mapping in (self.mean_activity_minutes, self.mean_mode_minutes):
            for key, value in mapping.items():
                if value < 0:
                    raise ValueError(f"mean for {getattr(key, 'value', key)} is negative")
        share_sum = sum(self.mode_share.values())
        if share_sum and abs(share_sum - 1.0) > SHARE_SUM_TOLERANCE:
            raise ValueError(f"mode shares sum to {share_sum}, expected 1")

    def with_mode_minutes(self, mode_minutes: Mapping[TransportMode, float]) -> "DayTypeProfile":
        """Copy of this profile with a replaced modal profile (missing modes
        mean zero); shares are recomputed."""
        minutes = {m: float(mode_minutes.get(m, 0.0)) for m in TransportMode}
        return DayTypeProfile(
            day_type=self.day_type,
            day_count=self.day_count,
            mean_activity_minutes=dict(self.mean_activity_minutes),
            mean_mode_minutes=minutes,
            mode_share=mode_shares(minutes),
        )


def _empty_profile(day_type: DayType) -> DayTypeProfile:
    return DayTypeProfile(
        day_type=day_type,
        day_count=0,
        mean_activity_minutes={a: 0.0 for a in Activity},
        mean_mode_minutes={m: 0.0 for m in TransportMode},
        mode_share={m: 0.0 for m in TransportMode},
    )


def aggregate_profiles(days: Iterable[DiaryDay]) -> dict[DayType, DayTypeProfile]:
    """Mean activity and mode minutes per comparable day type.

    Input is expected to be quality-filtered already; days of other types are
    ignored. Day types without any days get a zero profile with day_count 0.
    """
    by_type: dict[DayType, list[DiaryDay]] = {t: [] for t in COMPARABLE_DAY_TYPES}
    for day in days:
        if day.day_type in by_type:
            by_type[day.day_type].append(day)

    profiles: dict[DayType, DayTypeProfile] = {}
    for day_type, bucket in by_type.items():
        if not bucket:
            profiles[day_type] = _empty_profile(day_type)
            continue
        mean_activity = {
            a: float(np.mean([d.activity(a) for d in bucket])) for a in Activity
        }
        mean_mode = {m: float(np.mean([d.mode(m) for d in bucket])) for m in TransportMode}
        profiles[day_type] = DayTypeProfile(
            day_type=day_type,
            day_count=len(bucket),
            mean_activity_minutes=mean_activity,
            mean_mode_minutes=mean_mode,
            mode_share=mode_shares(mean_mode),
        )
    return profiles


def profile_deltas(
    profiles: Mapping[DayType, DayTypeProfile],
    baselines: Iterable[DayType] = (DayType.EMPLOYER_OFFICE, DayType.HOME),
) -> dict[DayType, dict[Activity, float]]:
    """Per-activity minute change of a co-working day versus each baseline.

    Raises :class:`MissingProfileError` when the co-working profile or a
    requested baseline has no days.
    """
    coworking = profiles.get(DayType.COWORKING)
    if coworking is None or coworking.day_count == 0:
        raise MissingProfileError(DayType.COWORKING)
    deltas: dict[DayType, dict[Activity, float]] = {}
    for baseline in baselines:
        profile = profiles.get(baseline)
        if profile is None or profile.day_count == 0:
            raise MissingProfileError(baseline)
        deltas[baseline] = {
            a: coworking.mean_activity_minutes[a] - profile.mean_activity_minutes[a]
            for a in Activity
        }
    return deltas


def day_counts(days: Iterable[DiaryDay]) -> dict[DayType, int]:
    """Exact day counts by classified type, zero-filled for all types."""
    counts = {t: 0 for t in DayType}
    for day in days:
        counts[day.day_type] += 1
    return counts


def profiles_to_dict(profiles: Mapping[DayType, DayTypeProfile]) -> dict:
    """JSON-ready mirror of the profiles, keyed by day-type value."""
    return {
        day_type.value: {
            "day_count": profile.day_count,
            "mean_activity_minutes": {
                a.value: profile.mean_activity_minutes[a] for a in Activity
            },
            "mean_mode_minutes": {
                m.value: profile.mean_mode_minutes[m] for m in TransportMode
            },
            "mode_share": {m.value: profile.mode_share[m] for m in TransportMode},
        }
        for day_type, profile in profiles.items()
    }


def profiles_from_dict(payload: Mapping) -> dict[DayType, DayTypeProfile]:
    """Inverse of :func:`profiles_to_dict`; used when diaries are not
    re-processed and profiles are loaded from a previous run."""
    profiles: dict[DayType, DayTypeProfile] = {}
    for day_type_value, body in payload.items():
        day_type = DayType(day_type_value)
        mean_activity = {
            a: float(body["mean_activity_minutes"].get(a.value, 0.0)) for a in Activity
        }
        mean_mode = {
            m: float(body["mean_mode_minutes"].get(m.value, 0.0)) for m in TransportMode
        }
        share = body.get("mode_share")
        profiles[day_type] = DayTypeProfile(
            day_type=day_type,
            day_count=int(body["day_count"]),
            mean_activity_minutes=mean_activity,
            mean_mode_minutes=mean_mode,
            mode_share={m: float(share[m.value]) for m in TransportMode}
            if share
            else mode_shares(mean_mode),
        )
    for day_type in COMPARABLE_DAY_TYPES:
        profiles.setdefault(day_type, _empty_profile(day_type))
    return profiles
