#!/usr/bin/env python3
"""Scenario levers: occupancy, floor-space credits, and weekly frequency.

Sweeps the member count (facility energy is allocated per person, so it
falls with 1/N), then prices in an explicit floor-space credit, then shows
how the weekly aggregate scales with the number of co-working days.
"""

from telework_impact import (
    Scenario,
    aggregate_profiles,
    apply_quality_filter,
    evaluate_scenario,
    load_config,
    parse_diary_path,
    sweep,
    weekly_net_mj,
)
from telework_impact.calibration import shipped_config_path, shipped_diaries_path


def main():
    config = load_config(shipped_config_path())
    days, _ = parse_diary_path(shipped_diaries_path())
    kept, _ = apply_quality_filter(days, config.quality_rules)
    profiles = aggregate_profiles(kept)

    print("=" * 64)
    print("Occupancy sweep (net MJ per coworker-day vs office baseline)")
    print("=" * 64)
    result = sweep(
        config.inventory, config.factors, profiles, Scenario(),
        "coworker_count", [15, 30, 60, 90, 120, 240],
    )
    for value, delta in result.points:
        bar = "#" * max(0, int(round(delta.net_mj)))
        print(f"  {value:6.0f} members: facility {delta.facility_mj:7.2f}, net {delta.net_mj:+7.2f}  {bar}")

    print("\nfloor-space credit: 20 m2 of heated space saved elsewhere,")
    print("valued at the site's own intensity and allocated the same way")
    credit_scenario = Scenario(
        name="20 m2 credit",
        floor_space_credit_m2=20.0,
        credit_intensity_mj_per_m2_year=config.factors.facility_intensity_total(),
    )
    plain = evaluate_scenario(config.inventory, config.factors, profiles, Scenario())
    credited = evaluate_scenario(config.inventory, config.factors, profiles, credit_scenario)
    print(f"  without credit: net {plain.net_mj:+.2f} MJ")
    print(f"  with credit:    net {credited.net_mj:+.2f} MJ (credit {credited.credit_mj:.2f} MJ)")

    print("\nweekly aggregate: one co-working day avoids one commute")
    for cw_days in (1.0, 2.0, 3.0, 5.0):
        print(f"  {cw_days:.0f} day(s)/week: {weekly_net_mj(plain, cw_days):+8.2f} MJ/week")


if __name__ == "__main__":
    main()
