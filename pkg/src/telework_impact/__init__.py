"""Energy accounting for co-working days versus employer-office and
home-office days: diary validation, day-type profiles, per-coworker-day
energy allocation, and break-even scenario analysis."""

from .aggregation import (
    DayTypeProfile,
    aggregate_profiles,
    day_counts,
    mode_shares,
    profile_deltas,
    profiles_from_dict,
    profiles_to_dict,
)
from .config import AppConfig, config_fingerprint, load_config
from .diary import (
    DIARY_HEADER,
    QualityRules,
    RejectedDay,
    RejectReason,
    apply_quality_filter,
    classify_day,
    parse_diary_file,
    parse_diary_path,
)
from .energy import (
    DirectComponents,
    compare_day_types,
    direct_components,
    equipment_energy,
    facility_energy,
    travel_energy,
)
from .errors import (
    ConfigError,
    DiaryFormatError,
    DivisionDomainError,
    InvalidOverrideError,
    MissingFactorError,
    MissingProfileError,
    NegativeFactorError,
    NonFiniteError,
    NoRootError,
    SweepPointError,
    TeleworkImpactError,
    UnknownCategoryError,
)
from .model import (
    COMPARABLE_DAY_TYPES,
    Activity,
    DayType,
    DiaryDay,
    EnergyDelta,
    FactorTable,
    SiteInventory,
    TransportMode,
    validate_factor_table,
)
from .scenario import (
    Scenario,
    ScenarioDelta,
    SweepResult,
    apply_scenario,
    bisect_root,
    break_even,
    evaluate_scenario,
    load_scenario,
    sweep,
    weekly_net_mj,
)
from .taxonomy import (
    EffectClassification,
    EffectLayer,
    SignTendency,
    classify_effect,
    registered_categories,
)

__version__ = "0.1.0"

__all__ = [
    "Activity",
    "AppConfig",
    "COMPARABLE_DAY_TYPES",
    "ConfigError",
    "DayType",
    "DayTypeProfile",
    "DiaryDay",
    "DIARY_HEADER",
    "DiaryFormatError",
    "DirectComponents",
    "DivisionDomainError",
    "EffectClassification",
    "EffectLayer",
    "EnergyDelta",
    "FactorTable",
    "InvalidOverrideError",
    "MissingFactorError",
    "MissingProfileError",
    "NegativeFactorError",
    "NonFiniteError",
    "NoRootError",
    "QualityRules",
    "RejectReason",
    "RejectedDay",
    "Scenario",
    "ScenarioDelta",
    "SignTendency",
    "SiteInventory",
    "SweepPointError",
    "SweepResult",
    "TeleworkImpactError",
    "TransportMode",
    "UnknownCategoryError",
    "aggregate_profiles",
    "apply_quality_filter",
    "apply_scenario",
    "bisect_root",
    "break_even",
    "classify_day",
    "classify_effect",
    "compare_day_types",
    "config_fingerprint",
    "day_counts",
    "direct_components",
    "equipment_energy",
    "evaluate_scenario",
    "facility_energy",
    "load_config",
    "load_scenario",
    "mode_shares",
    "parse_diary_file",
    "parse_diary_path",
    "profile_deltas",
    "profiles_from_dict",
    "profiles_to_dict",
    "registered_categories",
    "sweep",
    "travel_energy",
    "validate_factor_table",
    "weekly_net_mj",
    "__version__",
]
