"""Three-layer classification of co-working energy effects.

The registry is data, not logic: each entry records on which layer an effect
sits, whether this package quantifies it, and the direction it tends to push
energy use. Technology-layer effects (building and running the required
infrastructure) only ever add burden; application and structural effects can
cut or raise it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import UnknownCategoryError


class EffectLayer(str, Enum):
    TECHNOLOGY = "technology"
    APPLICATION = "application"
    STRUCTURAL = "structural"


class SignTendency(str, Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    BOTH = "both"


@dataclass(frozen=True)
class EffectClassification:
    """One taxonomy entry: layer, category name, quantified flag, sign."""

    layer: EffectLayer
    category: str
    quantified: bool
    sign_tendency: SignTendency

    def __post_init__(self):
        if self.layer is EffectLayer.TECHNOLOGY and self.sign_tendency is not SignTendency.INCREASING:
            raise ValueError("technology-layer effects always increase burden")
        if self.quantified and self.category not in QUANTIFIED_CATEGORIES:
            raise ValueError(f"category {self.category!r} cannot be quantified")


#: Categories this package computes numbers for; everything else is carried
#: qualitatively only.
QUANTIFIED_CATEGORIES = frozenset(
    {"facility_operation", "equipment_use", "travel_substitution", "modal_shift"}
)

EFFECT_REGISTRY: tuple[EffectClassification, ...] = (
    # Technology layer: operating the co-working infrastructure.
    EffectClassification(EffectLayer.TECHNOLOGY, "facility_operation", True, SignTendency.INCREASING),
    EffectClassification(EffectLayer.TECHNOLOGY, "equipment_use", True, SignTendency.INCREASING),
    # Application layer: individuals adopting co-working.
    EffectClassification(EffectLayer.APPLICATION, "travel_substitution", True, SignTendency.BOTH),
    EffectClassification(EffectLayer.APPLICATION, "modal_shift", True, SignTendency.BOTH),
    EffectClassification(EffectLayer.APPLICATION, "induced_trips", False, SignTendency.INCREASING),
    EffectClassification(EffectLayer.APPLICATION, "income_rebound", False, SignTendency.INCREASING),
    EffectClassification(EffectLayer.APPLICATION, "time_use_rebound", False, SignTendency.INCREASING),
    EffectClassification(EffectLayer.APPLICATION, "office_space_change", False, SignTendency.BOTH),
    # Structural layer: society-scale transformation, qualitative only.
    EffectClassification(EffectLayer.STRUCTURAL, "land_use_change", False, SignTendency.BOTH),
    EffectClassification(EffectLayer.STRUCTURAL, "office_demand_change", False, SignTendency.DECREASING),
    EffectClassification(EffectLayer.STRUCTURAL, "economy_wide_rebound", False, SignTendency.INCREASING),
)

_BY_NAME = {entry.category: entry for entry in EFFECT_REGISTRY}


def registered_categories() -> tuple[str, ...]:
    """Category names, in registry order."""
    return tuple(entry.category for entry in EFFECT_REGISTRY)


def classify_effect(category_name: str) -> EffectClassification:
    """Look up a taxonomy entry by category name (case-insensitive)."""
    entry = _BY_NAME.get(str(category_name).strip().lower())
    if entry is None:
        raise UnknownCategoryError(
            f"unknown effect category {category_name!r}; "
            f"known: {', '.join(registered_categories())}"
        )
    return entry
