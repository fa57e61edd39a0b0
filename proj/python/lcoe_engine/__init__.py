"""Levelized cost of energy calculations for generation and storage assets.

Thin wrapper around the compiled ``_lcoe`` extension. The main entry points
are ``lcoe_generation``, ``lcoe_storage``, ``canonical_schedule``,
``lcoe_storage_simplified``, ``grid_parity``, ``sweep``,
``technology_range``, and ``load_scenario``.
"""

from ._lcoe import (  # noqa: F401
    DispatchSchedule,
    GenerationAsset,
    LcoeResult,
    ParameterRange,
    ParityVerdict,
    ParseError,
    PriceSeries,
    Scenario,
    StorageAsset,
    SweepParameter,
    SweepPoint,
    SweepSpec,
    SweepTable,
    TechnologyRange,
    TechnologySpec,
    ValidationError,
    canonical_schedule,
    grid_parity,
    lcoe_generation,
    lcoe_storage,
    lcoe_storage_simplified,
    load_scenario,
    ranges_to_csv,
    ranges_to_json,
    result_to_csv,
    result_to_json,
    sweep,
    sweep_to_csv,
    sweep_to_json,
    sweep_to_plot_data,
    technology_range,
    validate_generation,
    validate_prices,
    validate_schedule,
    validate_storage,
)

__all__ = [
    "DispatchSchedule",
    "GenerationAsset",
    "LcoeResult",
    "ParameterRange",
    "ParityVerdict",
    "ParseError",
    "PriceSeries",
    "Scenario",
    "StorageAsset",
    "SweepParameter",
    "SweepPoint",
    "SweepSpec",
    "SweepTable",
    "TechnologyRange",
    "TechnologySpec",
    "ValidationError",
    "canonical_schedule",
    "grid_parity",
    "lcoe_generation",
    "lcoe_storage",
    "lcoe_storage_simplified",
    "load_scenario",
    "ranges_to_csv",
    "ranges_to_json",
    "result_to_csv",
    "result_to_json",
    "sweep",
    "sweep_to_csv",
    "sweep_to_json",
    "sweep_to_plot_data",
    "technology_range",
    "validate_generation",
    "validate_prices",
    "validate_schedule",
    "validate_storage",
]
