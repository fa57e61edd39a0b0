#pragma once

// One-dimensional sensitivity sweeps over the simplified storage LCOE and
// min/avg/max range comparison across technologies. Sweep points are evenly
// spaced and evaluated independently; tables come back in parameter order.

#include <string>

#include "lcoe/core_model.hpp"

namespace lcoe {

enum class SweepParameter {
    charging_hours,
    price,
    efficiency,
    energy_to_power_cost_ratio,
};

std::string_view to_string(SweepParameter parameter);
SweepParameter sweep_parameter_from_string(std::string_view name);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::price;
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;                 // >= 2, evenly spaced including endpoints
    StorageAsset base_asset;
    double base_price = 0.0;       // USD per MWh, used unless sweeping price
    int days = 365;
};

struct ParameterRange {
    double min = 0.0;
    double max = 0.0;
};

struct TechnologySpec {
    std::string name;
    ParameterRange power_cost;         // USD per MW per year
    ParameterRange energy_cost;        // USD per MWh per year
    ParameterRange efficiency;         // (0, 1]
    ParameterRange charging_hours;     // (0, 24]
    double price = 0.0;                // USD per MWh
    int days = 365;
};

const SweepSpec& validate(const SweepSpec& spec);
const TechnologySpec& validate(const TechnologySpec& spec);

// Evaluates lcoe_storage_simplified at `steps` evenly spaced parameter values,
// all other base parameters fixed. Sweeping charging_hours re-derives
// rated_energy = rated_power * charging_hours at each point; the cost-ratio
// sweep holds annualized_power_cost constant and sets
// annualized_energy_cost = ratio * annualized_power_cost.
SweepTable sweep(const SweepSpec& spec);

// min/max over the parameter box by corner enumeration (LCOE is increasing in
// both costs, decreasing in efficiency, and non-increasing in charging hours),
// avg at the midpoint of every range.
TechnologyRange technology_range(const TechnologySpec& spec);

}  // namespace lcoe
