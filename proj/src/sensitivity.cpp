#include "lcoe/sensitivity.hpp"

#include <cmath>

#include "lcoe/engine.hpp"

namespace lcoe {

std::string_view to_string(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::charging_hours: return "charging_hours";
        case SweepParameter::price: return "price";
        case SweepParameter::efficiency: return "efficiency";
        case SweepParameter::energy_to_power_cost_ratio: return "energy_to_power_cost_ratio";
    }
    return "unknown";
}

SweepParameter sweep_parameter_from_string(std::string_view name) {
    if (name == "charging_hours") return SweepParameter::charging_hours;
    if (name == "price") return SweepParameter::price;
    if (name == "efficiency") return SweepParameter::efficiency;
    if (name == "energy_to_power_cost_ratio") return SweepParameter::energy_to_power_cost_ratio;
    throw ParseError("unknown sweep parameter '" + std::string(name) +
                     "' (expected charging_hours, price, efficiency, or "
                     "energy_to_power_cost_ratio)");
}

namespace {

void check_bounds(const SweepSpec& spec) {
    const std::string name(to_string(spec.parameter));
    auto bad = [&](const std::string& what) {
        throw ValidationError(ValidationCode::invalid_sweep_range, name,
                              "sweep parameter " + name + " " + what);
    };
    switch (spec.parameter) {
        case SweepParameter::charging_hours:
            if (spec.start <= 0.0 || spec.stop > 24.0) bad("range must lie in (0, 24]");
            break;
        case SweepParameter::efficiency:
            if (spec.start <= 0.0 || spec.stop > 1.0) bad("range must lie in (0, 1]");
            break;
        case SweepParameter::price:
            if (spec.start < 0.0) bad("range must lie in [0, inf)");
            break;
        case SweepParameter::energy_to_power_cost_ratio:
            if (spec.start < 0.0) bad("range must lie in [0, inf)");
            break;
    }
}

// Applies one sweep point to a copy of the base inputs.
void apply_point(const SweepSpec& spec, double value, StorageAsset& asset, double& price) {
    switch (spec.parameter) {
        case SweepParameter::charging_hours:
            asset.charging_hours = value;
            asset.rated_energy = asset.rated_power * value;  // keep the power/energy link
            break;
        case SweepParameter::price:
            price = value;
            break;
        case SweepParameter::efficiency:
            asset.roundtrip_efficiency = value;
            break;
        case SweepParameter::energy_to_power_cost_ratio:
            asset.annualized_energy_cost = value * asset.annualized_power_cost;
            break;
    }
}

StorageAsset asset_at(double power_cost, double energy_cost, double efficiency,
                      double charging_hours) {
    StorageAsset asset;
    asset.annualized_power_cost = power_cost;
    asset.annualized_energy_cost = energy_cost;
    asset.roundtrip_efficiency = efficiency;
    asset.charging_hours = charging_hours;
    asset.rated_power = 1.0;  // LCOE is size-independent; ratings only need validity
    asset.rated_energy = asset.rated_power * charging_hours;
    return asset;
}

void check_range(const ParameterRange& range, const std::string& field) {
    if (!std::isfinite(range.min) || !std::isfinite(range.max)) {
        throw ValidationError(ValidationCode::non_finite_value, field,
                              field + " range must be finite");
    }
    if (range.min > range.max) {
        throw ValidationError(ValidationCode::range_min_exceeds_max, field,
                              field + " range has min " + format_full(range.min) +
                                  " > max " + format_full(range.max));
    }
}

}  // namespace

const SweepSpec& validate(const SweepSpec& spec) {
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop) || spec.start >= spec.stop) {
        throw ValidationError(ValidationCode::invalid_sweep_range,
                              std::string(to_string(spec.parameter)),
                              "sweep range must satisfy start < stop, got [" +
                                  format_full(spec.start) + ", " + format_full(spec.stop) + "]");
    }
    if (spec.steps < 2) {
        throw ValidationError(ValidationCode::invalid_sweep_steps, "steps",
                              "steps must be >= 2, got " + std::to_string(spec.steps));
    }
    check_bounds(spec);
    validate(spec.base_asset);
    if (!std::isfinite(spec.base_price) || spec.base_price < 0.0) {
        throw ValidationError(ValidationCode::negative_price, "base_price",
                              "base_price must be finite and >= 0, got " +
                                  format_full(spec.base_price));
    }
    if (spec.days < 1) {
        throw ValidationError(ValidationCode::invalid_days_per_year, "days",
                              "days must be >= 1, got " + std::to_string(spec.days));
    }
    return spec;
}

const TechnologySpec& validate(const TechnologySpec& spec) {
    check_range(spec.power_cost, "annualized_power_cost");
    check_range(spec.energy_cost, "annualized_energy_cost");
    check_range(spec.efficiency, "roundtrip_efficiency");
    check_range(spec.charging_hours, "charging_hours");
    if (!std::isfinite(spec.price) || spec.price < 0.0) {
        throw ValidationError(ValidationCode::negative_price, "price",
                              "price must be finite and >= 0, got " + format_full(spec.price));
    }
    if (spec.days < 1) {
        throw ValidationError(ValidationCode::invalid_days_per_year, "days",
                              "days must be >= 1, got " + std::to_string(spec.days));
    }
    // Every corner of the box must be a valid asset.
    for (double power_cost : {spec.power_cost.min, spec.power_cost.max}) {
        for (double energy_cost : {spec.energy_cost.min, spec.energy_cost.max}) {
            for (double efficiency : {spec.efficiency.min, spec.efficiency.max}) {
                for (double hours : {spec.charging_hours.min, spec.charging_hours.max}) {
                    validate(asset_at(power_cost, energy_cost, efficiency, hours));
                }
            }
        }
    }
    return spec;
}

SweepTable sweep(const SweepSpec& spec) {
    validate(spec);

    SweepTable table;
    table.parameter_name = to_string(spec.parameter);
    table.points.reserve(static_cast<std::size_t>(spec.steps));

    const double span = spec.stop - spec.start;
    for (int i = 0; i < spec.steps; ++i) {
        // Pin the last point to stop so rounding never pushes it out of bounds.
        const double value = (i == spec.steps - 1)
                                 ? spec.stop
                                 : spec.start + span * static_cast<double>(i) /
                                                     static_cast<double>(spec.steps - 1);
        StorageAsset asset = spec.base_asset;
        double price = spec.base_price;
        apply_point(spec, value, asset, price);
        try {
            const LcoeResult result = lcoe_storage_simplified(asset, price, spec.days);
            table.points.push_back({value, result.lcoe_usd_per_mwh});
        } catch (const ValidationError& error) {
            throw ValidationError(ValidationCode::sweep_point_invalid,
                                  std::string(to_string(spec.parameter)),
                                  "sweep point " + std::string(to_string(spec.parameter)) +
                                      " = " + format_full(value) + " is invalid: " +
                                      error.what());
        }
    }
    validate(table);
    return table;
}

TechnologyRange technology_range(const TechnologySpec& spec) {
    validate(spec);

    auto evaluate = [&](double power_cost, double energy_cost, double efficiency, double hours) {
        return lcoe_storage_simplified(asset_at(power_cost, energy_cost, efficiency, hours),
                                       spec.price, spec.days)
            .lcoe_usd_per_mwh;
    };

    // LCOE is increasing in both costs, decreasing in efficiency, and
    // non-increasing in charging hours, so the extrema sit at opposite corners.
    TechnologyRange range;
    range.technology_name = spec.name;
    range.min_lcoe = evaluate(spec.power_cost.min, spec.energy_cost.min, spec.efficiency.max,
                              spec.charging_hours.max);
    range.max_lcoe = evaluate(spec.power_cost.max, spec.energy_cost.max, spec.efficiency.min,
                              spec.charging_hours.min);
    range.avg_lcoe = evaluate((spec.power_cost.min + spec.power_cost.max) / 2.0,
                              (spec.energy_cost.min + spec.energy_cost.max) / 2.0,
                              (spec.efficiency.min + spec.efficiency.max) / 2.0,
                              (spec.charging_hours.min + spec.charging_hours.max) / 2.0);
    validate(range);
    return range;
}

}  // namespace lcoe
