#include "lcoe/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace lcoe {

std::string_view to_string(ValidationCode code) {
    switch (code) {
        case ValidationCode::non_finite_value: return "non_finite_value";
        case ValidationCode::negative_cost: return "negative_cost";
        case ValidationCode::invalid_discount_rate: return "invalid_discount_rate";
        case ValidationCode::invalid_lifetime: return "invalid_lifetime";
        case ValidationCode::energy_length_mismatch: return "energy_length_mismatch";
        case ValidationCode::negative_energy_entry: return "negative_energy_entry";
        case ValidationCode::zero_total_energy: return "zero_total_energy";
        case ValidationCode::nonpositive_rated_power: return "nonpositive_rated_power";
        case ValidationCode::nonpositive_rated_energy: return "nonpositive_rated_energy";
        case ValidationCode::efficiency_out_of_range: return "efficiency_out_of_range";
        case ValidationCode::charging_hours_out_of_range: return "charging_hours_out_of_range";
        case ValidationCode::invalid_days_per_year: return "invalid_days_per_year";
        case ValidationCode::price_length_mismatch: return "price_length_mismatch";
        case ValidationCode::negative_price: return "negative_price";
        case ValidationCode::schedule_length_mismatch: return "schedule_length_mismatch";
        case ValidationCode::negative_charge: return "negative_charge";
        case ValidationCode::negative_discharge: return "negative_discharge";
        case ValidationCode::charge_exceeds_rated_energy: return "charge_exceeds_rated_energy";
        case ValidationCode::discharge_exceeds_efficiency_bound:
            return "discharge_exceeds_efficiency_bound";
        case ValidationCode::zero_total_discharge: return "zero_total_discharge";
        case ValidationCode::zero_discounted_energy: return "zero_discounted_energy";
        case ValidationCode::assumption_i_violation: return "assumption_i_violation";
        case ValidationCode::invalid_sweep_range: return "invalid_sweep_range";
        case ValidationCode::invalid_sweep_steps: return "invalid_sweep_steps";
        case ValidationCode::sweep_point_invalid: return "sweep_point_invalid";
        case ValidationCode::range_min_exceeds_max: return "range_min_exceeds_max";
        case ValidationCode::negative_value: return "negative_value";
        case ValidationCode::scenario_shape_invalid: return "scenario_shape_invalid";
    }
    return "unknown";
}

ValidationError::ValidationError(ValidationCode code, std::string field,
                                 const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      field_(std::move(field)) {}

namespace {

[[noreturn]] void fail(ValidationCode code, const std::string& field, const std::string& message) {
    throw ValidationError(code, field, message);
}

void require_finite(double value, const std::string& field) {
    if (!std::isfinite(value)) {
        fail(ValidationCode::non_finite_value, field, field + " must be finite");
    }
}

void require_finite_nonneg_cost(double value, const std::string& field) {
    require_finite(value, field);
    if (value < 0.0) {
        fail(ValidationCode::negative_cost, field,
             field + " must be >= 0, got " + format_full(value));
    }
}

}  // namespace

const GenerationAsset& validate(const GenerationAsset& asset) {
    require_finite_nonneg_cost(asset.investment_cost, "investment_cost");
    require_finite_nonneg_cost(asset.fixed_om_per_year, "fixed_om_per_year");
    require_finite_nonneg_cost(asset.variable_om_per_mwh, "variable_om_per_mwh");
    require_finite_nonneg_cost(asset.fuel_cost_per_mwh, "fuel_cost_per_mwh");
    require_finite(asset.discount_rate, "discount_rate");
    if (asset.discount_rate < 0.0) {
        fail(ValidationCode::invalid_discount_rate, "discount_rate",
             "discount_rate must be >= 0, got " + format_full(asset.discount_rate));
    }
    if (asset.lifetime_years < 1) {
        fail(ValidationCode::invalid_lifetime, "lifetime_years",
             "lifetime_years must be >= 1, got " + std::to_string(asset.lifetime_years));
    }
    if (asset.annual_energy.size() != static_cast<std::size_t>(asset.lifetime_years)) {
        fail(ValidationCode::energy_length_mismatch, "annual_energy",
             "annual_energy has " + std::to_string(asset.annual_energy.size()) +
                 " entries but lifetime_years is " + std::to_string(asset.lifetime_years));
    }
    bool any_positive = false;
    for (std::size_t i = 0; i < asset.annual_energy.size(); ++i) {
        const double e = asset.annual_energy[i];
        require_finite(e, "annual_energy[" + std::to_string(i + 1) + "]");
        if (e < 0.0) {
            fail(ValidationCode::negative_energy_entry, "annual_energy",
                 "annual_energy entry for year " + std::to_string(i + 1) + " is negative: " +
                     format_full(e));
        }
        if (e > 0.0) any_positive = true;
    }
    if (!any_positive) {
        fail(ValidationCode::zero_total_energy, "annual_energy",
             "annual_energy must contain at least one positive entry");
    }
    return asset;
}

const StorageAsset& validate(const StorageAsset& asset) {
    require_finite_nonneg_cost(asset.annualized_power_cost, "annualized_power_cost");
    require_finite_nonneg_cost(asset.annualized_energy_cost, "annualized_energy_cost");
    require_finite(asset.rated_power, "rated_power");
    if (asset.rated_power <= 0.0) {
        fail(ValidationCode::nonpositive_rated_power, "rated_power",
             "rated_power must be > 0, got " + format_full(asset.rated_power));
    }
    require_finite(asset.rated_energy, "rated_energy");
    if (asset.rated_energy <= 0.0) {
        fail(ValidationCode::nonpositive_rated_energy, "rated_energy",
             "rated_energy must be > 0, got " + format_full(asset.rated_energy));
    }
    require_finite(asset.roundtrip_efficiency, "roundtrip_efficiency");
    if (asset.roundtrip_efficiency <= 0.0 || asset.roundtrip_efficiency > 1.0) {
        fail(ValidationCode::efficiency_out_of_range, "roundtrip_efficiency",
             "roundtrip_efficiency must be in (0, 1], got " +
                 format_full(asset.roundtrip_efficiency));
    }
    require_finite(asset.charging_hours, "charging_hours");
    if (asset.charging_hours <= 0.0 || asset.charging_hours > 24.0) {
        fail(ValidationCode::charging_hours_out_of_range, "charging_hours",
             "charging_hours must be in (0, 24], got " + format_full(asset.charging_hours));
    }
    return asset;
}

const PriceSeries& validate(const PriceSeries& prices) {
    if (prices.days_per_year < 1) {
        fail(ValidationCode::invalid_days_per_year, "days_per_year",
             "days_per_year must be >= 1, got " + std::to_string(prices.days_per_year));
    }
    if (prices.daily_price.size() != static_cast<std::size_t>(prices.days_per_year)) {
        fail(ValidationCode::price_length_mismatch, "daily_price",
             "daily_price has " + std::to_string(prices.daily_price.size()) +
                 " entries but days_per_year is " + std::to_string(prices.days_per_year));
    }
    for (std::size_t i = 0; i < prices.daily_price.size(); ++i) {
        const double p = prices.daily_price[i];
        require_finite(p, "daily_price[" + std::to_string(i + 1) + "]");
        if (p < 0.0) {
            fail(ValidationCode::negative_price, "daily_price",
                 "daily_price for day " + std::to_string(i + 1) + " is negative: " +
                     format_full(p));
        }
    }
    return prices;
}

const DispatchSchedule& validate(const DispatchSchedule& schedule, const StorageAsset& asset,
                                 std::size_t expected_days) {
    validate(asset);
    if (schedule.daily_charge.size() != expected_days ||
        schedule.daily_discharge.size() != expected_days) {
        fail(ValidationCode::schedule_length_mismatch, "daily_charge",
             "schedule has " + std::to_string(schedule.daily_charge.size()) + " charge and " +
                 std::to_string(schedule.daily_discharge.size()) +
                 " discharge entries, expected " + std::to_string(expected_days));
    }
    double total_discharge = 0.0;
    for (std::size_t i = 0; i < expected_days; ++i) {
        const std::string day = std::to_string(i + 1);
        const double charge = schedule.daily_charge[i];
        const double discharge = schedule.daily_discharge[i];
        require_finite(charge, "daily_charge[" + day + "]");
        require_finite(discharge, "daily_discharge[" + day + "]");
        if (charge < 0.0) {
            fail(ValidationCode::negative_charge, "daily_charge",
                 "daily_charge for day " + day + " is negative: " + format_full(charge));
        }
        if (discharge < 0.0) {
            fail(ValidationCode::negative_discharge, "daily_discharge",
                 "daily_discharge for day " + day + " is negative: " + format_full(discharge));
        }
        if (charge > asset.rated_energy * (1.0 + kLinkTolerance)) {
            fail(ValidationCode::charge_exceeds_rated_energy, "daily_charge",
                 "daily_charge for day " + day + " (" + format_full(charge) +
                     ") exceeds rated_energy (" + format_full(asset.rated_energy) + ")");
        }
        const double bound = asset.roundtrip_efficiency * charge;
        if (discharge > bound * (1.0 + kLinkTolerance)) {
            fail(ValidationCode::discharge_exceeds_efficiency_bound, "daily_discharge",
                 "daily_discharge for day " + day + " (" + format_full(discharge) +
                     ") exceeds roundtrip_efficiency * daily_charge (" + format_full(bound) +
                     ")");
        }
        total_discharge += discharge;
    }
    if (!(total_discharge > 0.0)) {
        fail(ValidationCode::zero_total_discharge, "daily_discharge",
             "total discharge over the year must be > 0");
    }
    return schedule;
}

const LcoeResult& validate(const LcoeResult& result) {
    require_finite(result.lcoe_usd_per_mwh, "lcoe_usd_per_mwh");
    require_finite(result.capital_cost_usd, "capital_cost_usd");
    require_finite(result.operating_cost_usd, "operating_cost_usd");
    require_finite(result.total_energy_mwh, "total_energy_mwh");
    if (!(result.total_energy_mwh > 0.0)) {
        fail(ValidationCode::zero_total_energy, "total_energy_mwh",
             "total_energy_mwh must be > 0, got " + format_full(result.total_energy_mwh));
    }
    const double recomputed =
        (result.capital_cost_usd + result.operating_cost_usd) / result.total_energy_mwh;
    const double scale = std::max(std::abs(result.lcoe_usd_per_mwh), std::abs(recomputed));
    if (std::abs(result.lcoe_usd_per_mwh - recomputed) > 1e-9 * std::max(scale, 1.0)) {
        fail(ValidationCode::non_finite_value, "lcoe_usd_per_mwh",
             "lcoe_usd_per_mwh is inconsistent with its cost breakdown");
    }
    return result;
}

const SweepTable& validate(const SweepTable& table) {
    if (table.points.size() < 2) {
        fail(ValidationCode::invalid_sweep_steps, "points",
             "sweep table needs >= 2 points, got " + std::to_string(table.points.size()));
    }
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        require_finite(table.points[i].parameter_value, "parameter_value");
        require_finite(table.points[i].lcoe_usd_per_mwh, "lcoe_usd_per_mwh");
        if (i > 0 && !(table.points[i].parameter_value > table.points[i - 1].parameter_value)) {
            fail(ValidationCode::invalid_sweep_range, "parameter_value",
                 "parameter_value must be strictly increasing at point " + std::to_string(i + 1));
        }
    }
    return table;
}

const TechnologyRange& validate(const TechnologyRange& range) {
    require_finite(range.min_lcoe, "min_lcoe");
    require_finite(range.avg_lcoe, "avg_lcoe");
    require_finite(range.max_lcoe, "max_lcoe");
    if (!(range.min_lcoe <= range.avg_lcoe && range.avg_lcoe <= range.max_lcoe)) {
        fail(ValidationCode::range_min_exceeds_max, "min_lcoe",
             "technology range must satisfy min <= avg <= max");
    }
    return range;
}

double parse_decimal(std::string_view text, const std::string& context) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) {
        throw ParseError(context + ": expected a number, got empty value");
    }
    text = text.substr(begin, end - begin + 1);
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(context + ": not a valid number: '" + std::string(text) + "'");
    }
    return value;
}

long parse_integer(std::string_view text, const std::string& context) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) {
        throw ParseError(context + ": expected an integer, got empty value");
    }
    text = text.substr(begin, end - begin + 1);
    long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(context + ": not a valid integer: '" + std::string(text) + "'");
    }
    return value;
}

std::string format_full(double value) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec;
    return std::string(buffer, ptr);
}

std::string format_money(double usd) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", usd);
    return buffer;
}

std::string format_sig6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

}  // namespace lcoe
