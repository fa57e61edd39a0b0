#include "lcoe/engine.hpp"

#include <cmath>

namespace lcoe {

LcoeResult lcoe_generation(const GenerationAsset& asset) {
    validate(asset);

    const double per_mwh_cost = asset.fuel_cost_per_mwh + asset.variable_om_per_mwh;
    double discounted_cost = 0.0;
    double discounted_energy = 0.0;
    double factor = 1.0;  // 1/(1+d)^(t-1), t starting at 1
    for (int year = 0; year < asset.lifetime_years; ++year) {
        const double energy = asset.annual_energy[static_cast<std::size_t>(year)];
        discounted_cost += (asset.fixed_om_per_year + per_mwh_cost * energy) * factor;
        discounted_energy += energy * factor;
        factor /= 1.0 + asset.discount_rate;
    }
    if (!(discounted_energy > 0.0)) {
        throw ValidationError(ValidationCode::zero_discounted_energy, "annual_energy",
                              "discounted energy sums to zero; lcoe denominator is empty");
    }

    LcoeResult result;
    result.capital_cost_usd = asset.investment_cost;
    result.operating_cost_usd = discounted_cost;
    result.total_energy_mwh = discounted_energy;
    result.lcoe_usd_per_mwh = (asset.investment_cost + discounted_cost) / discounted_energy;
    return result;
}

LcoeResult lcoe_storage(const StorageAsset& asset, const PriceSeries& prices,
                        const DispatchSchedule& schedule) {
    validate(asset);
    validate(prices);
    validate(schedule, asset, prices.daily_price.size());

    double charging_cost = 0.0;
    double total_discharge = 0.0;
    for (std::size_t day = 0; day < prices.daily_price.size(); ++day) {
        charging_cost += prices.daily_price[day] * schedule.daily_charge[day];
        total_discharge += schedule.daily_discharge[day];
    }

    LcoeResult result;
    result.capital_cost_usd = asset.annualized_power_cost * asset.rated_power +
                              asset.annualized_energy_cost * asset.rated_energy;
    result.operating_cost_usd = charging_cost;
    result.total_energy_mwh = total_discharge;
    result.lcoe_usd_per_mwh =
        (result.capital_cost_usd + result.operating_cost_usd) / total_discharge;
    return result;
}

DispatchSchedule canonical_schedule(const StorageAsset& asset, int days) {
    validate(asset);
    if (days < 1) {
        throw ValidationError(ValidationCode::invalid_days_per_year, "days",
                              "days must be >= 1, got " + std::to_string(days));
    }
    const double linked_energy = asset.rated_power * asset.charging_hours;
    const double scale = std::max(std::abs(asset.rated_energy), std::abs(linked_energy));
    if (std::abs(asset.rated_energy - linked_energy) > kLinkTolerance * scale) {
        throw ValidationError(
            ValidationCode::assumption_i_violation, "rated_energy",
            "rated_energy (" + format_full(asset.rated_energy) +
                ") must equal rated_power * charging_hours (" + format_full(linked_energy) +
                ")");
    }

    DispatchSchedule schedule;
    schedule.daily_charge.assign(static_cast<std::size_t>(days), asset.rated_energy);
    schedule.daily_discharge.assign(static_cast<std::size_t>(days),
                                    asset.roundtrip_efficiency * asset.rated_energy);
    return schedule;
}

LcoeResult lcoe_storage_simplified(const StorageAsset& asset, double average_price, int days) {
    validate(asset);
    if (!std::isfinite(average_price) || average_price < 0.0) {
        throw ValidationError(ValidationCode::negative_price, "average_price",
                              "average_price must be finite and >= 0, got " +
                                  format_full(average_price));
    }
    if (days < 1) {
        throw ValidationError(ValidationCode::invalid_days_per_year, "days",
                              "days must be >= 1, got " + std::to_string(days));
    }

    const double hours = asset.charging_hours;
    const double year_hours = hours * static_cast<double>(days);

    LcoeResult result;
    result.capital_cost_usd = asset.annualized_power_cost + asset.annualized_energy_cost * hours;
    result.operating_cost_usd = average_price * year_hours;
    result.total_energy_mwh = asset.roundtrip_efficiency * year_hours;
    result.lcoe_usd_per_mwh =
        (result.capital_cost_usd + result.operating_cost_usd) / result.total_energy_mwh;
    return result;
}

ParityVerdict grid_parity(double lcoe, double utility_rate) {
    if (!std::isfinite(lcoe) || lcoe < 0.0) {
        throw ValidationError(ValidationCode::negative_value, "lcoe",
                              "lcoe must be finite and >= 0, got " + format_full(lcoe));
    }
    if (!std::isfinite(utility_rate) || utility_rate < 0.0) {
        throw ValidationError(ValidationCode::negative_value, "utility_rate",
                              "utility_rate must be finite and >= 0, got " +
                                  format_full(utility_rate));
    }
    ParityVerdict verdict;
    verdict.lcoe = lcoe;
    verdict.reference_rate = utility_rate;
    verdict.at_parity = lcoe <= utility_rate;
    verdict.margin = utility_rate - lcoe;
    return verdict;
}

}  // namespace lcoe
