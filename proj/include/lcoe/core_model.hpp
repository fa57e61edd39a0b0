#pragma once

// Domain types and validation for the LCOE engine. All currency values are
// USD doubles at full precision; rounding to cents happens only at
// presentation (see report.hpp). Every type is immutable-by-convention after
// validation and safe to share across threads.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcoe {

// One code per violated invariant so callers and tests can match on the
// exact failure instead of parsing messages.
enum class ValidationCode {
    non_finite_value,
    negative_cost,
    invalid_discount_rate,
    invalid_lifetime,
    energy_length_mismatch,
    negative_energy_entry,
    zero_total_energy,
    nonpositive_rated_power,
    nonpositive_rated_energy,
    efficiency_out_of_range,
    charging_hours_out_of_range,
    invalid_days_per_year,
    price_length_mismatch,
    negative_price,
    schedule_length_mismatch,
    negative_charge,
    negative_discharge,
    charge_exceeds_rated_energy,
    discharge_exceeds_efficiency_bound,
    zero_total_discharge,
    zero_discounted_energy,
    assumption_i_violation,
    invalid_sweep_range,
    invalid_sweep_steps,
    sweep_point_invalid,
    range_min_exceeds_max,
    negative_value,
    scenario_shape_invalid,
};

std::string_view to_string(ValidationCode code);

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationCode code, std::string field, const std::string& message);

    ValidationCode code() const { return code_; }
    const std::string& field() const { return field_; }

private:
    ValidationCode code_;
    std::string field_;
};

// Parse/format failures in the io layer; message carries file/line/key context.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

// Dispatchable generation unit (eq1-generation inputs).
struct GenerationAsset {
    double investment_cost = 0.0;             // total capital cost, USD
    double fixed_om_per_year = 0.0;           // USD per year
    double variable_om_per_mwh = 0.0;         // USD per MWh produced
    double fuel_cost_per_mwh = 0.0;           // USD per MWh produced
    std::vector<double> annual_energy;        // MWh produced per year, one entry per year
    int lifetime_years = 0;
    double discount_rate = 0.0;               // fraction, >= 0
};

// Storage system on an annualized one-year cost basis (eq2/eq3 inputs).
struct StorageAsset {
    double annualized_power_cost = 0.0;       // USD per MW per year
    double annualized_energy_cost = 0.0;      // USD per MWh per year
    double rated_power = 0.0;                 // MW
    double rated_energy = 0.0;                // MWh
    double roundtrip_efficiency = 0.0;        // fraction in (0, 1]
    double charging_hours = 0.0;              // hours per day in (0, 24]
};

// Grid price per day over one year of `days_per_year` days.
struct PriceSeries {
    std::vector<double> daily_price;          // USD per MWh, one entry per day
    int days_per_year = 365;
};

// Daily charged/discharged energies, aligned with a PriceSeries.
struct DispatchSchedule {
    std::vector<double> daily_charge;         // MWh
    std::vector<double> daily_discharge;      // MWh
};

struct LcoeResult {
    double lcoe_usd_per_mwh = 0.0;
    double capital_cost_usd = 0.0;            // numerator share from investment terms
    double operating_cost_usd = 0.0;          // numerator share from fuel/charging/O&M terms
    double total_energy_mwh = 0.0;            // denominator
};

struct SweepPoint {
    double parameter_value = 0.0;
    double lcoe_usd_per_mwh = 0.0;
};

struct SweepTable {
    std::string parameter_name;
    std::vector<SweepPoint> points;           // parameter_value strictly increasing, >= 2 points
};

struct TechnologyRange {
    std::string technology_name;
    double min_lcoe = 0.0;                    // USD per MWh
    double avg_lcoe = 0.0;
    double max_lcoe = 0.0;
};

// Relative slack admitted by consistency checks that compare decimal inputs
// against binary products (e.g. 10.8 vs 0.9*12).
inline constexpr double kLinkTolerance = 1e-9;

// Validation is total: any malformed value maps to a ValidationError with the
// matching code; accepted values are returned unchanged.
const GenerationAsset& validate(const GenerationAsset& asset);
const StorageAsset& validate(const StorageAsset& asset);
const PriceSeries& validate(const PriceSeries& prices);

// Schedule checks need the companion asset (charge/discharge bounds) and the
// companion series length.
const DispatchSchedule& validate(const DispatchSchedule& schedule, const StorageAsset& asset,
                                 std::size_t expected_days);

const LcoeResult& validate(const LcoeResult& result);
const SweepTable& validate(const SweepTable& table);
const TechnologyRange& validate(const TechnologyRange& range);

// Decimal-string number handling for the file layer: files carry decimal
// strings, converted exactly once at this boundary.
double parse_decimal(std::string_view text, const std::string& context);
long parse_integer(std::string_view text, const std::string& context);

// Shortest decimal string that parses back to the same double.
std::string format_full(double value);
// Presentation formats: money at cent precision, other numerics at 6
// significant digits.
std::string format_money(double usd);
std::string format_sig6(double value);

}  // namespace lcoe
