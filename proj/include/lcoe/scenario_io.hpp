#pragma once

// Scenario loading and the two CSV data formats.
//
// Scenario files are `key = value` text with `[section]` headers and `#`
// comments. Recognized sections: [generation], [storage], [price], [schedule],
// [sweep], and repeatable [technology]. Keys are named exactly after the
// domain type fields; unknown sections or keys are parse errors. Price and
// schedule series live in separate CSV files referenced from the scenario
// (paths resolve relative to the scenario file).
//
//   price CSV    header `day,price_usd_per_mwh`, 1-based contiguous days
//   schedule CSV header `day,charge_mwh,discharge_mwh`, same day convention

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcoe/core_model.hpp"
#include "lcoe/sensitivity.hpp"

namespace lcoe {

enum class PriceSource { none, scalar, series };

struct SweepRequest {
    SweepParameter parameter = SweepParameter::price;
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;
};

// One fully validated scenario: exactly one asset, plus optional price,
// schedule, sweep, and technology blocks (storage only).
struct Scenario {
    std::optional<GenerationAsset> generation;
    std::optional<StorageAsset> storage;

    PriceSource price_source = PriceSource::none;
    double scalar_price = 0.0;            // set when price_source == scalar
    std::optional<PriceSeries> prices;    // expanded series (flat for scalar)
    std::string price_csv_ref;            // as written in the file, if any

    std::optional<DispatchSchedule> schedule;
    std::string schedule_csv_ref;

    std::optional<SweepRequest> sweep;
    std::vector<TechnologySpec> technologies;

    int days_per_year = 365;
};

// Loads and validates a scenario. `overrides` entries are `key=value` or
// `section.key=value`, applied after the file parse and before validation.
Scenario load_scenario(const std::filesystem::path& path,
                       const std::vector<std::string>& overrides = {});

// Same, from in-memory text. Relative file references resolve against
// `base_dir`; `source_name` labels parse errors.
Scenario parse_scenario(std::string_view text, const std::filesystem::path& base_dir,
                        const std::string& source_name = "<scenario>",
                        const std::vector<std::string>& overrides = {});

// Full-precision scenario text; parse_scenario(scenario_to_string(s)) restores
// every numeric field exactly. Series loaded from CSVs are written back as the
// original file reference.
std::string scenario_to_string(const Scenario& scenario);

// Mean of the scenario's price series; equals the scalar price for scalar
// sources. Errors if the scenario has no price.
double mean_price(const Scenario& scenario);

PriceSeries parse_price_csv(std::string_view text, int days_per_year,
                            const std::string& source_name = "<price csv>");
PriceSeries load_price_csv(const std::filesystem::path& path, int days_per_year);
std::string price_csv_to_string(const PriceSeries& prices);

DispatchSchedule parse_schedule_csv(std::string_view text,
                                    const std::string& source_name = "<schedule csv>");
DispatchSchedule load_schedule_csv(const std::filesystem::path& path);
std::string schedule_csv_to_string(const DispatchSchedule& schedule);

}  // namespace lcoe
