#include "lcoe/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "lcoe/engine.hpp"
#include "lcoe/report.hpp"
#include "lcoe/scenario_io.hpp"
#include "lcoe/sensitivity.hpp"

namespace lcoe::cli {

namespace {

enum class Formulation { eq1, eq2, eq3 };

Formulation formulation_from_string(const std::string& name) {
    if (name == "eq1") return Formulation::eq1;
    if (name == "eq2") return Formulation::eq2;
    if (name == "eq3") return Formulation::eq3;
    throw ParseError("unknown formulation '" + name + "' (expected eq1, eq2, or eq3)");
}

// Auto-selection: generation asset -> eq1; storage with an explicit schedule
// or a price series -> eq2; storage with a scalar price -> eq3.
Formulation select_formulation(const Scenario& scenario) {
    if (scenario.generation.has_value()) return Formulation::eq1;
    if (scenario.schedule.has_value()) return Formulation::eq2;
    if (scenario.price_source == PriceSource::series) return Formulation::eq2;
    if (scenario.price_source == PriceSource::scalar) return Formulation::eq3;
    throw ValidationError(ValidationCode::scenario_shape_invalid, "price",
                          "storage lcoe needs a [price] section (scalar price or price_csv)");
}

struct Computation {
    LcoeResult result;
    std::string label;
};

Computation compute_lcoe(const Scenario& scenario, Formulation formulation) {
    switch (formulation) {
        case Formulation::eq1: {
            if (!scenario.generation.has_value()) {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "generation",
                                      "formulation eq1 needs a [generation] scenario");
            }
            return {lcoe_generation(*scenario.generation), "eq1-generation"};
        }
        case Formulation::eq2: {
            if (!scenario.storage.has_value() || !scenario.prices.has_value()) {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "storage",
                                      "formulation eq2 needs [storage] and [price] sections");
            }
            const DispatchSchedule schedule =
                scenario.schedule.has_value()
                    ? *scenario.schedule
                    : canonical_schedule(*scenario.storage, scenario.days_per_year);
            return {lcoe_storage(*scenario.storage, *scenario.prices, schedule), "eq2-schedule"};
        }
        case Formulation::eq3: {
            if (!scenario.storage.has_value() ||
                scenario.price_source == PriceSource::none) {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "storage",
                                      "formulation eq3 needs [storage] and [price] sections");
            }
            // For a price series, eq3 uses the series mean as the flat price.
            return {lcoe_storage_simplified(*scenario.storage, mean_price(scenario),
                                            scenario.days_per_year),
                    "eq3-simplified"};
        }
    }
    throw ParseError("unreachable formulation");
}

void emit(const std::string& document, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << document;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw ParseError("cannot open output file '" + out_path + "'");
    }
    file << document;
    if (!file) {
        throw ParseError("failed writing output file '" + out_path + "'");
    }
}

struct CommonOptions {
    std::string scenario_path;
    std::vector<std::string> overrides;
    std::string format = "text";
    std::string out_path;
};

void add_common(CLI::App* command, CommonOptions& options, bool scenario_required) {
    auto* positional =
        command->add_option("scenario", options.scenario_path, "Scenario file path");
    if (scenario_required) positional->required();
    command->add_option("--set", options.overrides,
                        "Override a scenario key (key=value or section.key=value), applied "
                        "before validation");
    command->add_option("--format", options.format, "Output format: text, csv, json, or plot")
        ->check(CLI::IsMember({"text", "csv", "json", "plot", "plot-data"}));
    command->add_option("--out", options.out_path, "Write the document to a file instead of "
                                                   "stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Levelized cost of energy calculator for generation and storage assets"};
    app.require_subcommand(1);

    CommonOptions lcoe_options;
    std::string formulation_name;
    CLI::App* lcoe_command = app.add_subcommand(
        "lcoe", "Compute the levelized cost of energy for a scenario");
    add_common(lcoe_command, lcoe_options, true);
    lcoe_command
        ->add_option("--formulation", formulation_name,
                     "Force a formulation instead of auto-selecting: eq1 (generation cash "
                     "flow), eq2 (storage schedule), eq3 (storage closed form)")
        ->check(CLI::IsMember({"eq1", "eq2", "eq3"}));

    CommonOptions sweep_options;
    CLI::App* sweep_command =
        app.add_subcommand("sweep", "Evaluate the [sweep] block of a scenario");
    add_common(sweep_command, sweep_options, true);

    CommonOptions compare_options;
    CLI::App* compare_command = app.add_subcommand(
        "compare", "Compute min/avg/max LCOE ranges for each [technology] block");
    add_common(compare_command, compare_options, true);

    CommonOptions parity_options;
    double parity_lcoe = -1.0;
    double parity_rate = -1.0;
    CLI::App* parity_command =
        app.add_subcommand("parity", "Compare an LCOE against a utility rate");
    add_common(parity_command, parity_options, false);
    CLI::Option* lcoe_flag = parity_command->add_option(
        "--lcoe", parity_lcoe, "LCOE in USD/MWh (default: computed from the scenario)");
    CLI::Option* rate_flag = parity_command->add_option(
        "--rate", parity_rate, "Utility rate in USD/MWh (default: the scenario's mean price)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lcoe_command) {
            const Scenario scenario =
                load_scenario(lcoe_options.scenario_path, lcoe_options.overrides);
            const Formulation formulation = formulation_name.empty()
                                                ? select_formulation(scenario)
                                                : formulation_from_string(formulation_name);
            const Computation computation = compute_lcoe(scenario, formulation);
            emit(write_result(computation.result,
                              output_format_from_string(lcoe_options.format),
                              computation.label),
                 lcoe_options.out_path, out);
        } else if (*sweep_command) {
            const Scenario scenario =
                load_scenario(sweep_options.scenario_path, sweep_options.overrides);
            if (!scenario.sweep.has_value()) {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "sweep",
                                      "scenario has no [sweep] section");
            }
            if (!scenario.storage.has_value()) {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "storage",
                                      "sweep needs a [storage] scenario");
            }
            if (scenario.price_source == PriceSource::none &&
                scenario.sweep->parameter != SweepParameter::price) {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "price",
                                      "sweep over " +
                                          std::string(to_string(scenario.sweep->parameter)) +
                                          " needs a [price] section for the base price");
            }
            SweepSpec spec;
            spec.parameter = scenario.sweep->parameter;
            spec.start = scenario.sweep->start;
            spec.stop = scenario.sweep->stop;
            spec.steps = scenario.sweep->steps;
            spec.base_asset = *scenario.storage;
            spec.base_price =
                scenario.price_source == PriceSource::none ? 0.0 : mean_price(scenario);
            spec.days = scenario.days_per_year;
            emit(write_sweep(sweep(spec), output_format_from_string(sweep_options.format)),
                 sweep_options.out_path, out);
        } else if (*compare_command) {
            const Scenario scenario =
                load_scenario(compare_options.scenario_path, compare_options.overrides);
            if (scenario.technologies.empty()) {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "technology",
                                      "scenario has no [technology] sections");
            }
            std::vector<TechnologyRange> ranges;
            ranges.reserve(scenario.technologies.size());
            for (const TechnologySpec& spec : scenario.technologies) {
                ranges.push_back(technology_range(spec));
            }
            emit(write_ranges(ranges, output_format_from_string(compare_options.format)),
                 compare_options.out_path, out);
        } else if (*parity_command) {
            double lcoe_value = 0.0;
            double rate_value = 0.0;
            std::optional<Scenario> scenario;
            if (!parity_options.scenario_path.empty()) {
                scenario = load_scenario(parity_options.scenario_path,
                                         parity_options.overrides);
            }
            if (lcoe_flag->count() > 0) {
                lcoe_value = parity_lcoe;
            } else if (scenario.has_value()) {
                lcoe_value =
                    compute_lcoe(*scenario, select_formulation(*scenario)).result.lcoe_usd_per_mwh;
            } else {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "lcoe",
                                      "parity needs --lcoe or a scenario");
            }
            if (rate_flag->count() > 0) {
                rate_value = parity_rate;
            } else if (scenario.has_value() &&
                       scenario->price_source != PriceSource::none) {
                rate_value = mean_price(*scenario);
            } else {
                throw ValidationError(ValidationCode::scenario_shape_invalid, "utility_rate",
                                      "parity needs --rate or a scenario with a price");
            }
            emit(write_verdict(grid_parity(lcoe_value, rate_value),
                               output_format_from_string(parity_options.format)),
                 parity_options.out_path, out);
        }
    } catch (const ValidationError& error) {
        err << "error: " << error.what() << "\n";
        return 1;
    } catch (const ParseError& error) {
        err << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lcoe::cli
