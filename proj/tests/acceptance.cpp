// Acceptance suite. Runs every gate criterion at its pinned tolerance and
// prints one [PASS]/[FAIL] line per criterion; exits nonzero if any fail.
//
// Usage: acceptance [scenarios-dir]   (default: "scenarios")

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcoe/cli.hpp"
#include "lcoe/engine.hpp"
#include "lcoe/report.hpp"
#include "lcoe/scenario_io.hpp"
#include "lcoe/sensitivity.hpp"
#include "oracles.hpp"

using namespace lcoe;

namespace {

std::filesystem::path g_scenarios_dir = "scenarios";

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double value) { return format_full(value); }

PriceSeries flat_prices(double price, int days) {
    PriceSeries series;
    series.days_per_year = days;
    series.daily_price.assign(static_cast<std::size_t>(days), price);
    return series;
}

// Criterion 1: the bundled reference inputs through the closed form must land
// within +/-0.005 of the published 225.55 $/MWh, in under a second.
Outcome reference_reproduction() {
    constexpr double kReferenceValue = 225.55;  // published, cent precision
    constexpr double kTolerance = 0.005;

    const auto start = std::chrono::steady_clock::now();
    const Scenario scenario = load_scenario(g_scenarios_dir / "worked_example.scn");
    const LcoeResult result = lcoe_storage_simplified(*scenario.storage, scenario.scalar_price,
                                                      scenario.days_per_year);
    const double elapsed = seconds_since(start);

    Outcome outcome;
    const double gap = std::abs(result.lcoe_usd_per_mwh - kReferenceValue);
    outcome.require(gap <= kTolerance,
                    "computed " + fmt(result.lcoe_usd_per_mwh) + ", reference " +
                        fmt(kReferenceValue) + ", |diff| " + fmt(gap) + " > " + fmt(kTolerance));
    outcome.require(elapsed < 1.0, "runtime " + fmt(elapsed) + "s >= 1s");
    if (outcome.ok) {
        outcome.detail = "computed " + fmt(result.lcoe_usd_per_mwh) + ", |diff| " + fmt(gap) +
                         " <= " + fmt(kTolerance) + ", " + fmt(elapsed) + "s";
    }
    return outcome;
}

// Criterion 2: schedule formula on the canonical schedule vs the closed form,
// 1e-9 relative over >= 100 randomized assets and flat prices, under 5 s.
Outcome equivalence_suite() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(1001);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> days_dist(1, 730);

    Outcome outcome;
    int cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        StorageAsset asset;
        asset.annualized_power_cost = unit(rng) * 2e5;
        asset.annualized_energy_cost = unit(rng) * 1e5;
        asset.rated_power = 0.05 + unit(rng) * 100.0;
        asset.charging_hours = 0.25 + unit(rng) * 23.75;
        asset.rated_energy = asset.rated_power * asset.charging_hours;
        asset.roundtrip_efficiency = 0.05 + unit(rng) * 0.95;
        const double price = unit(rng) * 400.0;
        const int days = days_dist(rng);

        const double via_schedule =
            lcoe_storage(asset, flat_prices(price, days), canonical_schedule(asset, days))
                .lcoe_usd_per_mwh;
        const double closed_form =
            lcoe_storage_simplified(asset, price, days).lcoe_usd_per_mwh;
        outcome.require(oracles::close_rel(via_schedule, closed_form, 1e-9),
                        "case " + std::to_string(trial) + ": schedule " + fmt(via_schedule) +
                            " vs closed form " + fmt(closed_form));
        ++cases;
    }
    const double elapsed = seconds_since(start);
    outcome.require(elapsed < 5.0, "runtime " + fmt(elapsed) + "s >= 5s");
    if (outcome.ok) {
        outcome.detail = std::to_string(cases) + " cases within 1e-9, " + fmt(elapsed) + "s";
    }
    return outcome;
}

// Criterion 3: scaling ratings by k in {0.5, 2, 10} with regenerated canonical
// schedules moves the LCOE by less than 1e-12 relative.
Outcome size_invariance() {
    Outcome outcome;
    const StorageAsset base = oracles::reference_storage_asset();
    const double reference =
        lcoe_storage(base, flat_prices(oracles::kReferencePrice, 365),
                     canonical_schedule(base, 365))
            .lcoe_usd_per_mwh;
    for (double factor : {0.5, 2.0, 10.0}) {
        StorageAsset scaled = base;
        scaled.rated_power *= factor;
        scaled.rated_energy *= factor;
        const double value =
            lcoe_storage(scaled, flat_prices(oracles::kReferencePrice, 365),
                         canonical_schedule(scaled, 365))
                .lcoe_usd_per_mwh;
        const double relative = std::abs(value - reference) / std::abs(reference);
        outcome.require(relative < 1e-12,
                        "k=" + fmt(factor) + ": relative change " + fmt(relative) + " >= 1e-12");
        const double simplified =
            lcoe_storage_simplified(scaled, oracles::kReferencePrice, 365).lcoe_usd_per_mwh;
        const double simplified_relative = std::abs(simplified - reference) / std::abs(reference);
        outcome.require(simplified_relative < 1e-12,
                        "k=" + fmt(factor) + " (closed form): relative change " +
                            fmt(simplified_relative) + " >= 1e-12");
    }
    if (outcome.ok) outcome.detail = "k in {0.5, 2, 10}, both formulas, < 1e-12 relative";
    return outcome;
}

// Criterion 4: figure-shape properties of the four sweeps.
Outcome figure_shapes() {
    Outcome outcome;
    const StorageAsset base = oracles::reference_storage_asset();

    SweepSpec spec;
    spec.base_asset = base;
    spec.base_price = oracles::kReferencePrice;
    spec.days = 365;

    // Charging-hours sweep strictly decreasing.
    spec.parameter = SweepParameter::charging_hours;
    spec.start = 1.0;
    spec.stop = 24.0;
    spec.steps = 24;
    const SweepTable hours = sweep(spec);
    for (std::size_t i = 1; i < hours.points.size(); ++i) {
        outcome.require(hours.points[i].lcoe_usd_per_mwh < hours.points[i - 1].lcoe_usd_per_mwh,
                        "charging-hours sweep not strictly decreasing at point " +
                            std::to_string(i));
    }

    // Price sweep affine with two-point slope 1/eta.
    spec.parameter = SweepParameter::price;
    spec.start = 0.0;
    spec.stop = 2.0 * oracles::kReferencePrice;
    spec.steps = 11;
    const SweepTable price = sweep(spec);
    const double slope = (price.points.back().lcoe_usd_per_mwh -
                          price.points.front().lcoe_usd_per_mwh) /
                         (price.points.back().parameter_value -
                          price.points.front().parameter_value);
    outcome.require(oracles::close_rel(slope, 1.0 / base.roundtrip_efficiency, 1e-9),
                    "price slope " + fmt(slope) + " vs 1/eta " +
                        fmt(1.0 / base.roundtrip_efficiency));
    for (std::size_t i = 2; i < price.points.size(); ++i) {
        const double d1 =
            price.points[i - 1].lcoe_usd_per_mwh - price.points[i - 2].lcoe_usd_per_mwh;
        const double d2 = price.points[i].lcoe_usd_per_mwh - price.points[i - 1].lcoe_usd_per_mwh;
        outcome.require(oracles::close_rel(d1, d2, 1e-9),
                        "price sweep not affine at point " + std::to_string(i));
    }

    // Efficiency sweep: eta * LCOE constant.
    spec.parameter = SweepParameter::efficiency;
    spec.start = 0.6;
    spec.stop = 1.0;
    spec.steps = 21;
    const SweepTable efficiency = sweep(spec);
    const double product0 =
        efficiency.points.front().parameter_value * efficiency.points.front().lcoe_usd_per_mwh;
    for (const SweepPoint& point : efficiency.points) {
        const double product = point.parameter_value * point.lcoe_usd_per_mwh;
        outcome.require(oracles::close_rel(product, product0, 1e-9),
                        "eta*LCOE not constant: " + fmt(product) + " vs " + fmt(product0));
    }

    // Cost-ratio sweep affine increasing.
    spec.parameter = SweepParameter::energy_to_power_cost_ratio;
    spec.start = 0.1;
    spec.stop = 2.0;
    spec.steps = 20;
    const SweepTable ratio = sweep(spec);
    for (std::size_t i = 1; i < ratio.points.size(); ++i) {
        outcome.require(ratio.points[i].lcoe_usd_per_mwh > ratio.points[i - 1].lcoe_usd_per_mwh,
                        "cost-ratio sweep not increasing at point " + std::to_string(i));
    }
    for (std::size_t i = 2; i < ratio.points.size(); ++i) {
        const double d1 =
            ratio.points[i - 1].lcoe_usd_per_mwh - ratio.points[i - 2].lcoe_usd_per_mwh;
        const double d2 = ratio.points[i].lcoe_usd_per_mwh - ratio.points[i - 1].lcoe_usd_per_mwh;
        outcome.require(oracles::close_rel(d1, d2, 1e-9),
                        "cost-ratio sweep not affine at point " + std::to_string(i));
    }

    if (outcome.ok) {
        outcome.detail = "hours strictly decreasing; price affine slope 1/eta; eta*LCOE "
                         "constant; ratio affine increasing";
    }
    return outcome;
}

// Criterion 5: schedule-formula engine vs brute-force term-by-term summation
// on >= 500 randomized series of length <= 10, 1e-9 relative, under 5 s.
Outcome brute_force_oracle() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(5005);
    std::uniform_int_distribution<int> days_dist(1, 10);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Outcome outcome;
    int cases = 0;
    for (int trial = 0; trial < 600; ++trial) {
        StorageAsset asset;
        asset.annualized_power_cost = unit(rng) * 1e5;
        asset.annualized_energy_cost = unit(rng) * 1e5;
        asset.rated_power = 0.1 + unit(rng) * 50.0;
        asset.charging_hours = 0.5 + unit(rng) * 23.5;
        asset.rated_energy = asset.rated_power * asset.charging_hours;
        asset.roundtrip_efficiency = 0.05 + unit(rng) * 0.95;

        const int days = days_dist(rng);
        PriceSeries prices;
        prices.days_per_year = days;
        DispatchSchedule schedule;
        for (int day = 0; day < days; ++day) {
            prices.daily_price.push_back(unit(rng) * 500.0);
            const double charge = unit(rng) * asset.rated_energy;
            schedule.daily_charge.push_back(charge);
            schedule.daily_discharge.push_back(asset.roundtrip_efficiency * charge * unit(rng));
        }
        schedule.daily_charge[0] = asset.rated_energy;
        schedule.daily_discharge[0] = asset.roundtrip_efficiency * asset.rated_energy;

        const double engine =
            lcoe_storage(asset, prices, schedule).lcoe_usd_per_mwh;
        const double oracle = oracles::term_sum_lcoe(asset, prices.daily_price,
                                                     schedule.daily_charge,
                                                     schedule.daily_discharge);
        outcome.require(oracles::close_rel(engine, oracle, 1e-9),
                        "case " + std::to_string(trial) + ": engine " + fmt(engine) +
                            " vs oracle " + fmt(oracle));
        ++cases;
    }
    const double elapsed = seconds_since(start);
    outcome.require(elapsed < 5.0, "runtime " + fmt(elapsed) + "s >= 5s");
    if (outcome.ok) {
        outcome.detail = std::to_string(cases) + " cases within 1e-9, " + fmt(elapsed) + "s";
    }
    return outcome;
}

// Criterion 6: degenerate and discounted generation checks.
Outcome generation_checks() {
    Outcome outcome;

    // d=0, one year, F=V=0 degenerates to I/E + C_F exactly.
    GenerationAsset degenerate;
    degenerate.investment_cost = 1000.0;
    degenerate.fuel_cost_per_mwh = 7.0;
    degenerate.annual_energy = {100.0};
    degenerate.lifetime_years = 1;
    degenerate.discount_rate = 0.0;
    const double degenerate_lcoe = lcoe_generation(degenerate).lcoe_usd_per_mwh;
    const double expected = degenerate.investment_cost / 100.0 + degenerate.fuel_cost_per_mwh;
    outcome.require(degenerate_lcoe == expected,
                    "degenerate case: " + fmt(degenerate_lcoe) + " != " + fmt(expected));

    // Two-year discounted case vs the pre-computed cash-flow oracle (131/21).
    GenerationAsset discounted;
    discounted.investment_cost = 1000.0;
    discounted.fixed_om_per_year = 100.0;
    discounted.annual_energy = {100.0, 100.0};
    discounted.lifetime_years = 2;
    discounted.discount_rate = 0.10;
    const double discounted_lcoe = lcoe_generation(discounted).lcoe_usd_per_mwh;
    outcome.require(
        oracles::close_rel(discounted_lcoe, oracles::kTwoYearGenerationLcoe, 1e-9),
        "discounted case: " + fmt(discounted_lcoe) + " vs oracle " +
            fmt(oracles::kTwoYearGenerationLcoe));
    outcome.require(
        oracles::close_rel(discounted_lcoe,
                           oracles::cash_flow_lcoe(1000.0, 100.0, 0.0, {100.0, 100.0}, 0.10),
                           1e-9),
        "discounted case disagrees with the cash-flow table");

    if (outcome.ok) {
        outcome.detail = "I/E + C_F exact; discounted case matches 131/21 within 1e-9";
    }
    return outcome;
}

// Criterion 7: corner-enumeration ranges vs dense-grid search on random boxes.
Outcome range_comparator() {
    Outcome outcome;
    std::mt19937 rng(7007);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int box = 0; box < 6; ++box) {
        TechnologySpec spec;
        spec.name = "box" + std::to_string(box);
        const double power_low = unit(rng) * 5e4;
        spec.power_cost = {power_low, power_low + unit(rng) * 5e4};
        const double energy_low = unit(rng) * 3e4;
        spec.energy_cost = {energy_low, energy_low + unit(rng) * 3e4};
        const double efficiency_low = 0.3 + unit(rng) * 0.4;
        spec.efficiency = {efficiency_low, efficiency_low + unit(rng) * (1.0 - efficiency_low)};
        const double hours_low = 1.0 + unit(rng) * 10.0;
        spec.charging_hours = {hours_low, hours_low + unit(rng) * (24.0 - hours_low)};
        spec.price = unit(rng) * 200.0;
        spec.days = 365;

        const TechnologyRange range = technology_range(spec);
        outcome.require(range.min_lcoe <= range.avg_lcoe && range.avg_lcoe <= range.max_lcoe,
                        "box " + std::to_string(box) + ": min <= avg <= max violated");

        // Dense grid including endpoints; extrema must match the corners.
        constexpr int kPoints = 12;
        double grid_min = std::numeric_limits<double>::infinity();
        double grid_max = -grid_min;
        auto at = [&](const ParameterRange& r, int i) {
            if (r.min == r.max) return r.min;
            if (i == kPoints - 1) return r.max;
            return r.min + (r.max - r.min) * static_cast<double>(i) / (kPoints - 1);
        };
        for (int a = 0; a < kPoints; ++a) {
            for (int b = 0; b < kPoints; ++b) {
                for (int c = 0; c < kPoints; ++c) {
                    for (int d = 0; d < kPoints; ++d) {
                        StorageAsset asset;
                        asset.annualized_power_cost = at(spec.power_cost, a);
                        asset.annualized_energy_cost = at(spec.energy_cost, b);
                        asset.roundtrip_efficiency = at(spec.efficiency, c);
                        asset.charging_hours = at(spec.charging_hours, d);
                        asset.rated_power = 1.0;
                        asset.rated_energy = asset.charging_hours;
                        const double value =
                            lcoe_storage_simplified(asset, spec.price, spec.days)
                                .lcoe_usd_per_mwh;
                        grid_min = std::min(grid_min, value);
                        grid_max = std::max(grid_max, value);
                    }
                }
            }
        }
        outcome.require(oracles::close_rel(grid_min, range.min_lcoe, 1e-12),
                        "box " + std::to_string(box) + ": grid min " + fmt(grid_min) +
                            " vs corner min " + fmt(range.min_lcoe));
        outcome.require(oracles::close_rel(grid_max, range.max_lcoe, 1e-12),
                        "box " + std::to_string(box) + ": grid max " + fmt(grid_max) +
                            " vs corner max " + fmt(range.max_lcoe));
    }
    if (outcome.ok) outcome.detail = "6 random boxes, 12^4 grids match corner enumeration";
    return outcome;
}

// Criterion 8: serialize -> parse identity on every domain value, and
// byte-identical CLI output for the bundled scenario.
Outcome io_round_trip() {
    Outcome outcome;
    std::mt19937 rng(8008);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto check_close = [&](double actual, double expected, const std::string& what) {
        outcome.require(oracles::close_rel(actual, expected, 1e-9),
                        what + ": " + fmt(actual) + " vs " + fmt(expected));
    };

    for (int trial = 0; trial < 30; ++trial) {
        // Storage scenario text.
        Scenario storage_scenario;
        StorageAsset asset;
        asset.annualized_power_cost = unit(rng) * 1e6;
        asset.annualized_energy_cost = unit(rng) * 1e6;
        asset.rated_power = 0.01 + unit(rng) * 100.0;
        asset.rated_energy = 0.01 + unit(rng) * 1000.0;
        asset.roundtrip_efficiency = 0.01 + unit(rng) * 0.99;
        asset.charging_hours = 0.01 + unit(rng) * 23.9;
        storage_scenario.storage = asset;
        storage_scenario.price_source = PriceSource::scalar;
        storage_scenario.scalar_price = unit(rng) * 500.0;
        storage_scenario.days_per_year = 1 + static_cast<int>(unit(rng) * 700.0);
        storage_scenario.prices = flat_prices(storage_scenario.scalar_price,
                                              storage_scenario.days_per_year);
        const Scenario storage_reparsed =
            parse_scenario(scenario_to_string(storage_scenario), ".");
        check_close(storage_reparsed.storage->annualized_power_cost,
                    asset.annualized_power_cost, "storage power cost");
        check_close(storage_reparsed.storage->rated_energy, asset.rated_energy,
                    "storage rated energy");
        check_close(storage_reparsed.storage->roundtrip_efficiency,
                    asset.roundtrip_efficiency, "storage efficiency");
        check_close(storage_reparsed.scalar_price, storage_scenario.scalar_price,
                    "scalar price");

        // Generation scenario text.
        Scenario generation_scenario;
        GenerationAsset generation;
        generation.investment_cost = unit(rng) * 1e8;
        generation.fixed_om_per_year = unit(rng) * 1e6;
        generation.variable_om_per_mwh = unit(rng) * 20.0;
        generation.fuel_cost_per_mwh = unit(rng) * 80.0;
        generation.lifetime_years = 1 + static_cast<int>(unit(rng) * 40.0);
        for (int year = 0; year < generation.lifetime_years; ++year) {
            generation.annual_energy.push_back(unit(rng) * 1e5 + 1.0);
        }
        generation.discount_rate = unit(rng) * 0.3;
        generation_scenario.generation = generation;
        const Scenario generation_reparsed =
            parse_scenario(scenario_to_string(generation_scenario), ".");
        check_close(generation_reparsed.generation->investment_cost,
                    generation.investment_cost, "generation investment");
        for (std::size_t year = 0; year < generation.annual_energy.size(); ++year) {
            check_close(generation_reparsed.generation->annual_energy[year],
                        generation.annual_energy[year], "annual energy");
        }

        // Price series CSV.
        PriceSeries series;
        series.days_per_year = 1 + static_cast<int>(unit(rng) * 400.0);
        for (int day = 0; day < series.days_per_year; ++day) {
            series.daily_price.push_back(unit(rng) * 500.0);
        }
        const PriceSeries series_reparsed =
            parse_price_csv(price_csv_to_string(series), series.days_per_year);
        for (std::size_t day = 0; day < series.daily_price.size(); ++day) {
            check_close(series_reparsed.daily_price[day], series.daily_price[day], "price");
        }

        // Dispatch schedule CSV.
        DispatchSchedule schedule;
        for (int day = 0; day < series.days_per_year; ++day) {
            const double charge = unit(rng) * asset.rated_energy;
            schedule.daily_charge.push_back(charge);
            schedule.daily_discharge.push_back(charge * asset.roundtrip_efficiency);
        }
        const DispatchSchedule schedule_reparsed =
            parse_schedule_csv(schedule_csv_to_string(schedule));
        for (std::size_t day = 0; day < schedule.daily_charge.size(); ++day) {
            check_close(schedule_reparsed.daily_charge[day], schedule.daily_charge[day],
                        "charge");
            check_close(schedule_reparsed.daily_discharge[day], schedule.daily_discharge[day],
                        "discharge");
        }

        // Result, sweep table, and technology range JSON.
        const LcoeResult result = lcoe_storage_simplified(
            asset, storage_scenario.scalar_price, storage_scenario.days_per_year);
        const LcoeResult result_reparsed =
            lcoe_result_from_json(write_result(result, OutputFormat::json, "eq3-simplified"));
        check_close(result_reparsed.lcoe_usd_per_mwh, result.lcoe_usd_per_mwh, "result lcoe");
        check_close(result_reparsed.capital_cost_usd, result.capital_cost_usd,
                    "result capital");
        check_close(result_reparsed.operating_cost_usd, result.operating_cost_usd,
                    "result operating");
        check_close(result_reparsed.total_energy_mwh, result.total_energy_mwh,
                    "result energy");

        SweepSpec sweep_spec;
        sweep_spec.parameter = SweepParameter::efficiency;
        sweep_spec.start = 0.5 + unit(rng) * 0.2;
        sweep_spec.stop = 0.9 + unit(rng) * 0.1;
        sweep_spec.steps = 2 + static_cast<int>(unit(rng) * 20.0);
        sweep_spec.base_asset = oracles::reference_storage_asset();
        sweep_spec.base_price = unit(rng) * 300.0;
        sweep_spec.days = 365;
        const SweepTable table = sweep(sweep_spec);
        const SweepTable table_reparsed =
            sweep_table_from_json(write_sweep(table, OutputFormat::json));
        outcome.require(table_reparsed.points.size() == table.points.size(),
                        "sweep table point count changed in round trip");
        for (std::size_t i = 0; i < table.points.size(); ++i) {
            check_close(table_reparsed.points[i].parameter_value,
                        table.points[i].parameter_value, "sweep x");
            check_close(table_reparsed.points[i].lcoe_usd_per_mwh,
                        table.points[i].lcoe_usd_per_mwh, "sweep y");
        }

        TechnologySpec technology;
        technology.name = "roundtrip";
        const double power_low = unit(rng) * 5e4;
        technology.power_cost = {power_low, power_low + unit(rng) * 5e4};
        const double energy_low = unit(rng) * 3e4;
        technology.energy_cost = {energy_low, energy_low + unit(rng) * 3e4};
        technology.efficiency = {0.5, 0.5 + unit(rng) * 0.5};
        technology.charging_hours = {2.0, 2.0 + unit(rng) * 20.0};
        technology.price = unit(rng) * 200.0;
        technology.days = 365;
        const std::vector<TechnologyRange> ranges = {technology_range(technology)};
        const auto ranges_reparsed =
            technology_ranges_from_json(write_ranges(ranges, OutputFormat::json));
        check_close(ranges_reparsed[0].min_lcoe, ranges[0].min_lcoe, "range min");
        check_close(ranges_reparsed[0].avg_lcoe, ranges[0].avg_lcoe, "range avg");
        check_close(ranges_reparsed[0].max_lcoe, ranges[0].max_lcoe, "range max");
    }

    // Byte-identical CLI output for the bundled scenario, all formats.
    const std::string scenario_path = (g_scenarios_dir / "worked_example.scn").string();
    for (const std::string format : {"text", "csv", "json"}) {
        std::ostringstream first_out, first_err, second_out, second_err;
        const int first_code = cli::run({"lcoe", scenario_path, "--format", format},
                                        first_out, first_err);
        const int second_code = cli::run({"lcoe", scenario_path, "--format", format},
                                         second_out, second_err);
        outcome.require(first_code == 0 && second_code == 0,
                        "cli run failed for format " + format);
        outcome.require(first_out.str() == second_out.str(),
                        "cli output differs across runs for format " + format);
    }

    if (outcome.ok) {
        outcome.detail = "30 randomized round trips exact; CLI output byte-identical";
    }
    return outcome;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_scenarios_dir = argv[1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"reference-scenario reproduction (225.55 +/- 0.005, < 1 s)", reference_reproduction},
        {"canonical-schedule/closed-form equivalence (1e-9, >= 100 cases, < 5 s)",
         equivalence_suite},
        {"size invariance (k in {0.5, 2, 10}, < 1e-12)", size_invariance},
        {"figure-shape properties (monotonic/affine/inverse, 1e-9)", figure_shapes},
        {"brute-force oracle equivalence (1e-9, >= 500 cases, < 5 s)", brute_force_oracle},
        {"generation degenerate and discounted checks (exact / 1e-9)", generation_checks},
        {"range comparator vs dense grid (>= 5 boxes)", range_comparator},
        {"io round-trip identity and CLI determinism (1e-9 / byte-exact)", io_round_trip},
    };

    int failures = 0;
    for (const auto& [name, criterion] : criteria) {
        Outcome outcome;
        try {
            outcome = criterion();
        } catch (const std::exception& error) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + error.what();
        }
        std::printf("[%s] %s: %s\n", outcome.ok ? "PASS" : "FAIL", name.c_str(),
                    outcome.detail.c_str());
        if (!outcome.ok) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
