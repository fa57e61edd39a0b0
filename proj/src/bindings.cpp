#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lcoe/engine.hpp"
#include "lcoe/report.hpp"
#include "lcoe/scenario_io.hpp"
#include "lcoe/sensitivity.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_lcoe, m) {
    m.doc() = "Levelized cost of energy calculations for generation and storage assets";

    py::register_exception<lcoe::ValidationError>(m, "ValidationError");
    py::register_exception<lcoe::ParseError>(m, "ParseError");

    py::class_<lcoe::GenerationAsset>(m, "GenerationAsset")
        .def(py::init<>())
        .def_readwrite("investment_cost", &lcoe::GenerationAsset::investment_cost)
        .def_readwrite("fixed_om_per_year", &lcoe::GenerationAsset::fixed_om_per_year)
        .def_readwrite("variable_om_per_mwh", &lcoe::GenerationAsset::variable_om_per_mwh)
        .def_readwrite("fuel_cost_per_mwh", &lcoe::GenerationAsset::fuel_cost_per_mwh)
        .def_readwrite("annual_energy", &lcoe::GenerationAsset::annual_energy)
        .def_readwrite("lifetime_years", &lcoe::GenerationAsset::lifetime_years)
        .def_readwrite("discount_rate", &lcoe::GenerationAsset::discount_rate);

    py::class_<lcoe::StorageAsset>(m, "StorageAsset")
        .def(py::init<>())
        .def_readwrite("annualized_power_cost", &lcoe::StorageAsset::annualized_power_cost)
        .def_readwrite("annualized_energy_cost", &lcoe::StorageAsset::annualized_energy_cost)
        .def_readwrite("rated_power", &lcoe::StorageAsset::rated_power)
        .def_readwrite("rated_energy", &lcoe::StorageAsset::rated_energy)
        .def_readwrite("roundtrip_efficiency", &lcoe::StorageAsset::roundtrip_efficiency)
        .def_readwrite("charging_hours", &lcoe::StorageAsset::charging_hours);

    py::class_<lcoe::PriceSeries>(m, "PriceSeries")
        .def(py::init<>())
        .def_readwrite("daily_price", &lcoe::PriceSeries::daily_price)
        .def_readwrite("days_per_year", &lcoe::PriceSeries::days_per_year);

    py::class_<lcoe::DispatchSchedule>(m, "DispatchSchedule")
        .def(py::init<>())
        .def_readwrite("daily_charge", &lcoe::DispatchSchedule::daily_charge)
        .def_readwrite("daily_discharge", &lcoe::DispatchSchedule::daily_discharge);

    py::class_<lcoe::LcoeResult>(m, "LcoeResult")
        .def(py::init<>())
        .def_readwrite("lcoe_usd_per_mwh", &lcoe::LcoeResult::lcoe_usd_per_mwh)
        .def_readwrite("capital_cost_usd", &lcoe::LcoeResult::capital_cost_usd)
        .def_readwrite("operating_cost_usd", &lcoe::LcoeResult::operating_cost_usd)
        .def_readwrite("total_energy_mwh", &lcoe::LcoeResult::total_energy_mwh)
        .def("__repr__", [](const lcoe::LcoeResult& result) {
            return "LcoeResult(lcoe_usd_per_mwh=" + lcoe::format_full(result.lcoe_usd_per_mwh) +
                   ")";
        });

    py::class_<lcoe::ParityVerdict>(m, "ParityVerdict")
        .def(py::init<>())
        .def_readwrite("lcoe", &lcoe::ParityVerdict::lcoe)
        .def_readwrite("reference_rate", &lcoe::ParityVerdict::reference_rate)
        .def_readwrite("at_parity", &lcoe::ParityVerdict::at_parity)
        .def_readwrite("margin", &lcoe::ParityVerdict::margin);

    py::class_<lcoe::SweepPoint>(m, "SweepPoint")
        .def(py::init<>())
        .def_readwrite("parameter_value", &lcoe::SweepPoint::parameter_value)
        .def_readwrite("lcoe_usd_per_mwh", &lcoe::SweepPoint::lcoe_usd_per_mwh);

    py::class_<lcoe::SweepTable>(m, "SweepTable")
        .def(py::init<>())
        .def_readwrite("parameter_name", &lcoe::SweepTable::parameter_name)
        .def_readwrite("points", &lcoe::SweepTable::points);

    py::class_<lcoe::TechnologyRange>(m, "TechnologyRange")
        .def(py::init<>())
        .def_readwrite("technology_name", &lcoe::TechnologyRange::technology_name)
        .def_readwrite("min_lcoe", &lcoe::TechnologyRange::min_lcoe)
        .def_readwrite("avg_lcoe", &lcoe::TechnologyRange::avg_lcoe)
        .def_readwrite("max_lcoe", &lcoe::TechnologyRange::max_lcoe);

    py::enum_<lcoe::SweepParameter>(m, "SweepParameter")
        .value("charging_hours", lcoe::SweepParameter::charging_hours)
        .value("price", lcoe::SweepParameter::price)
        .value("efficiency", lcoe::SweepParameter::efficiency)
        .value("energy_to_power_cost_ratio", lcoe::SweepParameter::energy_to_power_cost_ratio);

    py::class_<lcoe::SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("parameter", &lcoe::SweepSpec::parameter)
        .def_readwrite("start", &lcoe::SweepSpec::start)
        .def_readwrite("stop", &lcoe::SweepSpec::stop)
        .def_readwrite("steps", &lcoe::SweepSpec::steps)
        .def_readwrite("base_asset", &lcoe::SweepSpec::base_asset)
        .def_readwrite("base_price", &lcoe::SweepSpec::base_price)
        .def_readwrite("days", &lcoe::SweepSpec::days);

    py::class_<lcoe::ParameterRange>(m, "ParameterRange")
        .def(py::init<>())
        .def(py::init([](double min, double max) {
                 return lcoe::ParameterRange{min, max};
             }),
             "min"_a, "max"_a)
        .def_readwrite("min", &lcoe::ParameterRange::min)
        .def_readwrite("max", &lcoe::ParameterRange::max);

    py::class_<lcoe::TechnologySpec>(m, "TechnologySpec")
        .def(py::init<>())
        .def_readwrite("name", &lcoe::TechnologySpec::name)
        .def_readwrite("power_cost", &lcoe::TechnologySpec::power_cost)
        .def_readwrite("energy_cost", &lcoe::TechnologySpec::energy_cost)
        .def_readwrite("efficiency", &lcoe::TechnologySpec::efficiency)
        .def_readwrite("charging_hours", &lcoe::TechnologySpec::charging_hours)
        .def_readwrite("price", &lcoe::TechnologySpec::price)
        .def_readwrite("days", &lcoe::TechnologySpec::days);

    py::class_<lcoe::Scenario>(m, "Scenario")
        .def_readonly("generation", &lcoe::Scenario::generation)
        .def_readonly("storage", &lcoe::Scenario::storage)
        .def_readonly("scalar_price", &lcoe::Scenario::scalar_price)
        .def_readonly("prices", &lcoe::Scenario::prices)
        .def_readonly("schedule", &lcoe::Scenario::schedule)
        .def_readonly("technologies", &lcoe::Scenario::technologies)
        .def_readonly("days_per_year", &lcoe::Scenario::days_per_year);

    m.def("validate_generation",
          [](const lcoe::GenerationAsset& asset) { return lcoe::validate(asset); },
          "asset"_a, "Validate a generation asset, raising ValidationError on any violation");
    m.def("validate_storage",
          [](const lcoe::StorageAsset& asset) { return lcoe::validate(asset); }, "asset"_a);
    m.def("validate_prices",
          [](const lcoe::PriceSeries& prices) { return lcoe::validate(prices); }, "prices"_a);
    m.def("validate_schedule",
          [](const lcoe::DispatchSchedule& schedule, const lcoe::StorageAsset& asset,
             std::size_t expected_days) {
              return lcoe::validate(schedule, asset, expected_days);
          },
          "schedule"_a, "asset"_a, "expected_days"_a);

    m.def("lcoe_generation", &lcoe::lcoe_generation, "asset"_a,
          "Discounted cash-flow LCOE of a generation asset");
    m.def("lcoe_storage", &lcoe::lcoe_storage, "asset"_a, "prices"_a, "schedule"_a,
          "One-year storage LCOE over an explicit dispatch schedule");
    m.def("canonical_schedule", &lcoe::canonical_schedule, "asset"_a, "days"_a,
          "Full daily-cycle schedule: charge rated_energy, discharge "
          "roundtrip_efficiency * rated_energy");
    m.def("lcoe_storage_simplified", &lcoe::lcoe_storage_simplified, "asset"_a,
          "average_price"_a, "days"_a, "Closed-form storage LCOE under a flat price");
    m.def("grid_parity", &lcoe::grid_parity, "lcoe"_a, "utility_rate"_a,
          "Parity verdict: at_parity when lcoe <= utility_rate");

    m.def("sweep", &lcoe::sweep, "spec"_a, "Evaluate a one-dimensional sensitivity sweep");
    m.def("technology_range", &lcoe::technology_range, "spec"_a,
          "min/avg/max LCOE over a technology's parameter box");

    m.def("load_scenario",
          [](const std::filesystem::path& path, const std::vector<std::string>& overrides) {
              return lcoe::load_scenario(path, overrides);
          },
          "path"_a, "overrides"_a = std::vector<std::string>{},
          "Load and validate a scenario file");

    m.def("result_to_csv",
          [](const lcoe::LcoeResult& result, std::string_view formulation) {
              return lcoe::write_result(result, lcoe::OutputFormat::csv, formulation);
          },
          "result"_a, "formulation"_a = std::string_view{});
    m.def("result_to_json",
          [](const lcoe::LcoeResult& result, std::string_view formulation) {
              return lcoe::write_result(result, lcoe::OutputFormat::json, formulation);
          },
          "result"_a, "formulation"_a = std::string_view{});
    m.def("sweep_to_csv", [](const lcoe::SweepTable& table) {
        return lcoe::write_sweep(table, lcoe::OutputFormat::csv);
    });
    m.def("sweep_to_json", [](const lcoe::SweepTable& table) {
        return lcoe::write_sweep(table, lcoe::OutputFormat::json);
    });
    m.def("sweep_to_plot_data", [](const lcoe::SweepTable& table) {
        return lcoe::write_sweep(table, lcoe::OutputFormat::plot_data);
    });
    m.def("ranges_to_csv", [](const std::vector<lcoe::TechnologyRange>& ranges) {
        return lcoe::write_ranges(ranges, lcoe::OutputFormat::csv);
    });
    m.def("ranges_to_json", [](const std::vector<lcoe::TechnologyRange>& ranges) {
        return lcoe::write_ranges(ranges, lcoe::OutputFormat::json);
    });
}
