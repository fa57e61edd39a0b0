#pragma once

// Result serialization. Four formats:
//
//   text  human-readable key: value lines (CLI default)
//   csv   comma-separated with units in the header row
//   json  machine-readable, full-precision numerics (round-trips exactly)
//   plot  two-column x y text for plotting tools (sweep tables only)
//
// text/csv/plot render money at cent precision and other numerics at 6
// significant digits; json carries full precision. Output is byte-identical
// for identical inputs.

#include <string>
#include <string_view>
#include <vector>

#include "lcoe/core_model.hpp"
#include "lcoe/engine.hpp"

namespace lcoe {

enum class OutputFormat { text, csv, json, plot_data };

std::string_view to_string(OutputFormat format);
OutputFormat output_format_from_string(std::string_view name);

// `formulation` labels which formula produced the result (eq1-generation,
// eq2-schedule, eq3-simplified); empty omits the row.
std::string write_result(const LcoeResult& result, OutputFormat format,
                         std::string_view formulation = {});
std::string write_verdict(const ParityVerdict& verdict, OutputFormat format);
std::string write_sweep(const SweepTable& table, OutputFormat format);
std::string write_ranges(const std::vector<TechnologyRange>& ranges, OutputFormat format);

// JSON readers for the documents above (used for round-trip checks and by
// downstream tooling).
LcoeResult lcoe_result_from_json(const std::string& text);
SweepTable sweep_table_from_json(const std::string& text);
std::vector<TechnologyRange> technology_ranges_from_json(const std::string& text);

}  // namespace lcoe
