#include "lcoe/report.hpp"

#include <json.hpp>

namespace lcoe {

namespace {

using ordered_json = nlohmann::ordered_json;

// CSV/plot header label with units for a sweep parameter.
std::string parameter_header(std::string_view parameter_name) {
    if (parameter_name == "charging_hours") return "charging_hours_h";
    if (parameter_name == "price") return "price_usd_per_mwh";
    return std::string(parameter_name);  // efficiency and cost ratio are dimensionless
}

[[noreturn]] void unsupported_plot(const std::string& what) {
    throw ParseError("plot-data format supports sweep tables only, not " + what);
}

std::string dump(const ordered_json& value) { return value.dump(2) + "\n"; }

}  // namespace

std::string_view to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return "text";
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
        case OutputFormat::plot_data: return "plot";
    }
    return "unknown";
}

OutputFormat output_format_from_string(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "plot" || name == "plot-data") return OutputFormat::plot_data;
    throw ParseError("unknown output format '" + std::string(name) +
                     "' (expected text, csv, json, or plot)");
}

std::string write_result(const LcoeResult& result, OutputFormat format,
                         std::string_view formulation) {
    validate(result);
    switch (format) {
        case OutputFormat::text: {
            std::string out;
            if (!formulation.empty()) out += "formulation: " + std::string(formulation) + "\n";
            out += "lcoe_usd_per_mwh: " + format_money(result.lcoe_usd_per_mwh) + "\n";
            out += "capital_cost_usd: " + format_money(result.capital_cost_usd) + "\n";
            out += "operating_cost_usd: " + format_money(result.operating_cost_usd) + "\n";
            out += "total_energy_mwh: " + format_sig6(result.total_energy_mwh) + "\n";
            return out;
        }
        case OutputFormat::csv: {
            std::string out = "metric,value\n";
            if (!formulation.empty()) out += "formulation," + std::string(formulation) + "\n";
            out += "lcoe_usd_per_mwh," + format_money(result.lcoe_usd_per_mwh) + "\n";
            out += "capital_cost_usd," + format_money(result.capital_cost_usd) + "\n";
            out += "operating_cost_usd," + format_money(result.operating_cost_usd) + "\n";
            out += "total_energy_mwh," + format_sig6(result.total_energy_mwh) + "\n";
            return out;
        }
        case OutputFormat::json: {
            ordered_json out;
            if (!formulation.empty()) out["formulation"] = std::string(formulation);
            out["lcoe_usd_per_mwh"] = result.lcoe_usd_per_mwh;
            out["capital_cost_usd"] = result.capital_cost_usd;
            out["operating_cost_usd"] = result.operating_cost_usd;
            out["total_energy_mwh"] = result.total_energy_mwh;
            return dump(out);
        }
        case OutputFormat::plot_data: unsupported_plot("a single result");
    }
    return {};
}

std::string write_verdict(const ParityVerdict& verdict, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: {
            return "lcoe=" + format_money(verdict.lcoe) +
                   " rate=" + format_money(verdict.reference_rate) +
                   " at_parity=" + (verdict.at_parity ? "true" : "false") +
                   " margin=" + format_money(verdict.margin) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "metric,value\n";
            out += "lcoe_usd_per_mwh," + format_money(verdict.lcoe) + "\n";
            out += "reference_rate_usd_per_mwh," + format_money(verdict.reference_rate) + "\n";
            out += std::string("at_parity,") + (verdict.at_parity ? "true" : "false") + "\n";
            out += "margin_usd_per_mwh," + format_money(verdict.margin) + "\n";
            return out;
        }
        case OutputFormat::json: {
            ordered_json out;
            out["lcoe_usd_per_mwh"] = verdict.lcoe;
            out["reference_rate_usd_per_mwh"] = verdict.reference_rate;
            out["at_parity"] = verdict.at_parity;
            out["margin_usd_per_mwh"] = verdict.margin;
            return dump(out);
        }
        case OutputFormat::plot_data: unsupported_plot("a parity verdict");
    }
    return {};
}

std::string write_sweep(const SweepTable& table, OutputFormat format) {
    validate(table);
    switch (format) {
        case OutputFormat::text:
        case OutputFormat::csv: {
            std::string out = parameter_header(table.parameter_name) + ",lcoe_usd_per_mwh\n";
            for (const SweepPoint& point : table.points) {
                out += format_sig6(point.parameter_value) + "," +
                       format_money(point.lcoe_usd_per_mwh) + "\n";
            }
            return out;
        }
        case OutputFormat::json: {
            ordered_json out;
            out["parameter_name"] = table.parameter_name;
            ordered_json points = ordered_json::array();
            for (const SweepPoint& point : table.points) {
                ordered_json entry;
                entry["parameter_value"] = point.parameter_value;
                entry["lcoe_usd_per_mwh"] = point.lcoe_usd_per_mwh;
                points.push_back(std::move(entry));
            }
            out["points"] = std::move(points);
            return dump(out);
        }
        case OutputFormat::plot_data: {
            std::string out;
            for (const SweepPoint& point : table.points) {
                out += format_sig6(point.parameter_value) + " " +
                       format_money(point.lcoe_usd_per_mwh) + "\n";
            }
            return out;
        }
    }
    return {};
}

std::string write_ranges(const std::vector<TechnologyRange>& ranges, OutputFormat format) {
    for (const TechnologyRange& range : ranges) validate(range);
    switch (format) {
        case OutputFormat::text:
        case OutputFormat::csv: {
            std::string out =
                "technology,min_lcoe_usd_per_mwh,avg_lcoe_usd_per_mwh,max_lcoe_usd_per_mwh\n";
            for (const TechnologyRange& range : ranges) {
                out += range.technology_name + "," + format_money(range.min_lcoe) + "," +
                       format_money(range.avg_lcoe) + "," + format_money(range.max_lcoe) + "\n";
            }
            return out;
        }
        case OutputFormat::json: {
            ordered_json out = ordered_json::array();
            for (const TechnologyRange& range : ranges) {
                ordered_json entry;
                entry["technology_name"] = range.technology_name;
                entry["min_lcoe_usd_per_mwh"] = range.min_lcoe;
                entry["avg_lcoe_usd_per_mwh"] = range.avg_lcoe;
                entry["max_lcoe_usd_per_mwh"] = range.max_lcoe;
                out.push_back(std::move(entry));
            }
            return dump(out);
        }
        case OutputFormat::plot_data: unsupported_plot("technology ranges");
    }
    return {};
}

namespace {

ordered_json parse_json(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& error) {
        throw ParseError("invalid " + what + " JSON: " + error.what());
    }
}

}  // namespace

LcoeResult lcoe_result_from_json(const std::string& text) {
    const ordered_json in = parse_json(text, "result");
    try {
        LcoeResult result;
        result.lcoe_usd_per_mwh = in.at("lcoe_usd_per_mwh").get<double>();
        result.capital_cost_usd = in.at("capital_cost_usd").get<double>();
        result.operating_cost_usd = in.at("operating_cost_usd").get<double>();
        result.total_energy_mwh = in.at("total_energy_mwh").get<double>();
        return result;
    } catch (const nlohmann::json::exception& error) {
        throw ParseError(std::string("invalid result JSON: ") + error.what());
    }
}

SweepTable sweep_table_from_json(const std::string& text) {
    const ordered_json in = parse_json(text, "sweep table");
    try {
        SweepTable table;
        table.parameter_name = in.at("parameter_name").get<std::string>();
        for (const auto& entry : in.at("points")) {
            table.points.push_back({entry.at("parameter_value").get<double>(),
                                    entry.at("lcoe_usd_per_mwh").get<double>()});
        }
        return table;
    } catch (const nlohmann::json::exception& error) {
        throw ParseError(std::string("invalid sweep table JSON: ") + error.what());
    }
}

std::vector<TechnologyRange> technology_ranges_from_json(const std::string& text) {
    const ordered_json in = parse_json(text, "technology range");
    try {
        std::vector<TechnologyRange> ranges;
        for (const auto& entry : in) {
            TechnologyRange range;
            range.technology_name = entry.at("technology_name").get<std::string>();
            range.min_lcoe = entry.at("min_lcoe_usd_per_mwh").get<double>();
            range.avg_lcoe = entry.at("avg_lcoe_usd_per_mwh").get<double>();
            range.max_lcoe = entry.at("max_lcoe_usd_per_mwh").get<double>();
            ranges.push_back(std::move(range));
        }
        return ranges;
    } catch (const nlohmann::json::exception& error) {
        throw ParseError(std::string("invalid technology range JSON: ") + error.what());
    }
}

}  // namespace lcoe
