#include "lcoe/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace lcoe {

namespace {

std::string trim(std::string_view text) {
    const std::size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const std::size_t end = text.find_last_not_of(" \t\r");
    return std::string(text.substr(begin, end - begin + 1));
}

struct RawEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct RawSection {
    std::string name;
    int line = 0;
    std::vector<RawEntry> entries;
};

struct RawDoc {
    std::string source;
    std::vector<RawSection> sections;
};

const std::vector<std::string> kKnownSections = {"generation", "storage", "price",
                                                 "schedule",   "sweep",   "technology"};

// Keys accepted per section; used for unknown-key rejection and for routing
// bare `--set key=value` overrides to their owning section.
const std::map<std::string, std::vector<std::string>> kSectionKeys = {
    {"generation",
     {"investment_cost", "fixed_om_per_year", "variable_om_per_mwh", "fuel_cost_per_mwh",
      "annual_energy", "lifetime_years", "discount_rate"}},
    {"storage",
     {"annualized_power_cost", "annualized_energy_cost", "rated_power", "rated_energy",
      "roundtrip_efficiency", "charging_hours"}},
    {"price", {"price", "price_csv", "days_per_year"}},
    {"schedule", {"schedule_csv"}},
    {"sweep", {"parameter", "start", "stop", "steps"}},
    {"technology",
     {"name", "annualized_power_cost_min", "annualized_power_cost_max",
      "annualized_energy_cost_min", "annualized_energy_cost_max", "roundtrip_efficiency_min",
      "roundtrip_efficiency_max", "charging_hours_min", "charging_hours_max", "price",
      "days_per_year"}},
};

bool section_has_key(const std::string& section, const std::string& key) {
    const auto it = kSectionKeys.find(section);
    return it != kSectionKeys.end() &&
           std::find(it->second.begin(), it->second.end(), key) != it->second.end();
}

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& message) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + message);
}

RawDoc parse_raw(std::string_view text, const std::string& source) {
    RawDoc doc;
    doc.source = source;
    std::size_t pos = 0;
    int line_number = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw_line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_number;

        const std::size_t hash = raw_line.find('#');
        if (hash != std::string_view::npos) raw_line = raw_line.substr(0, hash);
        const std::string line = trim(raw_line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                parse_fail(source, line_number, "malformed section header '" + line + "'");
            }
            RawSection section;
            section.name = trim(std::string_view(line).substr(1, line.size() - 2));
            section.line = line_number;
            if (std::find(kKnownSections.begin(), kKnownSections.end(), section.name) ==
                kKnownSections.end()) {
                parse_fail(source, line_number, "unknown section [" + section.name + "]");
            }
            if (section.name != "technology") {
                for (const RawSection& existing : doc.sections) {
                    if (existing.name == section.name) {
                        parse_fail(source, line_number,
                                   "duplicate section [" + section.name + "] (first at line " +
                                       std::to_string(existing.line) + ")");
                    }
                }
            }
            doc.sections.push_back(std::move(section));
            continue;
        }

        const std::size_t equals = line.find('=');
        if (equals == std::string::npos) {
            parse_fail(source, line_number, "expected 'key = value', got '" + line + "'");
        }
        RawEntry entry;
        entry.key = trim(std::string_view(line).substr(0, equals));
        entry.value = trim(std::string_view(line).substr(equals + 1));
        entry.line = line_number;
        if (entry.key.empty()) {
            parse_fail(source, line_number, "missing key before '='");
        }
        if (doc.sections.empty()) {
            parse_fail(source, line_number,
                       "key '" + entry.key + "' appears before any [section]");
        }
        RawSection& section = doc.sections.back();
        if (!section_has_key(section.name, entry.key)) {
            parse_fail(source, line_number,
                       "unknown key '" + entry.key + "' in [" + section.name + "]");
        }
        for (const RawEntry& existing : section.entries) {
            if (existing.key == entry.key) {
                parse_fail(source, line_number,
                           "duplicate key '" + entry.key + "' in [" + section.name +
                               "] (first at line " + std::to_string(existing.line) + ")");
            }
        }
        section.entries.push_back(std::move(entry));
    }
    return doc;
}

// Routes a bare override key to the unique section that accepts it. Repeated
// [technology] sections cannot be targeted.
std::string owning_section(const std::string& key, const std::string& override_text) {
    std::vector<std::string> owners;
    for (const auto& [section, keys] : kSectionKeys) {
        if (section == "technology") continue;
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) owners.push_back(section);
    }
    if (owners.empty()) {
        throw ParseError("override '" + override_text + "': unknown key '" + key + "'");
    }
    if (owners.size() > 1) {
        throw ParseError("override '" + override_text + "': key '" + key +
                         "' is ambiguous; qualify it as section.key");
    }
    return owners.front();
}

void apply_override(RawDoc& doc, const std::string& override_text) {
    const std::size_t equals = override_text.find('=');
    if (equals == std::string::npos || equals == 0) {
        throw ParseError("override '" + override_text + "' must look like key=value");
    }
    std::string key = trim(std::string_view(override_text).substr(0, equals));
    const std::string value = trim(std::string_view(override_text).substr(equals + 1));

    std::string section_name;
    const std::size_t dot = key.find('.');
    if (dot != std::string::npos) {
        section_name = key.substr(0, dot);
        key = key.substr(dot + 1);
        if (section_name == "technology") {
            throw ParseError("override '" + override_text +
                             "': [technology] sections cannot be overridden");
        }
        if (std::find(kKnownSections.begin(), kKnownSections.end(), section_name) ==
            kKnownSections.end()) {
            throw ParseError("override '" + override_text + "': unknown section '" +
                             section_name + "'");
        }
        if (!section_has_key(section_name, key)) {
            throw ParseError("override '" + override_text + "': unknown key '" + key +
                             "' in [" + section_name + "]");
        }
    } else {
        section_name = owning_section(key, override_text);
    }

    RawSection* section = nullptr;
    for (RawSection& candidate : doc.sections) {
        if (candidate.name == section_name) {
            section = &candidate;
            break;
        }
    }
    if (section == nullptr) {
        doc.sections.push_back(RawSection{section_name, 0, {}});
        section = &doc.sections.back();
    }
    for (RawEntry& entry : section->entries) {
        if (entry.key == key) {
            entry.value = value;
            return;
        }
    }
    section->entries.push_back(RawEntry{key, value, 0});
}

class SectionReader {
public:
    SectionReader(const RawDoc& doc, const RawSection& section)
        : doc_(doc), section_(section) {}

    const std::string* find(const std::string& key) const {
        for (const RawEntry& entry : section_.entries) {
            if (entry.key == key) return &entry.value;
        }
        return nullptr;
    }

    std::string require(const std::string& key) const {
        const std::string* value = find(key);
        if (value == nullptr) {
            throw ParseError(doc_.source + ": [" + section_.name + "] is missing required key '" +
                             key + "'");
        }
        return *value;
    }

    double number(const std::string& key) const {
        return parse_decimal(require(key), context(key));
    }

    double number_or(const std::string& key, double fallback) const {
        const std::string* value = find(key);
        return value == nullptr ? fallback : parse_decimal(*value, context(key));
    }

    long integer(const std::string& key) const {
        return parse_integer(require(key), context(key));
    }

    std::string context(const std::string& key) const {
        return doc_.source + ": [" + section_.name + "] " + key;
    }

private:
    const RawDoc& doc_;
    const RawSection& section_;
};

std::vector<double> parse_number_list(const std::string& text, const std::string& context) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? text.size() - pos : comma - pos);
        values.push_back(parse_decimal(item, context));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

GenerationAsset build_generation(const SectionReader& reader) {
    GenerationAsset asset;
    asset.investment_cost = reader.number("investment_cost");
    asset.fixed_om_per_year = reader.number_or("fixed_om_per_year", 0.0);
    asset.variable_om_per_mwh = reader.number_or("variable_om_per_mwh", 0.0);
    asset.fuel_cost_per_mwh = reader.number_or("fuel_cost_per_mwh", 0.0);
    asset.annual_energy =
        parse_number_list(reader.require("annual_energy"), reader.context("annual_energy"));
    asset.lifetime_years = static_cast<int>(reader.integer("lifetime_years"));
    asset.discount_rate = reader.number("discount_rate");
    return asset;
}

StorageAsset build_storage(const SectionReader& reader) {
    StorageAsset asset;
    asset.annualized_power_cost = reader.number("annualized_power_cost");
    asset.annualized_energy_cost = reader.number("annualized_energy_cost");
    asset.rated_power = reader.number("rated_power");
    asset.rated_energy = reader.number("rated_energy");
    asset.roundtrip_efficiency = reader.number("roundtrip_efficiency");
    asset.charging_hours = reader.number("charging_hours");
    return asset;
}

TechnologySpec build_technology(const SectionReader& reader, double default_price,
                                int default_days) {
    TechnologySpec spec;
    spec.name = reader.require("name");
    spec.power_cost = {reader.number("annualized_power_cost_min"),
                       reader.number("annualized_power_cost_max")};
    spec.energy_cost = {reader.number("annualized_energy_cost_min"),
                        reader.number("annualized_energy_cost_max")};
    spec.efficiency = {reader.number("roundtrip_efficiency_min"),
                       reader.number("roundtrip_efficiency_max")};
    spec.charging_hours = {reader.number("charging_hours_min"),
                           reader.number("charging_hours_max")};
    spec.price = reader.number_or("price", default_price);
    const std::string* days = reader.find("days_per_year");
    spec.days = days == nullptr
                    ? default_days
                    : static_cast<int>(parse_integer(*days, reader.context("days_per_year")));
    return spec;
}

[[noreturn]] void shape_fail(const std::string& message) {
    throw ValidationError(ValidationCode::scenario_shape_invalid, "scenario", message);
}

Scenario build_scenario(const RawDoc& doc, const std::filesystem::path& base_dir) {
    Scenario scenario;
    const RawSection* price_section = nullptr;
    const RawSection* schedule_section = nullptr;
    const RawSection* sweep_section = nullptr;
    std::vector<const RawSection*> technology_sections;

    for (const RawSection& section : doc.sections) {
        const SectionReader reader(doc, section);
        if (section.name == "generation") {
            scenario.generation = build_generation(reader);
        } else if (section.name == "storage") {
            scenario.storage = build_storage(reader);
        } else if (section.name == "price") {
            price_section = &section;
        } else if (section.name == "schedule") {
            schedule_section = &section;
        } else if (section.name == "sweep") {
            sweep_section = &section;
        } else if (section.name == "technology") {
            technology_sections.push_back(&section);
        }
    }

    if (scenario.generation.has_value() && scenario.storage.has_value()) {
        shape_fail("scenario must contain exactly one of [generation] or [storage], not both");
    }
    if (!scenario.generation.has_value() && !scenario.storage.has_value()) {
        shape_fail("scenario must contain a [generation] or [storage] section");
    }
    if (scenario.generation.has_value() &&
        (price_section || schedule_section || sweep_section || !technology_sections.empty())) {
        shape_fail("[price], [schedule], [sweep], and [technology] require a [storage] scenario");
    }

    if (scenario.generation.has_value()) {
        validate(*scenario.generation);
        return scenario;
    }
    validate(*scenario.storage);

    if (price_section != nullptr) {
        const SectionReader reader(doc, *price_section);
        const std::string* scalar = reader.find("price");
        const std::string* csv_ref = reader.find("price_csv");
        const std::string* days = reader.find("days_per_year");
        if (days != nullptr) {
            scenario.days_per_year =
                static_cast<int>(parse_integer(*days, reader.context("days_per_year")));
        }
        if (scalar != nullptr && csv_ref != nullptr) {
            throw ParseError(doc.source +
                             ": [price] must set either 'price' or 'price_csv', not both");
        }
        if (scalar != nullptr) {
            scenario.price_source = PriceSource::scalar;
            scenario.scalar_price = parse_decimal(*scalar, reader.context("price"));
            // A scalar price expands to a flat series over the year.
            PriceSeries series;
            series.days_per_year = scenario.days_per_year;
            series.daily_price.assign(static_cast<std::size_t>(scenario.days_per_year),
                                      scenario.scalar_price);
            scenario.prices = std::move(series);
        } else if (csv_ref != nullptr) {
            scenario.price_source = PriceSource::series;
            scenario.price_csv_ref = *csv_ref;
            scenario.prices = load_price_csv(base_dir / *csv_ref, scenario.days_per_year);
        } else {
            throw ParseError(doc.source + ": [price] is missing required key 'price' (or "
                                          "'price_csv')");
        }
        validate(*scenario.prices);
    }

    if (schedule_section != nullptr) {
        if (scenario.price_source == PriceSource::none) {
            shape_fail("[schedule] requires a [price] section");
        }
        const SectionReader reader(doc, *schedule_section);
        scenario.schedule_csv_ref = reader.require("schedule_csv");
        scenario.schedule = load_schedule_csv(base_dir / scenario.schedule_csv_ref);
        validate(*scenario.schedule, *scenario.storage, scenario.prices->daily_price.size());
    }

    if (sweep_section != nullptr) {
        const SectionReader reader(doc, *sweep_section);
        SweepRequest request;
        request.parameter = sweep_parameter_from_string(reader.require("parameter"));
        request.start = reader.number("start");
        request.stop = reader.number("stop");
        request.steps = static_cast<int>(reader.integer("steps"));
        scenario.sweep = request;

        SweepSpec spec;
        spec.parameter = request.parameter;
        spec.start = request.start;
        spec.stop = request.stop;
        spec.steps = request.steps;
        spec.base_asset = *scenario.storage;
        spec.base_price = scenario.price_source == PriceSource::none ? 0.0 : mean_price(scenario);
        spec.days = scenario.days_per_year;
        validate(spec);
    }

    for (const RawSection* section : technology_sections) {
        const SectionReader reader(doc, *section);
        const double default_price =
            scenario.price_source == PriceSource::none ? 0.0 : mean_price(scenario);
        TechnologySpec spec = build_technology(reader, default_price, scenario.days_per_year);
        validate(spec);
        scenario.technologies.push_back(std::move(spec));
    }

    return scenario;
}

}  // namespace

double mean_price(const Scenario& scenario) {
    if (scenario.price_source == PriceSource::scalar) {
        return scenario.scalar_price;
    }
    if (!scenario.prices.has_value() || scenario.prices->daily_price.empty()) {
        throw ValidationError(ValidationCode::scenario_shape_invalid, "price",
                              "scenario has no price to average");
    }
    double total = 0.0;
    for (double price : scenario.prices->daily_price) total += price;
    return total / static_cast<double>(scenario.prices->daily_price.size());
}

Scenario parse_scenario(std::string_view text, const std::filesystem::path& base_dir,
                        const std::string& source_name,
                        const std::vector<std::string>& overrides) {
    RawDoc doc = parse_raw(text, source_name);
    for (const std::string& override_text : overrides) {
        apply_override(doc, override_text);
    }
    return build_scenario(doc, base_dir);
}

Scenario load_scenario(const std::filesystem::path& path,
                       const std::vector<std::string>& overrides) {
    std::ifstream stream(path);
    if (!stream) {
        throw ParseError("cannot open scenario file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_scenario(buffer.str(), path.parent_path(), path.string(), overrides);
}

std::string scenario_to_string(const Scenario& scenario) {
    std::string out;
    if (scenario.generation.has_value()) {
        const GenerationAsset& asset = *scenario.generation;
        out += "[generation]\n";
        out += "investment_cost = " + format_full(asset.investment_cost) + "\n";
        out += "fixed_om_per_year = " + format_full(asset.fixed_om_per_year) + "\n";
        out += "variable_om_per_mwh = " + format_full(asset.variable_om_per_mwh) + "\n";
        out += "fuel_cost_per_mwh = " + format_full(asset.fuel_cost_per_mwh) + "\n";
        out += "annual_energy = ";
        for (std::size_t i = 0; i < asset.annual_energy.size(); ++i) {
            if (i > 0) out += ", ";
            out += format_full(asset.annual_energy[i]);
        }
        out += "\n";
        out += "lifetime_years = " + std::to_string(asset.lifetime_years) + "\n";
        out += "discount_rate = " + format_full(asset.discount_rate) + "\n";
        return out;
    }
    if (scenario.storage.has_value()) {
        const StorageAsset& asset = *scenario.storage;
        out += "[storage]\n";
        out += "annualized_power_cost = " + format_full(asset.annualized_power_cost) + "\n";
        out += "annualized_energy_cost = " + format_full(asset.annualized_energy_cost) + "\n";
        out += "rated_power = " + format_full(asset.rated_power) + "\n";
        out += "rated_energy = " + format_full(asset.rated_energy) + "\n";
        out += "roundtrip_efficiency = " + format_full(asset.roundtrip_efficiency) + "\n";
        out += "charging_hours = " + format_full(asset.charging_hours) + "\n";
    }
    if (scenario.price_source != PriceSource::none) {
        out += "\n[price]\n";
        if (scenario.price_source == PriceSource::scalar) {
            out += "price = " + format_full(scenario.scalar_price) + "\n";
        } else {
            out += "price_csv = " + scenario.price_csv_ref + "\n";
        }
        out += "days_per_year = " + std::to_string(scenario.days_per_year) + "\n";
    }
    if (scenario.schedule.has_value()) {
        out += "\n[schedule]\n";
        out += "schedule_csv = " + scenario.schedule_csv_ref + "\n";
    }
    if (scenario.sweep.has_value()) {
        out += "\n[sweep]\n";
        out += "parameter = " + std::string(to_string(scenario.sweep->parameter)) + "\n";
        out += "start = " + format_full(scenario.sweep->start) + "\n";
        out += "stop = " + format_full(scenario.sweep->stop) + "\n";
        out += "steps = " + std::to_string(scenario.sweep->steps) + "\n";
    }
    for (const TechnologySpec& spec : scenario.technologies) {
        out += "\n[technology]\n";
        out += "name = " + spec.name + "\n";
        out += "annualized_power_cost_min = " + format_full(spec.power_cost.min) + "\n";
        out += "annualized_power_cost_max = " + format_full(spec.power_cost.max) + "\n";
        out += "annualized_energy_cost_min = " + format_full(spec.energy_cost.min) + "\n";
        out += "annualized_energy_cost_max = " + format_full(spec.energy_cost.max) + "\n";
        out += "roundtrip_efficiency_min = " + format_full(spec.efficiency.min) + "\n";
        out += "roundtrip_efficiency_max = " + format_full(spec.efficiency.max) + "\n";
        out += "charging_hours_min = " + format_full(spec.charging_hours.min) + "\n";
        out += "charging_hours_max = " + format_full(spec.charging_hours.max) + "\n";
        out += "price = " + format_full(spec.price) + "\n";
        out += "days_per_year = " + std::to_string(spec.days) + "\n";
    }
    return out;
}

PriceSeries parse_price_csv(std::string_view text, int days_per_year,
                            const std::string& source_name) {
    PriceSeries series;
    series.days_per_year = days_per_year;

    std::size_t pos = 0;
    int line_number = 0;
    bool header_seen = false;
    long expected_day = 1;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw_line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_number;
        const std::string line = trim(raw_line);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != "day,price_usd_per_mwh") {
                parse_fail(source_name, line_number,
                           "expected header 'day,price_usd_per_mwh', got '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            parse_fail(source_name, line_number, "expected 'day,price', got '" + line + "'");
        }
        const std::string context = source_name + ":" + std::to_string(line_number);
        const long day = parse_integer(line.substr(0, comma), context);
        if (day != expected_day) {
            parse_fail(source_name, line_number,
                       "day indices must be 1-based and contiguous; expected " +
                           std::to_string(expected_day) + ", got " + std::to_string(day));
        }
        ++expected_day;
        series.daily_price.push_back(parse_decimal(line.substr(comma + 1), context));
    }
    if (!header_seen) {
        throw ParseError(source_name + ": empty price CSV (missing header)");
    }
    validate(series);
    return series;
}

PriceSeries load_price_csv(const std::filesystem::path& path, int days_per_year) {
    std::ifstream stream(path);
    if (!stream) {
        throw ParseError("cannot open price CSV '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_price_csv(buffer.str(), days_per_year, path.string());
}

std::string price_csv_to_string(const PriceSeries& prices) {
    std::string out = "day,price_usd_per_mwh\n";
    for (std::size_t i = 0; i < prices.daily_price.size(); ++i) {
        out += std::to_string(i + 1) + "," + format_full(prices.daily_price[i]) + "\n";
    }
    return out;
}

DispatchSchedule parse_schedule_csv(std::string_view text, const std::string& source_name) {
    DispatchSchedule schedule;
    std::size_t pos = 0;
    int line_number = 0;
    bool header_seen = false;
    long expected_day = 1;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw_line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_number;
        const std::string line = trim(raw_line);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != "day,charge_mwh,discharge_mwh") {
                parse_fail(source_name, line_number,
                           "expected header 'day,charge_mwh,discharge_mwh', got '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        const std::size_t first = line.find(',');
        const std::size_t second = first == std::string::npos ? std::string::npos
                                                              : line.find(',', first + 1);
        if (first == std::string::npos || second == std::string::npos) {
            parse_fail(source_name, line_number,
                       "expected 'day,charge,discharge', got '" + line + "'");
        }
        const std::string context = source_name + ":" + std::to_string(line_number);
        const long day = parse_integer(line.substr(0, first), context);
        if (day != expected_day) {
            parse_fail(source_name, line_number,
                       "day indices must be 1-based and contiguous; expected " +
                           std::to_string(expected_day) + ", got " + std::to_string(day));
        }
        ++expected_day;
        schedule.daily_charge.push_back(
            parse_decimal(line.substr(first + 1, second - first - 1), context));
        schedule.daily_discharge.push_back(parse_decimal(line.substr(second + 1), context));
    }
    if (!header_seen) {
        throw ParseError(source_name + ": empty schedule CSV (missing header)");
    }
    return schedule;
}

DispatchSchedule load_schedule_csv(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw ParseError("cannot open schedule CSV '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_schedule_csv(buffer.str(), path.string());
}

std::string schedule_csv_to_string(const DispatchSchedule& schedule) {
    std::string out = "day,charge_mwh,discharge_mwh\n";
    for (std::size_t i = 0; i < schedule.daily_charge.size(); ++i) {
        out += std::to_string(i + 1) + "," + format_full(schedule.daily_charge[i]) + "," +
               format_full(schedule.daily_discharge[i]) + "\n";
    }
    return out;
}

}  // namespace lcoe
