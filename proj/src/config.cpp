#include "hestonlab/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "hestonlab/error.hpp"
#include "hestonlab/text.hpp"

namespace hestonlab {
namespace {

constexpr std::array<std::string_view, 14> kRequiredKeys{
    "a", "b", "alpha", "beta", "sigma1", "sigma2", "rho", "y0", "x0", "T", "N", "scheme", "replicates", "seed"};

bool is_known_key(std::string_view key) {
    return key == "outputs" || std::find(kRequiredKeys.begin(), kRequiredKeys.end(), key) != kRequiredKeys.end();
}

[[noreturn]] void parse_error(const std::string& message) { throw HestonError(ErrorCode::ParseError, message); }

const std::string& require(const ConfigValues& values, std::string_view key) {
    const auto it = values.find(std::string(key));
    if (it == values.end()) parse_error("missing key '" + std::string(key) + "'");
    return it->second;
}

double require_double(const ConfigValues& values, std::string_view key) {
    const auto v = parse_double(require(values, key));
    if (!v) parse_error("key '" + std::string(key) + "': not a number");
    return *v;
}

std::uint64_t require_unsigned(const ConfigValues& values, std::string_view key) {
    const std::string_view text = trim(require(values, key));
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        parse_error("key '" + std::string(key) + "': not a nonnegative integer");
    }
    return out;
}

OutputSelection parse_outputs(std::string_view text) {
    OutputSelection sel{false, false, false, false};
    for (auto part : split(text, ',')) {
        part = trim(part);
        if (part == "all") {
            sel = OutputSelection{};
        } else if (part == "json") {
            sel.json = true;
        } else if (part == "tables") {
            sel.tables = true;
        } else if (part == "figures") {
            sel.figures = true;
        } else if (part == "replicates") {
            sel.replicates = true;
        } else {
            parse_error("key 'outputs': unknown block '" + std::string(part) + "'");
        }
    }
    return sel;
}

std::string format_outputs(const OutputSelection& sel) {
    if (sel == OutputSelection{}) return "all";
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ',';
        out += name;
    };
    add(sel.json, "json");
    add(sel.tables, "tables");
    add(sel.figures, "figures");
    add(sel.replicates, "replicates");
    return out;
}

std::pair<std::string, std::string> split_assignment(std::string_view line, const std::string& where) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(where + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) parse_error(where + ": empty key");
    if (!is_known_key(key)) parse_error(where + ": unknown key '" + key + "'");
    if (value.empty()) parse_error(where + ": key '" + key + "' has no value");
    return {key, value};
}

}  // namespace

ConfigValues read_config_values(std::istream& in) {
    ConfigValues values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        auto [key, value] = split_assignment(view, where);
        if (values.contains(key)) parse_error(where + ": key '" + key + "' repeated");
        values.emplace(std::move(key), std::move(value));
    }
    return values;
}

void apply_overrides(ConfigValues& values, std::span<const std::string> overrides) {
    for (const auto& item : overrides) {
        auto [key, value] = split_assignment(item, "override '" + item + "'");
        values[key] = value;
    }
}

ExperimentConfig build_config(const ConfigValues& values) {
    ParamSet raw;
    raw.a = require_double(values, "a");
    raw.b = require_double(values, "b");
    raw.alpha = require_double(values, "alpha");
    raw.beta = require_double(values, "beta");
    raw.sigma1 = require_double(values, "sigma1");
    raw.sigma2 = require_double(values, "sigma2");
    raw.rho = require_double(values, "rho");
    raw.y0 = require_double(values, "y0");
    raw.x0 = require_double(values, "x0");
    const double horizon = require_double(values, "T");
    const std::uint64_t steps = require_unsigned(values, "N");
    const auto scheme = parse_scheme(trim(require(values, "scheme")));
    if (!scheme) parse_error("key 'scheme': expected one of AVE, TE, SE, DESRE, DISRE");
    const std::uint64_t replicates = require_unsigned(values, "replicates");
    const std::uint64_t seed = require_unsigned(values, "seed");
    OutputSelection outputs;
    if (const auto it = values.find("outputs"); it != values.end()) outputs = parse_outputs(it->second);

    try {
        return ExperimentConfig::create(raw, horizon, steps, *scheme, replicates, seed, outputs);
    } catch (const HestonError& e) {
        throw HestonError(ErrorCode::ValidationError, e.what());
    }
}

ExperimentConfig parse_config(const std::filesystem::path& file, std::span<const std::string> overrides) {
    std::ifstream in(file);
    if (!in) throw HestonError(ErrorCode::IoError, "cannot open config " + file.string());
    ConfigValues values = read_config_values(in);
    apply_overrides(values, overrides);
    return build_config(values);
}

ConfigValues config_values(const ExperimentConfig& config) {
    const ParamSet& p = config.params.raw();
    return ConfigValues{
        {"a", format_double(p.a)},
        {"b", format_double(p.b)},
        {"alpha", format_double(p.alpha)},
        {"beta", format_double(p.beta)},
        {"sigma1", format_double(p.sigma1)},
        {"sigma2", format_double(p.sigma2)},
        {"rho", format_double(p.rho)},
        {"y0", format_double(p.y0)},
        {"x0", format_double(p.x0)},
        {"T", format_double(config.grid.horizon())},
        {"N", std::to_string(config.grid.steps())},
        {"scheme", std::string(to_string(config.scheme))},
        {"replicates", std::to_string(config.replicates)},
        {"seed", std::to_string(config.master_seed)},
        {"outputs", format_outputs(config.outputs)},
    };
}

std::string format_config(const ExperimentConfig& config) {
    const ConfigValues values = config_values(config);
    std::ostringstream out;
    for (std::string_view key : kRequiredKeys) out << key << " = " << values.at(std::string(key)) << '\n';
    out << "outputs = " << values.at("outputs") << '\n';
    return out.str();
}

}  // namespace hestonlab
