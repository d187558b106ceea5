#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "hestonlab/experiment.hpp"

namespace hestonlab {

// Flat key-value experiment file:
//
//   # comment
//   a = 0.4
//   scheme = DISRE
//
// Required keys: a b alpha beta sigma1 sigma2 rho y0 x0 T N scheme replicates seed.
// Optional: outputs = comma list of json, tables, figures, replicates (or all).
using ConfigValues = std::map<std::string, std::string>;

// Throws ParseError naming the line for malformed lines, unknown or
// repeated keys.
ConfigValues read_config_values(std::istream& in);

// Each override is "key=value" and replaces the file value.
void apply_overrides(ConfigValues& values, std::span<const std::string> overrides);

// Throws ParseError naming a missing or malformed key, ValidationError when
// the values parse but violate a model, grid or scheme constraint.
ExperimentConfig build_config(const ConfigValues& values);

ExperimentConfig parse_config(const std::filesystem::path& file, std::span<const std::string> overrides = {});

ConfigValues config_values(const ExperimentConfig& config);

// Text that read_config_values + build_config map back to `config`.
std::string format_config(const ExperimentConfig& config);

}  // namespace hestonlab
