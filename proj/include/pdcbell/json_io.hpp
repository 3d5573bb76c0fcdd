#pragma once

#include <string>

#include <json.hpp>

#include "pdcbell/ket_series.hpp"
#include "pdcbell/perturbation.hpp"

namespace pdcbell {

nlohmann::json config_to_json(const CircuitConfig& config);
CircuitConfig config_from_json(const nlohmann::json& j);

/// Parse a configuration file; parse errors are rethrown with the file name
/// and the line/column of the offending byte.
CircuitConfig load_config_file(const std::string& path);

/// {"max_order": n, "terms": {"1010": [[re,im], ...per power of g]}}
nlohmann::json ket_series_to_json(const KetSeries& state);

}  // namespace pdcbell
