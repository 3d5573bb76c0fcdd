#include "pdcbell/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace pdcbell {

using nlohmann::json;

json config_to_json(const CircuitConfig& config) {
  return json{{"alice_pump", std::string(pump_name(config.alice_pump))},
              {"bob_pump", std::string(pump_name(config.bob_pump))},
              {"alpha", config.alpha},
              {"beta", config.beta},
              {"g", config.g},
              {"order", config.order},
              {"corrected", config.corrected}};
}

CircuitConfig config_from_json(const json& j) {
  CircuitConfig cfg;
  try {
    if (j.contains("alice_pump")) {
      cfg.alice_pump = parse_pump(j.at("alice_pump").get<std::string>());
    }
    if (j.contains("bob_pump")) {
      cfg.bob_pump = parse_pump(j.at("bob_pump").get<std::string>());
    }
    cfg.alpha = j.value("alpha", cfg.alpha);
    cfg.beta = j.value("beta", cfg.beta);
    cfg.g = j.value("g", cfg.g);
    cfg.order = j.value("order", cfg.order);
    cfg.corrected = j.value("corrected", cfg.corrected);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

CircuitConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return config_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    // e.byte points at the offending position; convert it to line:column.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::runtime_error(path + ":" + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + e.what());
  }
}

json ket_series_to_json(const KetSeries& state) {
  json terms = json::object();
  for (const auto& [occ, poly] : state.terms()) {
    json coeffs = json::array();
    for (int k = 0; k <= poly.max_order(); ++k) {
      coeffs.push_back({poly.coeff(k).real(), poly.coeff(k).imag()});
    }
    terms[occ.str()] = std::move(coeffs);
  }
  return json{{"max_order", state.max_order()}, {"terms", std::move(terms)}};
}

}  // namespace pdcbell
