#include "pdcbell/manifest.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "pdcbell/version.hpp"

namespace pdcbell {

std::string file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("checksum: cannot open " + path.string());
  }
  std::uint64_t hash = 0xCBF29CE484222325ull;
  char buf[1 << 14];
  while (in) {
    in.read(buf, sizeof buf);
    for (std::streamsize k = 0; k < in.gcount(); ++k) {
      hash ^= static_cast<unsigned char>(buf[k]);
      hash *= 0x100000001B3ull;
    }
  }
  char out[32];
  std::snprintf(out, sizeof out, "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return out;
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunManifest::RunManifest(std::string command, nlohmann::json config,
                         std::uint64_t seed, std::string engine)
    : command_(std::move(command)),
      config_(std::move(config)),
      seed_(seed),
      engine_(std::move(engine)) {}

void RunManifest::add_output(const std::filesystem::path& path) {
  outputs_.push_back(path);
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& path : outputs_) {
    outputs.push_back({{"path", path.filename().string()},
                       {"checksum", file_checksum(path)}});
  }
  return nlohmann::json{{"command", command_},
                        {"config", config_},
                        {"seed", seed_},
                        {"engine", engine_},
                        {"version", kVersion},
                        {"timestamp", utc_timestamp()},
                        {"outputs", std::move(outputs)}};
}

std::filesystem::path RunManifest::write_to(
    const std::filesystem::path& dir) const {
  const std::filesystem::path path = dir / (command_ + "-manifest.json");
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("manifest: cannot write " + path.string());
  }
  out << to_json().dump(2) << '\n';
  return path;
}

}  // namespace pdcbell
