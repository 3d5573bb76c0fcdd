#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace pdcbell {

/// FNV-1a 64-bit hash of a file's bytes, as "fnv1a64:..." hex.
std::string file_checksum(const std::filesystem::path& path);

/// Every CLI invocation records what it ran and what it produced. The
/// manifest sits next to the outputs as <command>-manifest.json; the
/// timestamp is the only field that varies between identical runs.
class RunManifest {
 public:
  RunManifest(std::string command, nlohmann::json config, std::uint64_t seed,
              std::string engine);

  /// Register a produced file (checksummed at write_to time).
  void add_output(const std::filesystem::path& path);

  /// Write <command>-manifest.json into `dir` and return its path.
  std::filesystem::path write_to(const std::filesystem::path& dir) const;

  nlohmann::json to_json() const;

 private:
  std::string command_;
  nlohmann::json config_;
  std::uint64_t seed_;
  std::string engine_;
  std::vector<std::filesystem::path> outputs_;
};

}  // namespace pdcbell
