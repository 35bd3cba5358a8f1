#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meancx/complexity.hpp"

namespace meancx::cli {

/// Parameters shared by every subcommand. Fields a command does not use are ignored.
struct RunConfig {
  std::string system = "rotation";
  std::string family;  // empty selects the group default
  std::vector<double> epsilons{0.1};
  std::vector<int> ns{8, 16, 32, 64, 128, 256};
  std::size_t sample_size = 2000;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format = "json";
  double theta = 1.25;
  std::size_t stability = 2;
  int truncation = 0;  // 0 keeps the system default
  std::size_t budget = 50;
  int n_max = 256;
  std::string mode = "both";  // equicont: limsup, in-mean or both
  std::string ground_truth;   // empty keeps the built-in label
  std::string group = "Z";    // tempered
  int index = 10;             // tempered
  unsigned threads = 0;       // 0 uses all cores

  bool operator==(const RunConfig&) const = default;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;
  VerdictRule rule() const;
  /// System address with the truncation radius applied.
  std::string address() const;
};

nlohmann::json to_json(const RunConfig& config);
/// Unknown keys are rejected so typos in config files do not pass silently.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

}  // namespace meancx::cli
