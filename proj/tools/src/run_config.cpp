#include "run_config.hpp"

#include <fstream>
#include <stdexcept>

namespace meancx::cli {

using nlohmann::json;

void RunConfig::validate() const {
  if (system.empty()) throw std::invalid_argument("system must be set");
  if (epsilons.empty()) throw std::invalid_argument("at least one epsilon is required");
  for (double e : epsilons) {
    if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  if (ns.empty()) throw std::invalid_argument("at least one window index is required");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1 || (i > 0 && ns[i] <= ns[i - 1])) {
      throw std::invalid_argument("window indices must be positive and strictly increasing");
    }
  }
  if (sample_size == 0) throw std::invalid_argument("sample size must be positive");
  if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
  if (stability == 0) throw std::invalid_argument("stability window must be positive");
  if (truncation < 0) throw std::invalid_argument("truncation radius must be positive");
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  if (n_max < 1) throw std::invalid_argument("nMax must be positive");
  if (mode != "limsup" && mode != "in-mean" && mode != "both") {
    throw std::invalid_argument("mode must be limsup, in-mean or both");
  }
  if (index < 2) throw std::invalid_argument("tempered index must be at least 2");
}

VerdictRule RunConfig::rule() const {
  VerdictRule r;
  r.theta = theta;
  r.stability = stability;
  return r;
}

std::string RunConfig::address() const {
  if (truncation == 0) return system;
  std::string_view base = system;
  while (base.starts_with("product:")) base.remove_prefix(8);
  const char sep = base.find(':') == std::string_view::npos ? ':' : ',';
  return system + sep + "L=" + std::to_string(truncation);
}

json to_json(const RunConfig& c) {
  json j = {{"system", c.system},
            {"family", c.family},
            {"epsilons", c.epsilons},
            {"ns", c.ns},
            {"sampleSize", c.sample_size},
            {"seed", c.seed ? json(*c.seed) : json(nullptr)},
            {"output", c.output},
            {"format", c.format},
            {"theta", c.theta},
            {"stability", c.stability},
            {"truncation", c.truncation},
            {"budget", c.budget},
            {"nMax", c.n_max},
            {"mode", c.mode},
            {"groundTruth", c.ground_truth},
            {"group", c.group},
            {"index", c.index},
            {"threads", c.threads}};
  return j;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "system") {
      c.system = value.get<std::string>();
    } else if (key == "family") {
      c.family = value.get<std::string>();
    } else if (key == "epsilons") {
      c.epsilons = value.get<std::vector<double>>();
    } else if (key == "ns") {
      c.ns = value.get<std::vector<int>>();
    } else if (key == "sampleSize") {
      c.sample_size = value.get<std::size_t>();
    } else if (key == "seed") {
      if (value.is_null()) {
        c.seed.reset();
      } else {
        c.seed = value.get<std::uint64_t>();
      }
    } else if (key == "output") {
      c.output = value.get<std::string>();
    } else if (key == "format") {
      c.format = value.get<std::string>();
    } else if (key == "theta") {
      c.theta = value.get<double>();
    } else if (key == "stability") {
      c.stability = value.get<std::size_t>();
    } else if (key == "truncation") {
      c.truncation = value.get<int>();
    } else if (key == "budget") {
      c.budget = value.get<std::size_t>();
    } else if (key == "nMax") {
      c.n_max = value.get<int>();
    } else if (key == "mode") {
      c.mode = value.get<std::string>();
    } else if (key == "groundTruth") {
      c.ground_truth = value.get<std::string>();
    } else if (key == "group") {
      c.group = value.get<std::string>();
    } else if (key == "index") {
      c.index = value.get<int>();
    } else if (key == "threads") {
      c.threads = value.get<unsigned>();
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

}  // namespace meancx::cli
