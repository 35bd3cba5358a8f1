#include "meancx/report.hpp"

#include <sstream>

namespace meancx {

using nlohmann::json;

std::string version() { return MEANCX_VERSION; }

json to_json(const GroupElement& g) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LatticePoint>) {
          return json(std::vector<std::int64_t>(v.coords.begin(), v.coords.begin() + v.dim));
        } else if constexpr (std::is_same_v<T, HeisenbergPoint>) {
          return json::array({v.a, v.b, v.c});
        } else if constexpr (std::is_same_v<T, LampState>) {
          return json{{"lamps", v.lamps}, {"cursor", v.cursor}};
        } else {
          return json(v);
        }
      },
      g.value());
}

json to_json(const GroupMeasure& rho) {
  json support = json::array();
  for (const auto& [g, w] : rho.support()) support.push_back(json::array({to_json(g), w}));
  json tag = {{"name", rho.tag_name()}};
  std::visit(
      [&tag](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, FolnerHaar>) {
          tag["family"] = t.family;
          tag["n"] = t.index;
        } else if constexpr (std::is_same_v<T, FlowQuadrature>) {
          tag["start"] = t.start;
          tag["length"] = t.length;
          tag["step"] = t.step;
        }
      },
      rho.tag());
  return {{"tag", tag}, {"support", support}};
}

json to_json(const VerdictRule& rule) {
  return {{"theta", rule.theta}, {"stability", rule.stability}, {"growth", rule.growth}, {"run", rule.run}};
}

json to_json(const ComplexityEstimate& e) {
  return {{"epsilon", e.epsilon},         {"upperCount", e.upper_count},   {"lowerCount", e.lower_count},
          {"packingCount", e.packing_count}, {"sampleSize", e.sample_size}, {"seed", e.seed},
          {"massCovered", e.mass_covered}, {"saturated", e.saturated}};
}

json to_json(const ComplexityProfile& p) {
  json entries = json::array();
  for (const auto& e : p.entries) {
    json row = to_json(e.estimate);
    row["n"] = e.n;
    row["windowSize"] = e.window_size;
    entries.push_back(row);
  }
  return {{"system", p.system},
          {"family", p.family},
          {"epsilon", p.epsilon},
          {"entries", entries},
          {"verdict", to_string(p.verdict)},
          {"growthRatio", p.growth_ratio},
          {"rule", to_json(p.rule)},
          {"sampleSize", p.sample_size},
          {"seeds", json::array({p.seed})},
          {"truncationError", p.truncation_error}};
}

namespace {

json to_json(const CandidateSet& set) {
  json elements = json::array();
  for (const auto& g : set.elements) elements.push_back(to_json(g));
  return {{"family", set.family}, {"size", set.elements.size()}, {"elements", elements}};
}

}  // namespace

json to_json(const MaxMeanResult& r) {
  json candidates = json::array();
  for (const auto& c : r.candidates) {
    candidates.push_back({{"family", c.set.family}, {"size", c.set.elements.size()}, {"estimate", to_json(c.estimate)}});
  }
  return {{"system", r.system},
          {"epsilon", r.epsilon},
          {"budget", r.budget},
          {"families", r.families},
          {"worst", to_json(r.worst)},
          {"worstEstimate", to_json(r.worst_estimate)},
          {"identityEstimate", to_json(r.identity_estimate)},
          {"sizeProfile", r.size_profile},
          {"verdict", to_string(r.verdict)},
          {"candidates", candidates},
          {"sampleSize", r.sample_size},
          {"seed", r.seed}};
}

json to_json(const OrbitNetReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"n", e.n}, {"orbitSize", e.orbit_size}, {"netSize", e.net_size}});
  return {{"system", r.system},   {"function", r.function},     {"family", r.family},
          {"epsilon", r.epsilon}, {"entries", entries},         {"verdict", to_string(r.verdict)},
          {"sampleSize", r.sample_size}, {"seed", r.seed}};
}

json to_json(const EquicontinuityReport& r) {
  json results = json::array();
  for (const auto& e : r.results) {
    json levels = json::array();
    for (const auto& l : e.levels) {
      levels.push_back({{"delta", l.delta},
                        {"pairs", l.pairs},
                        {"failing", l.failing},
                        {"failingMass", l.failing_mass},
                        {"worst", l.worst},
                        {"accepted", l.accepted}});
    }
    results.push_back({{"epsilon", e.epsilon},
                       {"delta", e.delta ? json(*e.delta) : json(nullptr)},
                       {"excludedMass", e.excluded_mass},
                       {"outcome", to_string(e.outcome)},
                       {"levels", levels},
                       {"diagnostics", e.diagnostics}});
  }
  return {{"system", r.system},
          {"family", r.family},
          {"mode", to_string(r.mode)},
          {"nMax", r.n_max},
          {"windows", r.windows},
          {"limsupWindows", r.limsup_windows},
          {"shulmanConstant", r.shulman_constant},
          {"shulmanAnalytic", r.shulman_analytic},
          {"results", results},
          {"sampleSize", r.sample_size},
          {"seed", r.seed}};
}

json to_json(const BirkhoffReport& r) {
  return {{"windows", r.windows},
          {"pairs", r.pairs},
          {"maxOscillation", r.max_oscillation},
          {"quantile95", r.quantile95}};
}

json to_json(const ShulmanResult& r) {
  return {{"constant", r.constant}, {"argmax", r.argmax}, {"analytic", r.analytic}, {"ratios", r.ratios}};
}

json to_json(const CrossValidationConfig& c) {
  return {{"families", c.families},
          {"profileEpsilon", c.profile_epsilon},
          {"profileNs", c.profile_ns},
          {"profileSample", c.profile_sample},
          {"maxmeanEpsilon", c.maxmean_epsilon},
          {"maxmeanBudget", c.maxmean_budget},
          {"maxmeanSample", c.maxmean_sample},
          {"netEpsilon", c.net_epsilon},
          {"netNs", c.net_ns},
          {"netSample", c.net_sample},
          {"equiEpsilon", c.equi_epsilon},
          {"equiNMax", c.equi_n_max},
          {"equiSample", c.equi_sample},
          {"rule", to_json(c.rule)},
          {"flowStep", c.folner.flow_step}};
}

json to_json(const ConsistencyReport& r) {
  json profiles = json::array();
  for (const auto& p : r.profiles) profiles.push_back(to_json(p));
  json nets = json::array();
  for (const auto& n : r.nets) nets.push_back(to_json(n));
  json vector = json::array();
  for (const auto& v : r.verdicts) vector.push_back({{"component", v.component}, {"verdict", v.verdict}});
  return {{"system", r.system},
          {"groundTruth", to_string(r.ground_truth)},
          {"config", to_json(r.config)},
          {"components",
           {{"profiles", profiles},
            {"maxMean", to_json(r.max_mean)},
            {"orbitNets", nets},
            {"meanEquicontinuity", to_json(r.mean_equicontinuity)},
            {"equicontinuityInMean", to_json(r.in_the_mean)}}},
          {"verdicts", vector},
          {"status", to_string(r.status)},
          {"consistent", r.consistent},
          {"notes", r.notes},
          {"scope", "verdicts cover the tested scales, windows, candidate sets and test functions only"}};
}

namespace {

std::string number(double v) { return json(v).dump(); }

// Quotes a text field when it holds a comma, quote or newline; addresses may contain commas.
std::string field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const ComplexityProfile& p) {
  std::ostringstream os;
  os << "system,family,epsilon,n,window_size,upper_count,lower_count,packing_count,mass_covered,saturated,sample_size,"
        "seed\n";
  for (const auto& e : p.entries) {
    const auto& s = e.estimate;
    os << field(p.system) << ',' << field(p.family) << ',' << number(p.epsilon) << ',' << e.n << ',' << e.window_size << ','
       << s.upper_count << ',' << s.lower_count << ',' << s.packing_count << ',' << number(s.mass_covered) << ','
       << (s.saturated ? "true" : "false") << ',' << s.sample_size << ',' << s.seed << '\n';
  }
  return os.str();
}

std::string to_csv(const MaxMeanResult& r) {
  std::ostringstream os;
  os << "system,epsilon,candidate,family,size,upper_count,lower_count,saturated\n";
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& c = r.candidates[i];
    os << field(r.system) << ',' << number(r.epsilon) << ',' << i << ',' << field(c.set.family) << ',' << c.set.elements.size() << ','
       << c.estimate.upper_count << ',' << c.estimate.lower_count << ',' << (c.estimate.saturated ? "true" : "false")
       << '\n';
  }
  return os.str();
}

std::string to_csv(std::span<const OrbitNetReport> reports) {
  std::ostringstream os;
  os << "system,function,family,epsilon,n,orbit_size,net_size,verdict\n";
  for (const auto& r : reports) {
    for (const auto& e : r.entries) {
      os << field(r.system) << ',' << field(r.function) << ',' << field(r.family) << ',' << number(r.epsilon) << ',' << e.n << ','
         << e.orbit_size << ',' << e.net_size << ',' << to_string(r.verdict) << '\n';
    }
  }
  return os.str();
}

std::string to_csv(const EquicontinuityReport& r) {
  std::ostringstream os;
  os << "system,family,mode,epsilon,delta,pairs,failing,failing_mass,worst,accepted,outcome\n";
  for (const auto& e : r.results) {
    for (const auto& l : e.levels) {
      os << field(r.system) << ',' << field(r.family) << ',' << to_string(r.mode) << ',' << number(e.epsilon) << ','
         << number(l.delta) << ',' << l.pairs << ',' << l.failing << ',' << number(l.failing_mass) << ','
         << number(l.worst) << ',' << (l.accepted ? "true" : "false") << ',' << to_string(e.outcome) << '\n';
    }
  }
  return os.str();
}

std::string to_csv(const ShulmanResult& r) {
  std::ostringstream os;
  os << "n,ratio\n";
  for (std::size_t i = 0; i < r.ratios.size(); ++i) os << i + 2 << ',' << number(r.ratios[i]) << '\n';
  return os.str();
}

std::string to_csv(const ConsistencyReport& r) {
  std::ostringstream os;
  os << "system,ground_truth,component,verdict,status\n";
  for (const auto& v : r.verdicts) {
    os << field(r.system) << ',' << to_string(r.ground_truth) << ',' << field(v.component) << ',' << v.verdict << ','
       << to_string(r.status) << '\n';
  }
  return os.str();
}

}  // namespace meancx
