#include <algorithm>
#include <cmath>
#include <sstream>

#include "hashing.hpp"
#include "meancx/parallel.hpp"
#include "meancx/spectrum.hpp"

namespace meancx {

std::string to_string(EquicontinuityMode m) {
  return m == EquicontinuityMode::MeanLimsup ? "MeanLimsup" : "InTheMean";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::vector<int> equicontinuity_windows(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<int> out;
  for (int n = 1; n <= n_max; n *= 2) out.push_back(n);
  for (double f : {0.75, 0.8125, 0.875, 0.9375, 1.0}) {
    out.push_back(std::max(1, static_cast<int>(std::lround(f * n_max))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Largest prefix with windows small enough to enumerate F_k^{-1} F_n exactly.
int shulman_prefix(const GroupSpec& group, std::string_view family, int n_max, const FolnerOptions& options) {
  int best = 2;
  for (int n = 2; n <= std::min(n_max, 32); ++n) {
    if (folner_window(group, family, n, options).elements.size() > 2048) break;
    best = n;
  }
  return best;
}

struct ClosePair {
  std::size_t first;
  std::size_t second;
};

}  // namespace

EquicontinuityReport equicontinuity_test(const DynamicalSystem& system, std::string_view family,
                                         std::span<const double> epsilons, std::size_t sample_size, int n_max,
                                         std::uint64_t seed, EquicontinuityMode mode,
                                         const EquicontinuityOptions& options, const FolnerOptions& folner) {
  if (epsilons.empty()) throw std::invalid_argument("equicontinuity test needs at least one epsilon");
  for (double eps : epsilons) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  if (options.levels == 0) throw std::invalid_argument("delta grid needs at least one level");
  if (sample_size < 2) throw std::invalid_argument("equicontinuity test needs at least two sample points");
  if (!has_family(system.group(), family)) {
    throw UnknownNameError("unknown family '" + std::string(family) + "' for group " + system.group().name());
  }

  EquicontinuityReport report;
  report.system = system.spec_string();
  report.family = std::string(family);
  report.mode = mode;
  report.n_max = n_max;
  report.windows = equicontinuity_windows(n_max);
  for (int n : report.windows) {
    if (4 * n >= 3 * n_max) report.limsup_windows.push_back(n);
  }
  report.sample_size = sample_size;
  report.seed = seed;
  if (system.group().is_discrete()) {
    const auto sc = shulman_constant(system.group(), family, shulman_prefix(system.group(), family, n_max, folner));
    report.shulman_constant = sc.constant;
    report.shulman_analytic = sc.analytic;
  } else {
    report.shulman_constant = 2.0;
    report.shulman_analytic = true;
  }

  // Close pairs per (epsilon, delta) level: for each i the first j > i with d < delta.
  const PointSample pool = system.sample_measure(sample_size, seed);
  const auto base = system.orbit_table(dirac(system.group().identity()), pool.states);
  std::vector<double> deltas;
  for (double eps : epsilons) {
    for (std::size_t l = 0; l < options.levels; ++l) deltas.push_back(std::ldexp(eps, -static_cast<int>(l)));
  }
  std::vector<std::vector<ClosePair>> level_pairs(deltas.size());
  std::vector<double> row(sample_size);
  for (std::size_t i = 0; i + 1 < sample_size; ++i) {
    bool wanted = false;
    for (std::size_t l = 0; l < deltas.size(); ++l) wanted = wanted || level_pairs[l].size() < options.max_pairs;
    if (!wanted) break;
    base->mean_row(i, i + 1, sample_size, row.data());
    for (std::size_t l = 0; l < deltas.size(); ++l) {
      if (level_pairs[l].size() >= options.max_pairs) continue;
      for (std::size_t j = i + 1; j < sample_size; ++j) {
        if (row[j - i - 1] < deltas[l]) {
          level_pairs[l].push_back({i, j});
          break;
        }
      }
    }
  }

  // Statistic per pair: max of d_{F_n}(x, y) over the relevant windows.
  std::vector<State> states;
  std::vector<std::size_t> offsets(deltas.size() + 1, 0);
  for (std::size_t l = 0; l < deltas.size(); ++l) {
    for (const auto& p : level_pairs[l]) {
      states.push_back(pool.states[p.first]);
      states.push_back(pool.states[p.second]);
    }
    offsets[l + 1] = states.size() / 2;
  }
  const std::size_t pair_total = states.size() / 2;
  std::vector<double> statistic(pair_total, 0.0);
  if (pair_total > 0) {
    const auto& windows = mode == EquicontinuityMode::MeanLimsup ? report.limsup_windows : report.windows;
    for (int n : windows) {
      const GroupMeasure rho = haar_on(folner_window(system.group(), family, n, folner));
      const auto table = system.orbit_table(rho, states);
      parallel_for(0, pair_total, [&](std::size_t p) {
        statistic[p] = std::max(statistic[p], table->mean_distance(2 * p, 2 * p + 1));
      });
    }
  }

  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    EpsilonResult result;
    result.epsilon = epsilons[e];
    bool any_pairs = false;
    for (std::size_t l = e * options.levels; l < (e + 1) * options.levels; ++l) {
      DeltaLevel level;
      level.delta = deltas[l];
      level.pairs = offsets[l + 1] - offsets[l];
      for (std::size_t p = offsets[l]; p < offsets[l + 1]; ++p) {
        level.worst = std::max(level.worst, statistic[p]);
        if (statistic[p] > 2.0 * result.epsilon) ++level.failing;
      }
      if (level.pairs > 0) {
        any_pairs = true;
        level.failing_mass = static_cast<double>(level.failing) / static_cast<double>(level.pairs);
        level.accepted = level.failing_mass < result.epsilon;
      }
      if (level.accepted && !result.delta) {
        result.delta = level.delta;
        result.excluded_mass = level.failing_mass;
      }
      result.levels.push_back(level);
    }
    if (result.delta) {
      result.outcome = Outcome::Pass;
    } else if (any_pairs) {
      result.outcome = Outcome::Fail;
      std::ostringstream os;
      os << "no delta down to " << result.levels.back().delta << " keeps the failing mass below " << result.epsilon;
      result.diagnostics = os.str();
    } else {
      result.outcome = Outcome::Inconclusive;
      result.diagnostics = "no sample pairs closer than the delta grid; increase the sample size";
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

EquicontinuityReport mean_equicontinuity_test(const DynamicalSystem& system, std::string_view family, double epsilon,
                                              std::size_t sample_size, int n_max, std::uint64_t seed) {
  const double eps[] = {epsilon};
  return equicontinuity_test(system, family, eps, sample_size, n_max, seed, EquicontinuityMode::MeanLimsup);
}

EquicontinuityReport equicontinuity_in_mean_test(const DynamicalSystem& system, std::string_view family,
                                                 double epsilon, std::size_t sample_size, int n_max,
                                                 std::uint64_t seed) {
  const double eps[] = {epsilon};
  return equicontinuity_test(system, family, eps, sample_size, n_max, seed, EquicontinuityMode::InTheMean);
}

BirkhoffReport birkhoff_convergence_check(const DynamicalSystem& system, std::string_view family,
                                          const PairFunction& f2, std::size_t pair_count, int n_max,
                                          std::uint64_t seed, const FolnerOptions& options) {
  if (pair_count == 0) throw std::invalid_argument("birkhoff check needs at least one pair");
  BirkhoffReport report;
  const auto windows = equicontinuity_windows(n_max);
  report.windows.assign(windows.end() - static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, windows.size())),
                        windows.end());
  report.pairs = pair_count;
  const PointSample sample = system.sample_measure(2 * pair_count, seed);

  std::vector<double> lo(pair_count, 1e300), hi(pair_count, -1e300);
  for (int n : report.windows) {
    const GroupMeasure rho = haar_on(folner_window(system.group(), family, n, options));
    std::vector<double> average(pair_count, 0.0);
    if (!f2) {
      const auto table = system.orbit_table(rho, sample.states);
      parallel_for(0, pair_count, [&](std::size_t p) { average[p] = table->mean_distance(p, p + pair_count); });
    } else {
      parallel_for(0, pair_count, [&](std::size_t p) {
        double total = 0.0;
        for (const auto& [g, w] : rho.support()) {
          total += w * f2(system.apply(g, sample.states[p]), system.apply(g, sample.states[p + pair_count]));
        }
        average[p] = total;
      });
    }
    for (std::size_t p = 0; p < pair_count; ++p) {
      lo[p] = std::min(lo[p], average[p]);
      hi[p] = std::max(hi[p], average[p]);
    }
  }
  report.oscillations.resize(pair_count);
  for (std::size_t p = 0; p < pair_count; ++p) report.oscillations[p] = hi[p] - lo[p];
  std::vector<double> sorted = report.oscillations;
  std::sort(sorted.begin(), sorted.end());
  report.max_oscillation = sorted.back();
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(pair_count))) - 1;
  report.quantile95 = sorted[std::min(rank, pair_count - 1)];
  return report;
}

}  // namespace meancx
