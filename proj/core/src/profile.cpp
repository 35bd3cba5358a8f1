#include <algorithm>
#include <memory>

#include "meancx/complexity.hpp"

namespace meancx {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded:
      return "Bounded";
    case Verdict::Unbounded:
      return "Unbounded";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict boundedness_verdict(std::span<const std::size_t> counts, const VerdictRule& rule,
                            std::span<const bool> saturated) {
  const std::size_t size = counts.size();
  if (size == 0) return Verdict::Inconclusive;
  auto value = [&](std::size_t i) { return static_cast<double>(counts[i]); };

  // Growth counts only when the strictly increasing run reaches the last entry.
  std::size_t start = size - 1;
  while (start > 0 && counts[start - 1] < counts[start]) --start;
  if (size - 1 - start >= rule.run && value(size - 1) >= rule.growth * value(start)) return Verdict::Unbounded;

  const auto first_saturated = std::find(saturated.begin(), saturated.end(), true);
  if (first_saturated != saturated.end()) {
    const auto index = static_cast<std::size_t>(first_saturated - saturated.begin());
    return value(index) >= rule.growth * value(0) ? Verdict::Unbounded : Verdict::Inconclusive;
  }

  if (size < 3) return Verdict::Inconclusive;
  const double last = value(size - 1);
  const double middle = value((size - 1) / 2);
  const auto [lo, hi] = std::minmax({counts[size - 3], counts[size - 2], counts[size - 1]});
  const bool increasing = counts[size - 3] < counts[size - 2] && counts[size - 2] < counts[size - 1];
  if (last <= rule.theta * middle && hi - lo <= rule.stability && !increasing) return Verdict::Bounded;
  return Verdict::Inconclusive;
}

Verdict boundedness_verdict(const ComplexityProfile& profile, const VerdictRule& rule) {
  std::vector<std::size_t> counts;
  const auto saturated = std::make_unique<bool[]>(profile.entries.size());
  for (std::size_t i = 0; i < profile.entries.size(); ++i) {
    counts.push_back(profile.entries[i].estimate.upper_count);
    saturated[i] = profile.entries[i].estimate.saturated;
  }
  return boundedness_verdict(counts, rule, std::span<const bool>(saturated.get(), profile.entries.size()));
}

std::vector<ComplexityProfile> folner_profiles(const DynamicalSystem& system, std::string_view family,
                                               std::span<const double> epsilons, std::span<const int> ns,
                                               std::size_t sample_size, std::uint64_t seed, const VerdictRule& rule,
                                               const FolnerOptions& options) {
  if (ns.empty()) throw std::invalid_argument("profile needs at least one window index");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw std::invalid_argument("window indices must be positive");
    if (i > 0 && ns[i] <= ns[i - 1]) throw std::invalid_argument("window indices must be strictly increasing");
  }
  const std::string family_name(family);
  std::vector<ComplexityProfile> out(epsilons.size());
  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    auto& p = out[e];
    p.system = system.spec_string();
    p.family = family_name;
    p.epsilon = epsilons[e];
    p.rule = rule;
    p.sample_size = sample_size;
    p.seed = seed;
    p.truncation_error = system.truncation_error();
  }
  const PointSample sample = system.sample_measure(sample_size, seed);
  for (int n : ns) {
    const FolnerWindow window = folner_window(system.group(), family, n, options);
    const GroupMeasure rho = haar_on(window);
    auto estimates = covering_estimates(system, rho, epsilons, sample);
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      out[e].entries.push_back({n, window.elements.size(), std::move(estimates[e])});
    }
  }
  for (auto& p : out) {
    p.verdict = boundedness_verdict(p, rule);
    p.growth_ratio = static_cast<double>(p.entries.back().estimate.upper_count) /
                     static_cast<double>(p.entries.front().estimate.upper_count);
  }
  return out;
}

ComplexityProfile folner_profile(const DynamicalSystem& system, std::string_view family, double epsilon,
                                 std::span<const int> ns, std::size_t sample_size, std::uint64_t seed,
                                 const VerdictRule& rule, const FolnerOptions& options) {
  const double eps[] = {epsilon};
  return folner_profiles(system, family, eps, ns, sample_size, seed, rule, options).front();
}

}  // namespace meancx
