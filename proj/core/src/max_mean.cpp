#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <random>
#include <unordered_set>

#include "hashing.hpp"
#include "meancx/complexity.hpp"

namespace meancx {

namespace {

GroupElement power(const GroupSpec& group, const GroupElement& g, std::int64_t k) {
  GroupElement base = k < 0 ? group.inverse(g) : g;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  GroupElement out = group.identity();
  while (e != 0) {
    if (e & 1U) out = group.compose(out, base);
    base = group.compose(base, base);
    e >>= 1;
  }
  return out;
}

std::vector<GroupElement> dedup(std::vector<GroupElement> elements) {
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<GroupElement> out;
  for (auto& g : elements) {
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  return out;
}

class CandidateFactory {
 public:
  CandidateFactory(const GroupSpec& group, std::uint64_t seed) : group_(group), engine_(seed) {
    if (group_.is_discrete()) {
      for (auto& [g, len] : group_.word_ball(1)) {
        if (len != 1) continue;
        generators_.push_back(g);
        if (!(group_.compose(g, g) == group_.identity())) free_generators_.push_back(g);
      }
    }
  }

  CandidateSet folner_translate(std::size_t m) {
    const std::string family = default_family(group_);
    FolnerWindow window;
    for (int n = 1; n <= 4096; ++n) {
      window = folner_window(group_, family, n);
      if (window.elements.size() >= m) break;
    }
    const GroupElement h = random_element(8);
    std::vector<GroupElement> out;
    for (const auto& g : window.elements) out.push_back(group_.compose(g, h));
    return {"folner-translate", dedup(std::move(out))};
  }

  CandidateSet ball_subset(std::size_t m) {
    if (!group_.is_discrete()) {
      std::vector<GroupElement> out;
      while (out.size() < m) out.push_back(GroupElement(uniform(-4.0 * static_cast<double>(m), 4.0 * static_cast<double>(m))));
      return {"ball-subset", dedup(std::move(out))};
    }
    int radius = 1;
    auto ball = group_.word_ball(radius);
    while (ball.size() < 2 * m && radius < 64) ball = group_.word_ball(++radius);
    std::vector<std::size_t> index(ball.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
    // Partial Fisher-Yates on raw engine output keeps the choice platform independent.
    for (std::size_t i = 0; i < m && i < index.size(); ++i) {
      const std::size_t j = i + static_cast<std::size_t>(engine_() % (index.size() - i));
      std::swap(index[i], index[j]);
    }
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < m && i < index.size(); ++i) out.push_back(ball[index[i]].first);
    return {"ball-subset", std::move(out)};
  }

  CandidateSet lacunary(std::size_t m) {
    const std::size_t count = std::min<std::size_t>(m, 40);
    std::vector<GroupElement> out;
    if (!group_.is_discrete()) {
      const double t0 = uniform(0.25, 1.0);
      for (std::size_t k = 0; k < count; ++k) out.push_back(GroupElement(t0 * std::ldexp(1.0, static_cast<int>(k))));
    } else {
      const GroupElement g = free_generators_[engine_() % free_generators_.size()];
      for (std::size_t k = 0; k < count; ++k) out.push_back(power(group_, g, std::int64_t{1} << k));
    }
    return {"lacunary", dedup(std::move(out))};
  }

  CandidateSet progression(std::size_t m) {
    std::vector<GroupElement> out;
    if (!group_.is_discrete()) {
      const double a = uniform(-8.0, 8.0);
      const double b = uniform(0.5, 4.0);
      for (std::size_t k = 0; k < m; ++k) out.push_back(GroupElement(a + b * static_cast<double>(k)));
    } else {
      GroupElement g = group_.identity();
      while (g == group_.identity()) g = random_element(2);
      const auto a = static_cast<std::int64_t>(engine_() % 17) - 8;
      const auto b = static_cast<std::int64_t>(engine_() % 5) + 1;
      for (std::size_t k = 0; k < m; ++k) out.push_back(power(group_, g, a + b * static_cast<std::int64_t>(k)));
    }
    return {"progression", dedup(std::move(out))};
  }

 private:
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::ldexp(static_cast<double>(engine_() >> 11), -53);
  }

  GroupElement random_element(int steps) {
    if (!group_.is_discrete()) return GroupElement(uniform(-static_cast<double>(steps), static_cast<double>(steps)));
    GroupElement g = group_.identity();
    for (int i = 0; i < steps; ++i) g = group_.compose(g, generators_[engine_() % generators_.size()]);
    return g;
  }

  const GroupSpec& group_;
  std::mt19937_64 engine_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> free_generators_;  // generators of infinite order
};

}  // namespace

std::vector<CandidateSet> max_mean_candidates(const GroupSpec& group, std::size_t budget, std::uint64_t seed) {
  std::vector<CandidateSet> out;
  if (budget == 0) return out;
  out.push_back({"identity", {group.identity()}});
  CandidateFactory factory(group, seed);
  static constexpr std::size_t sizes[] = {2, 4, 8, 16, 32, 64};
  std::size_t round = 0;
  while (out.size() < budget) {
    const std::size_t m = sizes[round % std::size(sizes)];
    switch ((round / std::size(sizes)) % 4) {
      case 0:
        out.push_back(factory.folner_translate(m));
        break;
      case 1:
        out.push_back(factory.ball_subset(m));
        break;
      case 2:
        out.push_back(factory.lacunary(m));
        break;
      default:
        out.push_back(factory.progression(m));
        break;
    }
    ++round;
  }
  return out;
}

MaxMeanResult max_mean_search(const DynamicalSystem& system, double epsilon, std::size_t budget,
                              std::size_t sample_size, std::uint64_t seed, const VerdictRule& rule) {
  if (budget == 0) throw std::invalid_argument("max-mean search needs a positive budget");
  MaxMeanResult result;
  result.system = system.spec_string();
  result.epsilon = epsilon;
  result.budget = budget;
  result.sample_size = sample_size;
  result.seed = seed;
  result.families = {"identity", "folner-translate", "ball-subset", "lacunary", "progression"};

  const PointSample sample = system.sample_measure(sample_size, seed);
  const auto candidates = max_mean_candidates(system.group(), budget, detail::mix64(seed ^ 0x6d61786d65616eULL));
  std::vector<std::size_t> bucket_max;
  std::vector<bool> bucket_saturated;
  for (const auto& set : candidates) {
    auto estimate = covering_estimate(system, uniform_on(set.elements), epsilon, sample);
    const std::size_t bucket = static_cast<std::size_t>(std::bit_width(set.elements.size()) - 1);
    if (bucket_max.size() <= bucket) {
      bucket_max.resize(bucket + 1, 0);
      bucket_saturated.resize(bucket + 1, false);
    }
    if (estimate.upper_count >= bucket_max[bucket]) {
      bucket_max[bucket] = estimate.upper_count;
      bucket_saturated[bucket] = estimate.saturated;
    }
    if (result.candidates.empty()) result.identity_estimate = estimate;
    if (result.candidates.empty() || estimate.upper_count > result.worst_estimate.upper_count) {
      result.worst = set;
      result.worst_estimate = estimate;
    }
    result.candidates.push_back({set, std::move(estimate)});
  }
  std::vector<std::size_t> counts;
  std::vector<char> flags;
  for (std::size_t b = 0; b < bucket_max.size(); ++b) {
    if (bucket_max[b] == 0) continue;
    counts.push_back(bucket_max[b]);
    flags.push_back(bucket_saturated[b]);
  }
  const auto saturated = std::make_unique<bool[]>(flags.size());
  for (std::size_t i = 0; i < flags.size(); ++i) saturated[i] = flags[i] != 0;
  result.size_profile = counts;
  result.verdict = boundedness_verdict(counts, rule, std::span<const bool>(saturated.get(), flags.size()));
  return result;
}

TranslatePair translate_invariance_check(const DynamicalSystem& system, std::span<const GroupElement> set,
                                         const GroupElement& h, double epsilon, std::size_t sample_size,
                                         std::uint64_t seed) {
  const PointSample sample = system.sample_measure(sample_size, seed);
  const GroupMeasure base = uniform_on(set);
  const GroupMeasure translated = right_translate(system.group(), base, h);
  return {covering_estimate(system, base, epsilon, sample), covering_estimate(system, translated, epsilon, sample)};
}

}  // namespace meancx
