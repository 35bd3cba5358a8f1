#include <cmath>
#include <unordered_set>

#include "meancx/parallel.hpp"
#include "meancx/spectrum.hpp"

namespace meancx {

std::string to_string(NetVerdict v) {
  switch (v) {
    case NetVerdict::Precompact:
      return "Precompact";
    case NetVerdict::NotPrecompact:
      return "NotPrecompact";
    case NetVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

NetVerdict net_verdict(Verdict v) {
  switch (v) {
    case Verdict::Bounded:
      return NetVerdict::Precompact;
    case Verdict::Unbounded:
      return NetVerdict::NotPrecompact;
    case Verdict::Inconclusive:
      return NetVerdict::Inconclusive;
  }
  return NetVerdict::Inconclusive;
}

double l2_distance(const DynamicalSystem& system, const TestFunction& f, const GroupElement& g, const GroupElement& h,
                   const PointSample& sample) {
  system.group().require(g);
  system.group().require(h);
  if (sample.size() == 0) throw std::invalid_argument("l2_distance needs a nonempty sample");
  if (g == h) return 0.0;
  double total = 0.0;
  for (const auto& x : sample.states) total += std::norm(f.evaluate(system.apply(g, x)) - f.evaluate(system.apply(h, x)));
  return std::sqrt(total / static_cast<double>(sample.size()));
}

namespace {

// Greedy eps-net of the orbit vectors seen so far for one test function.
class OrbitNet {
 public:
  OrbitNet(std::size_t dimension, double epsilon) : dimension_(dimension), limit_(epsilon * epsilon * dimension) {}

  void offer(const std::complex<double>* v) {
    for (std::size_t c = 0; c < size(); ++c) {
      const std::complex<double>* centre = &centres_[c * dimension_];
      double total = 0.0;
      for (std::size_t i = 0; i < dimension_ && total < limit_; ++i) total += std::norm(v[i] - centre[i]);
      if (total < limit_) return;
    }
    centres_.insert(centres_.end(), v, v + dimension_);
  }
  std::size_t size() const noexcept { return dimension_ == 0 ? 0 : centres_.size() / dimension_; }

 private:
  std::size_t dimension_;
  double limit_;
  std::vector<std::complex<double>> centres_;
};

}  // namespace

std::vector<OrbitNetReport> orbit_net_profiles(const DynamicalSystem& system, std::string_view family, double epsilon,
                                               std::span<const int> ns, std::size_t sample_size, std::uint64_t seed,
                                               const VerdictRule& rule, const FolnerOptions& options) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("net scale must be positive");
  if (sample_size == 0) throw std::invalid_argument("orbit nets need a nonempty sample");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1 || (i > 0 && ns[i] <= ns[i - 1])) {
      throw std::invalid_argument("window indices must be positive and strictly increasing");
    }
  }
  const auto functions = system.test_functions();
  const PointSample sample = system.sample_measure(sample_size, seed);
  const std::size_t count = functions.size();
  std::vector<OrbitNet> nets(count, OrbitNet(sample_size, epsilon));
  std::vector<OrbitNetReport> reports(count);
  for (std::size_t f = 0; f < count; ++f) {
    reports[f].system = system.spec_string();
    reports[f].function = functions[f].name;
    reports[f].family = std::string(family);
    reports[f].epsilon = epsilon;
    reports[f].sample_size = sample_size;
    reports[f].seed = seed;
  }

  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<std::complex<double>> values(count * sample_size);
  for (int n : ns) {
    const FolnerWindow window = folner_window(system.group(), family, n, options);
    for (const auto& g : window.elements) {
      if (!seen.insert(g).second) continue;
      parallel_for(0, sample_size, [&](std::size_t i) {
        const State y = system.apply(g, sample.states[i]);
        for (std::size_t f = 0; f < count; ++f) values[f * sample_size + i] = functions[f].evaluate(y);
      });
      for (std::size_t f = 0; f < count; ++f) nets[f].offer(&values[f * sample_size]);
    }
    for (std::size_t f = 0; f < count; ++f) reports[f].entries.push_back({n, seen.size(), nets[f].size()});
  }
  for (auto& r : reports) {
    std::vector<std::size_t> sizes;
    for (const auto& e : r.entries) sizes.push_back(e.net_size);
    r.verdict = net_verdict(boundedness_verdict(sizes, rule));
  }
  return reports;
}

OrbitNetReport orbit_net_profile(const DynamicalSystem& system, const TestFunction& f, std::string_view family,
                                 double epsilon, std::span<const int> ns, std::size_t sample_size, std::uint64_t seed,
                                 const VerdictRule& rule, const FolnerOptions& options) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("net scale must be positive");
  if (sample_size == 0) throw std::invalid_argument("orbit nets need a nonempty sample");
  const PointSample sample = system.sample_measure(sample_size, seed);
  OrbitNet net(sample_size, epsilon);
  OrbitNetReport report;
  report.system = system.spec_string();
  report.function = f.name;
  report.family = std::string(family);
  report.epsilon = epsilon;
  report.sample_size = sample_size;
  report.seed = seed;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<std::complex<double>> values(sample_size);
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const int n = ns[idx];
    if (n < 1 || (idx > 0 && n <= ns[idx - 1])) {
      throw std::invalid_argument("window indices must be positive and strictly increasing");
    }
    const FolnerWindow window = folner_window(system.group(), family, n, options);
    for (const auto& g : window.elements) {
      if (!seen.insert(g).second) continue;
      parallel_for(0, sample_size, [&](std::size_t i) { values[i] = f.evaluate(system.apply(g, sample.states[i])); });
      net.offer(values.data());
    }
    report.entries.push_back({n, seen.size(), net.size()});
  }
  std::vector<std::size_t> sizes;
  for (const auto& e : report.entries) sizes.push_back(e.net_size);
  report.verdict = net_verdict(boundedness_verdict(sizes, rule));
  return report;
}

NetVerdict combine(std::span<const OrbitNetReport> reports) {
  bool all_precompact = !reports.empty();
  for (const auto& r : reports) {
    if (r.verdict == NetVerdict::NotPrecompact) return NetVerdict::NotPrecompact;
    if (r.verdict != NetVerdict::Precompact) all_precompact = false;
  }
  return all_precompact ? NetVerdict::Precompact : NetVerdict::Inconclusive;
}

}  // namespace meancx
