#include "meancx/system.hpp"

#include <cmath>
#include <sstream>

#include "meancx/error.hpp"

namespace meancx {

std::string to_string(GroundTruth truth) {
  switch (truth) {
    case GroundTruth::DiscreteSpectrum:
      return "DiscreteSpectrum";
    case GroundTruth::NotDiscreteSpectrum:
      return "NotDiscreteSpectrum";
    case GroundTruth::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

GroundTruth parse_ground_truth(std::string_view text) {
  if (text == "DiscreteSpectrum") return GroundTruth::DiscreteSpectrum;
  if (text == "NotDiscreteSpectrum") return GroundTruth::NotDiscreteSpectrum;
  if (text == "Unknown") return GroundTruth::Unknown;
  throw UnknownNameError("unknown ground-truth label '" + std::string(text) + "'");
}

OrbitTable::OrbitTable(std::vector<double> weights, std::size_t states)
    : weights_(std::move(weights)), states_(states) {}

double OrbitTable::mean_distance(std::size_t i, std::size_t j) const {
  double total = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) total += weights_[k] * element_distance(i, j, k);
  return total;
}

void OrbitTable::mean_row(std::size_t i, std::size_t first, std::size_t last, double* out) const {
  for (std::size_t j = first; j < last; ++j) out[j - first] = mean_distance(i, j);
}

DynamicalSystem::DynamicalSystem(std::string name, GroupSpec group, GroundTruth truth, bool isometric)
    : name_(std::move(name)), group_(std::move(group)), truth_(truth), isometric_(isometric) {}

std::string DynamicalSystem::spec_string() const {
  auto params = parameters();
  if (params.empty()) return name_;
  std::ostringstream os;
  os << name_ << ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    os << (i ? "," : "") << params[i].first << '=' << params[i].second;
  }
  return os.str();
}

PointSample DynamicalSystem::sample_measure(std::size_t count, std::uint64_t seed) const {
  return PointSample{draw(count, seed), seed};
}

namespace {

class GenericOrbitTable final : public OrbitTable {
 public:
  GenericOrbitTable(const DynamicalSystem& system, const GroupMeasure& rho, std::span<const State> states)
      : OrbitTable(rho.weights(), states.size()), system_(system) {
    const auto& support = rho.support();
    images_.reserve(states.size() * support.size());
    for (const auto& x : states) {
      for (const auto& s : support) images_.push_back(system.apply(s.element, x));
    }
  }

  double element_distance(std::size_t i, std::size_t j, std::size_t k) const override {
    const std::size_t m = elements();
    return system_.distance(images_[i * m + k], images_[j * m + k]);
  }

 private:
  const DynamicalSystem& system_;
  std::vector<State> images_;
};

}  // namespace

std::unique_ptr<OrbitTable> DynamicalSystem::orbit_table(const GroupMeasure& rho, std::span<const State> states) const {
  return std::make_unique<GenericOrbitTable>(*this, rho, states);
}

class RelabeledSystem final : public DynamicalSystem {
 public:
  RelabeledSystem(SystemPtr inner, GroundTruth truth)
      : DynamicalSystem(inner->name(), inner->group(), truth, inner->isometric()), inner_(std::move(inner)) {}

  std::string spec_string() const override { return inner_->spec_string(); }
  std::vector<std::pair<std::string, std::string>> parameters() const override { return inner_->parameters(); }
  double truncation_error() const override { return inner_->truncation_error(); }
  State apply(const GroupElement& g, const State& x) const override { return inner_->apply(g, x); }
  double distance(const State& x, const State& y) const override { return inner_->distance(x, y); }
  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override { return inner_->draw(count, seed); }
  std::vector<TestFunction> test_functions() const override { return inner_->test_functions(); }
  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override {
    return inner_->orbit_table(rho, states);
  }

 private:
  SystemPtr inner_;
};

SystemPtr relabel(SystemPtr system, GroundTruth truth) {
  return std::make_shared<RelabeledSystem>(std::move(system), truth);
}

double invariance_check(const DynamicalSystem& system, const GroupElement& g, const TestFunction& f, std::size_t count,
                        std::uint64_t seed) {
  system.group().require(g);
  if (count == 0) throw std::invalid_argument("invariance_check needs a nonempty sample");
  const auto sample = system.draw(count, seed);
  std::complex<double> plain{};
  std::complex<double> moved{};
  for (const auto& x : sample) {
    plain += f.evaluate(x);
    moved += f.evaluate(system.apply(g, x));
  }
  const double n = static_cast<double>(count);
  return std::abs(plain / n - moved / n);
}

TestFunction find_test_function(const DynamicalSystem& system, std::string_view name) {
  for (auto& f : system.test_functions()) {
    if (f.name == name) return f;
  }
  throw UnknownNameError("system " + system.name() + " has no test function '" + std::string(name) + "'");
}

}  // namespace meancx
