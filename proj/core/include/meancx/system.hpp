#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meancx/group.hpp"
#include "meancx/group_measure.hpp"
#include "meancx/state.hpp"

namespace meancx {

enum class GroundTruth { DiscreteSpectrum, NotDiscreteSpectrum, Unknown };

std::string to_string(GroundTruth truth);
GroundTruth parse_ground_truth(std::string_view text);

/// i.i.d. draws from the system's invariant measure; identical seeds give identical states.
struct PointSample {
  std::vector<State> states;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return states.size(); }
};

/// Continuous observable on X. Complex-valued so circle characters are first class.
struct TestFunction {
  std::string name;
  std::function<std::complex<double>(const State&)> evaluate;
  double sup_norm = 1.0;
};

/// Orbit distances d(g_k x_i, g_k x_j) for the support {g_k} of a group measure and a
/// fixed list of states x_i, plus their weighted mean d_rho(x_i, x_j). Tables are
/// immutable after construction and safe to query from several threads.
class OrbitTable {
 public:
  OrbitTable(std::vector<double> weights, std::size_t states);
  virtual ~OrbitTable() = default;

  std::size_t states() const noexcept { return states_; }
  std::size_t elements() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }

  virtual double element_distance(std::size_t i, std::size_t j, std::size_t k) const = 0;

  /// True when element_distance(i, j, k) does not depend on k (translation-invariant
  /// metrics, where every g acts as an isometry).
  virtual bool orbit_invariant() const { return false; }

  /// Sum over k of weight_k * element_distance(i, j, k).
  virtual double mean_distance(std::size_t i, std::size_t j) const;

  /// out[j - first] = mean_distance(i, j) for j in [first, last).
  virtual void mean_row(std::size_t i, std::size_t first, std::size_t last, double* out) const;

 protected:
  std::vector<double> weights_;
  std::size_t states_;
};

/// A compact metric space with a continuous action of a built-in group and an invariant
/// probability measure. Metrics are normalised to diameter 1.
class DynamicalSystem {
 public:
  DynamicalSystem(std::string name, GroupSpec group, GroundTruth truth, bool isometric);
  virtual ~DynamicalSystem() = default;

  DynamicalSystem(const DynamicalSystem&) = delete;
  DynamicalSystem& operator=(const DynamicalSystem&) = delete;

  const std::string& name() const noexcept { return name_; }
  const GroupSpec& group() const noexcept { return group_; }
  GroundTruth ground_truth() const noexcept { return truth_; }
  bool isometric() const noexcept { return isometric_; }

  /// Registry address, e.g. "rotation:alpha=0.25".
  virtual std::string spec_string() const;
  virtual std::vector<std::pair<std::string, std::string>> parameters() const { return {}; }
  /// Largest metric error introduced by truncating an infinite-dimensional state.
  virtual double truncation_error() const { return 0.0; }

  virtual State apply(const GroupElement& g, const State& x) const = 0;
  virtual double distance(const State& x, const State& y) const = 0;
  virtual std::vector<State> draw(std::size_t count, std::uint64_t seed) const = 0;
  virtual std::vector<TestFunction> test_functions() const = 0;

  PointSample sample_measure(std::size_t count, std::uint64_t seed) const;

  /// Default: materialises every image g_k x_i and calls distance(). Systems override
  /// this with flat, allocation-free tables.
  virtual std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const;

 private:
  std::string name_;
  GroupSpec group_;
  GroundTruth truth_;
  bool isometric_;

  friend class RelabeledSystem;
};

using SystemPtr = std::shared_ptr<const DynamicalSystem>;

/// Same system under a different ground-truth label (negative-path fixtures).
SystemPtr relabel(SystemPtr system, GroundTruth truth);

/// |mean f - mean f∘g| over one fresh sample of size N.
double invariance_check(const DynamicalSystem& system, const GroupElement& g, const TestFunction& f, std::size_t count,
                        std::uint64_t seed);

/// Finds a test function by name; throws UnknownNameError.
TestFunction find_test_function(const DynamicalSystem& system, std::string_view name);

}  // namespace meancx
