#pragma once

// Discrete-spectrum diagnostics: Koopman orbit nets in L^2 of the empirical measure,
// mean equicontinuity tests, ergodic-average convergence, and the cross-check that runs
// every diagnostic on one system.
//
// Positive verdicts only mean no obstruction was found at the tested scales, over the
// finite dictionary of test functions and candidate sets.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meancx/complexity.hpp"
#include "meancx/folner.hpp"
#include "meancx/system.hpp"
#include "meancx/systems.hpp"

namespace meancx {

/// sqrt((1/N) sum_i |f(g x_i) - f(h x_i)|^2).
double l2_distance(const DynamicalSystem& system, const TestFunction& f, const GroupElement& g, const GroupElement& h,
                   const PointSample& sample);

enum class NetVerdict { Precompact, NotPrecompact, Inconclusive };
std::string to_string(NetVerdict v);
NetVerdict net_verdict(Verdict v);

struct OrbitNetEntry {
  int n = 0;
  std::size_t orbit_size = 0;  // distinct elements in F_1 u ... u F_n seen so far
  std::size_t net_size = 0;
};

struct OrbitNetReport {
  std::string system;
  std::string function;
  std::string family;
  double epsilon = 0.0;
  std::vector<OrbitNetEntry> entries;
  NetVerdict verdict = NetVerdict::Inconclusive;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
};

/// Greedy eps-separated net of {g f : g in F_1 u ... u F_n} under l2_distance, extended
/// window by window so net sizes are nondecreasing; verdict by boundedness_verdict.
OrbitNetReport orbit_net_profile(const DynamicalSystem& system, const TestFunction& f, std::string_view family,
                                 double epsilon, std::span<const int> ns, std::size_t sample_size, std::uint64_t seed,
                                 const VerdictRule& rule = {}, const FolnerOptions& options = {});

/// One report per built-in test function, sharing the sample.
std::vector<OrbitNetReport> orbit_net_profiles(const DynamicalSystem& system, std::string_view family, double epsilon,
                                               std::span<const int> ns, std::size_t sample_size, std::uint64_t seed,
                                               const VerdictRule& rule = {}, const FolnerOptions& options = {});

/// NotPrecompact if any function is, Precompact if all are, else Inconclusive.
NetVerdict combine(std::span<const OrbitNetReport> reports);

enum class EquicontinuityMode { MeanLimsup, InTheMean };
std::string to_string(EquicontinuityMode m);

enum class Outcome { Pass, Fail, Inconclusive };
std::string to_string(Outcome o);

struct DeltaLevel {
  double delta = 0.0;
  std::size_t pairs = 0;
  std::size_t failing = 0;     // pairs whose statistic exceeds 2 eps
  double failing_mass = 0.0;   // failing / pairs
  double worst = 0.0;          // largest statistic among the pairs
  bool accepted = false;
};

struct EpsilonResult {
  double epsilon = 0.0;
  std::vector<DeltaLevel> levels;
  std::optional<double> delta;  // first accepted delta
  double excluded_mass = 0.0;   // failing mass at the accepted delta
  Outcome outcome = Outcome::Inconclusive;
  std::string diagnostics;
};

struct EquicontinuityOptions {
  std::size_t levels = 4;          // delta in {eps, eps/2, ..., eps / 2^(levels-1)}
  std::size_t max_pairs = 200;     // close pairs kept per delta level
};

struct EquicontinuityReport {
  std::string system;
  std::string family;
  EquicontinuityMode mode = EquicontinuityMode::MeanLimsup;
  int n_max = 0;
  std::vector<int> windows;         // window indices evaluated
  std::vector<int> limsup_windows;  // the late windows standing in for the limsup
  double shulman_constant = 0.0;
  bool shulman_analytic = false;
  std::vector<EpsilonResult> results;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
};

/// Window indices used up to n_max: powers of two plus late indices in [3/4 n_max, n_max].
std::vector<int> equicontinuity_windows(int n_max);

/// For each eps and each delta on the grid, takes sample pairs with d(x, y) < delta and
/// asks whether d_{F_n}(x, y) <= 2 eps (max over late windows for MeanLimsup, over all
/// windows for InTheMean) outside a set of mass < eps. Pass when some delta is
/// accepted; Inconclusive when no level found close pairs.
EquicontinuityReport equicontinuity_test(const DynamicalSystem& system, std::string_view family,
                                         std::span<const double> epsilons, std::size_t sample_size, int n_max,
                                         std::uint64_t seed, EquicontinuityMode mode,
                                         const EquicontinuityOptions& options = {},
                                         const FolnerOptions& folner = {});

EquicontinuityReport mean_equicontinuity_test(const DynamicalSystem& system, std::string_view family, double epsilon,
                                              std::size_t sample_size, int n_max, std::uint64_t seed);
EquicontinuityReport equicontinuity_in_mean_test(const DynamicalSystem& system, std::string_view family,
                                                 double epsilon, std::size_t sample_size, int n_max,
                                                 std::uint64_t seed);

using PairFunction = std::function<double(const State&, const State&)>;

struct BirkhoffReport {
  std::vector<int> windows;          // the last three windows
  std::vector<double> oscillations;  // per pair: max - min of the averages over those windows
  double max_oscillation = 0.0;
  double quantile95 = 0.0;
  std::size_t pairs = 0;
};

/// Ergodic averages of f2(g x, g y) over F_n for independent sample pairs; an empty f2
/// means the system metric.
BirkhoffReport birkhoff_convergence_check(const DynamicalSystem& system, std::string_view family,
                                          const PairFunction& f2, std::size_t pair_count, int n_max,
                                          std::uint64_t seed, const FolnerOptions& options = {});

enum class ConsistencyStatus { Consistent, Inconsistent, Inconclusive };
std::string to_string(ConsistencyStatus s);

struct CrossValidationConfig {
  std::vector<std::string> families;  // empty: up to two registered families
  double profile_epsilon = 0.1;
  std::vector<int> profile_ns = {8, 16, 32, 64, 128, 256};
  std::size_t profile_sample = 2000;
  double maxmean_epsilon = 0.1;
  std::size_t maxmean_budget = 50;
  std::size_t maxmean_sample = 1000;
  double net_epsilon = 0.3;
  std::vector<int> net_ns = {8, 16, 32, 64, 128, 256};
  std::size_t net_sample = 1000;
  double equi_epsilon = 0.1;
  int equi_n_max = 256;
  std::size_t equi_sample = 3000;
  VerdictRule rule;
  FolnerOptions folner;
};

/// Scales suited to each built-in system and its group.
CrossValidationConfig default_cross_validation_config(const DynamicalSystem& system);

/// Component verdict reduced to what it says about discrete spectrum.
enum class Polarity { Discrete, NotDiscrete, Undecided };

struct ComponentVerdict {
  std::string component;
  std::string verdict;
  Polarity polarity = Polarity::Undecided;
};

struct ConsistencyReport {
  std::string system;
  GroundTruth ground_truth = GroundTruth::Unknown;
  CrossValidationConfig config;
  std::vector<ComplexityProfile> profiles;
  MaxMeanResult max_mean;
  std::vector<OrbitNetReport> nets;
  EquicontinuityReport mean_equicontinuity;
  EquicontinuityReport in_the_mean;
  std::vector<ComponentVerdict> verdicts;
  ConsistencyStatus status = ConsistencyStatus::Inconclusive;
  bool consistent = false;
  std::string notes;
};

/// Runs every diagnostic and compares the verdicts with each other and with the label.
/// Definite disagreement is Inconsistent; otherwise any undecided component makes the
/// report Inconclusive.
ConsistencyReport cross_validate(const DynamicalSystem& system, const CrossValidationConfig& config, std::uint64_t seed);

}  // namespace meancx
