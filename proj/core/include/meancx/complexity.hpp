#pragma once

// Sample estimates of the measure complexity S_rho(X, mu, G, eps): the least number of
// open d_rho-balls of radius eps whose union has mass > 1 - eps.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "meancx/folner.hpp"
#include "meancx/group_measure.hpp"
#include "meancx/system.hpp"

namespace meancx {

enum class Verdict { Bounded, Unbounded, Inconclusive };
std::string to_string(Verdict v);

struct ComplexityEstimate {
  double epsilon = 0.0;
  /// Greedy cover by eps-balls centred at sample points, stopped once mass > 1 - eps.
  std::size_t upper_count = 0;
  /// Greedy 2 eps-separated set inside the covered region; each ball holds at most one.
  std::size_t lower_count = 0;
  /// Maximal eps-separated subset of the whole sample, taken in index order.
  std::size_t packing_count = 0;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  double mass_covered = 0.0;
  /// The cover needed more than (1 - eps) N / 2 balls, so the sample no longer resolves
  /// the count and it should be read as a lower bound.
  bool saturated = false;
  std::vector<std::size_t> centers;
};

/// Smallest admissible sample size for eps: ceil(100 / eps).
std::size_t required_sample_size(double epsilon);

/// Throws SampleSizeError when the sample is smaller than required_sample_size(eps).
ComplexityEstimate covering_estimate(const DynamicalSystem& system, const GroupMeasure& rho, double epsilon,
                                     const PointSample& sample);

/// One estimate per epsilon from a single distance pass over the sample.
std::vector<ComplexityEstimate> covering_estimates(const DynamicalSystem& system, const GroupMeasure& rho,
                                                   std::span<const double> epsilons, const PointSample& sample);

/// Finite proxy for "bounded in n". Defaults are reported alongside every verdict.
struct VerdictRule {
  double theta = 1.25;   // last <= theta * middle
  std::size_t stability = 2;  // last three entries within this spread
  double growth = 2.0;   // total growth of an increasing run that counts as unbounded
  std::size_t run = 3;   // strictly increasing steps that count as unbounded
};

/// Rule on a sequence of counts indexed by increasing n:
///  - Unbounded when some strictly increasing run of at least `run` steps grows by `growth`.
///  - With saturated entries: Unbounded when the first saturated count is at least
///    `growth` times the first count, else Inconclusive.
///  - Bounded when last <= theta * middle, the last three lie within `stability` of each
///    other, and they are not strictly increasing.
///  - Inconclusive otherwise.
Verdict boundedness_verdict(std::span<const std::size_t> counts, const VerdictRule& rule = {},
                            std::span<const bool> saturated = {});

struct ProfileEntry {
  int n = 0;
  std::size_t window_size = 0;
  ComplexityEstimate estimate;
};

struct ComplexityProfile {
  std::string system;
  std::string family;
  double epsilon = 0.0;
  std::vector<ProfileEntry> entries;
  Verdict verdict = Verdict::Inconclusive;
  double growth_ratio = 1.0;  // last upper count / first upper count
  VerdictRule rule;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  double truncation_error = 0.0;
};

Verdict boundedness_verdict(const ComplexityProfile& profile, const VerdictRule& rule);

/// Covering estimates along F_n for n in `ns` (strictly increasing), rho = Haar on F_n,
/// all windows on the same sample.
ComplexityProfile folner_profile(const DynamicalSystem& system, std::string_view family, double epsilon,
                                 std::span<const int> ns, std::size_t sample_size, std::uint64_t seed,
                                 const VerdictRule& rule = {}, const FolnerOptions& options = {});

/// Same as folner_profile for several epsilons, sharing one distance pass per window.
std::vector<ComplexityProfile> folner_profiles(const DynamicalSystem& system, std::string_view family,
                                               std::span<const double> epsilons, std::span<const int> ns,
                                               std::size_t sample_size, std::uint64_t seed,
                                               const VerdictRule& rule = {}, const FolnerOptions& options = {});

struct CandidateSet {
  std::string family;  // identity, folner-translate, ball-subset, lacunary, progression
  std::vector<GroupElement> elements;
};

struct CandidateResult {
  CandidateSet set;
  ComplexityEstimate estimate;
};

struct MaxMeanResult {
  std::string system;
  double epsilon = 0.0;
  std::size_t budget = 0;
  CandidateSet worst;
  ComplexityEstimate worst_estimate;
  ComplexityEstimate identity_estimate;
  std::vector<CandidateResult> candidates;
  std::vector<std::string> families;
  /// Largest upper count among candidates with |E| in [2^b, 2^{b+1}), b = 0, 1, ...
  std::vector<std::size_t> size_profile;
  Verdict verdict = Verdict::Inconclusive;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
};

/// Candidate sets for a group: {e} first, then the other families in rotation.
std::vector<CandidateSet> max_mean_candidates(const GroupSpec& group, std::size_t budget, std::uint64_t seed);

/// Maximises the covering estimate over rho_E for the candidate sets E. The verdict
/// applies boundedness_verdict to size_profile.
MaxMeanResult max_mean_search(const DynamicalSystem& system, double epsilon, std::size_t budget,
                              std::size_t sample_size, std::uint64_t seed, const VerdictRule& rule = {});

struct TranslatePair {
  ComplexityEstimate base;        // rho_E
  ComplexityEstimate translated;  // rho_{Eh}
};

TranslatePair translate_invariance_check(const DynamicalSystem& system, std::span<const GroupElement> set,
                                         const GroupElement& h, double epsilon, std::size_t sample_size,
                                         std::uint64_t seed);

}  // namespace meancx
