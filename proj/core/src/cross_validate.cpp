#include <sstream>

#include "meancx/spectrum.hpp"

namespace meancx {

std::string to_string(ConsistencyStatus s) {
  switch (s) {
    case ConsistencyStatus::Consistent:
      return "Consistent";
    case ConsistencyStatus::Inconsistent:
      return "Inconsistent";
    case ConsistencyStatus::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

CrossValidationConfig default_cross_validation_config(const DynamicalSystem& system) {
  CrossValidationConfig c;
  const GroupSpec& group = system.group();
  // Windows reach far enough for orbit nets to settle; scales keep the first window
  // resolvable on the sample for shifts over the larger groups.
  switch (group.kind()) {
    case GroupKind::IntegerLine:
    case GroupKind::RealLineFlow:
      c.profile_ns = {1, 2, 4, 8, 16, 32, 64, 128, 256};
      c.net_ns = {64, 128, 256, 512, 1024, 2048};
      break;
    case GroupKind::IntegerLattice:
      c.profile_epsilon = 0.3;
      c.maxmean_epsilon = 0.3;
      c.profile_ns = {1, 2, 3, 4, 6, 8};
      c.net_ns = {4, 8, 16, 32, 48, 64};
      c.equi_n_max = 16;
      break;
    case GroupKind::HeisenbergDiscrete:
      c.profile_epsilon = 0.4;
      c.maxmean_epsilon = 0.4;
      c.profile_ns = {1, 2, 3, 4};
      c.net_ns = {1, 2, 3, 4};
      c.equi_n_max = 4;
      break;
    case GroupKind::Lamplighter:
      c.profile_epsilon = 0.3;
      c.maxmean_epsilon = 0.3;
      c.profile_ns = {1, 2, 3, 4, 5, 6};
      c.net_ns = {1, 2, 3, 4, 5, 6};
      c.equi_n_max = 6;
      break;
  }
  return c;
}

namespace {

Polarity polarity(Verdict v) {
  switch (v) {
    case Verdict::Bounded:
      return Polarity::Discrete;
    case Verdict::Unbounded:
      return Polarity::NotDiscrete;
    default:
      return Polarity::Undecided;
  }
}

Polarity polarity(NetVerdict v) {
  switch (v) {
    case NetVerdict::Precompact:
      return Polarity::Discrete;
    case NetVerdict::NotPrecompact:
      return Polarity::NotDiscrete;
    default:
      return Polarity::Undecided;
  }
}

Polarity polarity(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return Polarity::Discrete;
    case Outcome::Fail:
      return Polarity::NotDiscrete;
    default:
      return Polarity::Undecided;
  }
}

}  // namespace

ConsistencyReport cross_validate(const DynamicalSystem& system, const CrossValidationConfig& config, std::uint64_t seed) {
  ConsistencyReport report;
  report.system = system.spec_string();
  report.ground_truth = system.ground_truth();
  report.config = config;

  std::vector<std::string> families = config.families;
  if (families.empty()) {
    families = folner_families(system.group());
    if (families.size() > 2) families.resize(2);
  }
  report.config.families = families;

  const double profile_eps[] = {config.profile_epsilon};
  for (const auto& family : families) {
    auto profiles = folner_profiles(system, family, profile_eps, config.profile_ns, config.profile_sample, seed,
                                    config.rule, config.folner);
    report.profiles.push_back(std::move(profiles.front()));
    const auto& p = report.profiles.back();
    report.verdicts.push_back({"profile:" + family, to_string(p.verdict), polarity(p.verdict)});
  }

  report.max_mean = max_mean_search(system, config.maxmean_epsilon, config.maxmean_budget, config.maxmean_sample,
                                    seed + 1, config.rule);
  report.verdicts.push_back({"max-mean", to_string(report.max_mean.verdict), polarity(report.max_mean.verdict)});

  report.nets = orbit_net_profiles(system, families.front(), config.net_epsilon, config.net_ns, config.net_sample,
                                   seed + 2, config.rule, config.folner);
  const NetVerdict nets = combine(report.nets);
  report.verdicts.push_back({"orbit-net", to_string(nets), polarity(nets)});

  const double equi_eps[] = {config.equi_epsilon};
  report.mean_equicontinuity = equicontinuity_test(system, families.front(), equi_eps, config.equi_sample,
                                                   config.equi_n_max, seed + 3, EquicontinuityMode::MeanLimsup, {},
                                                   config.folner);
  report.in_the_mean = equicontinuity_test(system, families.front(), equi_eps, config.equi_sample, config.equi_n_max,
                                           seed + 3, EquicontinuityMode::InTheMean, {}, config.folner);
  const Outcome limsup = report.mean_equicontinuity.results.front().outcome;
  const Outcome in_mean = report.in_the_mean.results.front().outcome;
  report.verdicts.push_back({"mean-equicontinuity", to_string(limsup), polarity(limsup)});
  report.verdicts.push_back({"equicontinuity-in-mean", to_string(in_mean), polarity(in_mean)});

  bool saw_discrete = false;
  bool saw_not = false;
  bool undecided = false;
  for (const auto& v : report.verdicts) {
    saw_discrete = saw_discrete || v.polarity == Polarity::Discrete;
    saw_not = saw_not || v.polarity == Polarity::NotDiscrete;
    undecided = undecided || v.polarity == Polarity::Undecided;
  }
  const bool label_discrete = report.ground_truth == GroundTruth::DiscreteSpectrum;
  const bool label_not = report.ground_truth == GroundTruth::NotDiscreteSpectrum;
  std::ostringstream notes;
  if (saw_discrete && saw_not) {
    report.status = ConsistencyStatus::Inconsistent;
    notes << "components disagree with each other";
  } else if ((label_discrete && saw_not) || (label_not && saw_discrete)) {
    report.status = ConsistencyStatus::Inconsistent;
    notes << "components disagree with the ground-truth label " << to_string(report.ground_truth);
  } else if (undecided) {
    report.status = ConsistencyStatus::Inconclusive;
    notes << "at least one component is inconclusive";
  } else if (report.ground_truth == GroundTruth::Unknown) {
    report.status = ConsistencyStatus::Consistent;
    notes << "components agree; no ground-truth label to compare";
  } else {
    report.status = ConsistencyStatus::Consistent;
    notes << "all components agree with " << to_string(report.ground_truth);
  }
  report.consistent = report.status == ConsistencyStatus::Consistent;
  report.notes = notes.str();
  return report;
}

}  // namespace meancx
