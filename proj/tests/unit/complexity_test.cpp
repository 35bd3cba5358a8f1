#include <gtest/gtest.h>

#include <array>
#include <bit>
#include <random>

#include "meancx/complexity.hpp"
#include "meancx/folner.hpp"
#include "meancx/systems.hpp"
#include "oracles.hpp"

namespace meancx {
namespace {

GroupMeasure random_subset_measure(const GroupSpec& spec, std::mt19937_64& rng, int max_size = 6) {
  std::uniform_int_distribution<int> size(1, max_size);
  std::vector<GroupElement> set;
  const int k = size(rng);
  while (static_cast<int>(set.size()) < k) {
    auto g = oracle::random_element(spec, rng, 4);
    if (std::find(set.begin(), set.end(), g) == set.end()) set.push_back(std::move(g));
  }
  return uniform_on(set);
}

std::vector<std::size_t> counts(const ComplexityProfile& p) {
  std::vector<std::size_t> out;
  for (const auto& e : p.entries) out.push_back(e.estimate.upper_count);
  return out;
}

TEST(Covering, CircleOracle) {
  EXPECT_EQ(oracle::circle_cover_count(1, 10), 10U);
  EXPECT_EQ(oracle::circle_cover_count(1, 20), 20U);
  EXPECT_EQ(oracle::circle_cover_count(1, 8), 8U);

  const auto rot = make_rotation();
  const auto sample = rot->sample_measure(10000, 1);
  std::mt19937_64 rng(61);
  for (int i = 0; i < 5; ++i) {
    const auto e = covering_estimate(*rot, random_subset_measure(rot->group(), rng), 0.1, sample);
    EXPECT_GE(e.upper_count, 8U);
    EXPECT_LE(e.upper_count, 12U);
    EXPECT_GT(e.mass_covered, 0.9);
    EXPECT_LE(e.lower_count, e.upper_count);
    EXPECT_EQ(e.centers.size(), e.upper_count);
  }
}

TEST(Covering, SinglePointSample) {
  const auto rot = make_rotation();
  PointSample sample{std::vector<State>(1000, State(CirclePoint{to_fixed(0.3)})), 0};
  const auto e = covering_estimate(*rot, dirac(0), 0.1, sample);
  EXPECT_EQ(e.upper_count, 1U);
  EXPECT_EQ(e.mass_covered, 1.0);
}

TEST(Covering, RefusesSmallSamples) {
  const auto rot = make_rotation();
  EXPECT_EQ(required_sample_size(0.1), 1000U);
  EXPECT_EQ(required_sample_size(0.2), 500U);
  try {
    covering_estimate(*rot, dirac(0), 0.1, rot->sample_measure(999, 1));
    FAIL() << "expected SampleSizeError";
  } catch (const SampleSizeError& e) {
    EXPECT_EQ(e.required(), 1000U);
  }
  EXPECT_NO_THROW(covering_estimate(*rot, dirac(0), 0.1, rot->sample_measure(1000, 1)));
}

TEST(Covering, BernoulliMatchesBruteForce) {
  // Frozen from the exhaustive greedy cover of {0,1}^[-6, m+6).
  const std::vector<std::size_t> exact = {10, 12, 16};
  const std::vector<int> ms = {1, 2, 4};
  for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(oracle::bernoulli_cover_count(ms[i], 6, 0.2), exact[i]);

  const auto shift = make_bernoulli_shift(GroupSpec::integers(), 6);
  const auto sample = shift->sample_measure(20000, 7);
  std::size_t previous = 0;
  for (int m : {1, 2, 4, 8}) {
    const auto e = covering_estimate(*shift, haar_on(folner_window(shift->group(), "intervals", m)), 0.2, sample);
    EXPECT_GT(e.upper_count, previous) << "m=" << m;
    previous = e.upper_count;
    if (m <= 4) {
      const auto reference = static_cast<double>(exact[static_cast<std::size_t>(std::countr_zero(unsigned(m)))]);
      EXPECT_LE(static_cast<double>(e.upper_count), 2.0 * reference) << "m=" << m;
      EXPECT_GE(2.0 * static_cast<double>(e.upper_count), reference) << "m=" << m;
    }
  }
}

TEST(Covering, EstimatorLaws) {
  // Monotonicity in eps, the packing/covering sandwich, and determinism on random cases.
  std::mt19937_64 rng(62);
  const auto addresses = builtin_addresses();
  std::uniform_int_distribution<std::size_t> pick(0, addresses.size() - 1);
  std::uniform_real_distribution<double> scale(0.2, 0.45);
  std::vector<SystemPtr> systems;
  for (const auto& a : addresses) systems.push_back(make_system(a));
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& s = systems[pick(rng)];
    const auto rho = s->group().is_discrete() ? random_subset_measure(s->group(), rng, 4)
                                              : haar_on(folner_window(s->group(), "intervals", 2));
    const double eps = scale(rng);
    const std::vector<double> scales = {eps, std::min(2 * eps, 0.95)};
    const auto sample = s->sample_measure(required_sample_size(eps), 1000 + static_cast<std::uint64_t>(trial));
    const auto both = covering_estimates(*s, rho, scales, sample);
    const auto& at = both[0];
    const auto& doubled = both[1];
    ASSERT_GE(at.upper_count, doubled.upper_count) << s->name() << " trial " << trial;
    // lower_count is the 2 eps packing of the covered region.
    ASSERT_LE(at.lower_count, at.upper_count) << s->name() << " trial " << trial;
    ASSERT_LE(at.upper_count, at.packing_count) << s->name() << " trial " << trial;
    if (trial % 10 == 0) {
      const auto again = covering_estimate(*s, rho, eps, sample);
      ASSERT_EQ(again.upper_count, at.upper_count);
      ASSERT_EQ(again.centers, at.centers);
      ASSERT_EQ(again.mass_covered, at.mass_covered);
    }
  }
}

TEST(Covering, SeedDeterminism) {
  const auto s = make_system("sturmian");
  const auto rho = haar_on(folner_window(s->group(), "intervals", 16));
  const auto a = covering_estimate(*s, rho, 0.1, s->sample_measure(2000, 5));
  const auto b = covering_estimate(*s, rho, 0.1, s->sample_measure(2000, 5));
  EXPECT_EQ(a.upper_count, b.upper_count);
  EXPECT_EQ(a.lower_count, b.lower_count);
  EXPECT_EQ(a.packing_count, b.packing_count);
  EXPECT_EQ(a.centers, b.centers);
  EXPECT_EQ(a.mass_covered, b.mass_covered);
}

TEST(Covering, IsometricCountIgnoresRho) {
  std::mt19937_64 rng(63);
  for (const char* address : {"rotation", "odometer", "torus-rotation"}) {
    const auto s = make_system(address);
    const auto sample = s->sample_measure(2000, 3);
    const auto reference = covering_estimate(*s, dirac(s->group().identity()), 0.1, sample).upper_count;
    for (int i = 0; i < 50; ++i) {
      const auto e = covering_estimate(*s, random_subset_measure(s->group(), rng), 0.1, sample);
      EXPECT_LE(e.upper_count, reference + 2) << address;
      EXPECT_GE(e.upper_count + 2, reference) << address;
    }
  }
}

TEST(Covering, ProductCountBoundedBySquare) {
  const auto base = make_rotation();
  const auto lifted = product_lift(base);
  for (int n : {1, 8, 64}) {
    const auto rho = haar_on(folner_window(base->group(), "intervals", n));
    const auto b = covering_estimate(*base, rho, 0.1, base->sample_measure(2000, 4));
    const auto p = covering_estimate(*lifted, rho, 0.1, lifted->sample_measure(2000, 4));
    EXPECT_LE(p.upper_count, (b.upper_count + 2) * (b.upper_count + 2)) << n;
    EXPECT_GE(p.upper_count, b.upper_count) << n;
  }
}

TEST(Verdict, RuleExamples) {
  const std::vector<std::size_t> flat = {10, 10, 11, 10};
  const std::vector<std::size_t> growing = {12, 25, 60, 130};
  const std::vector<std::size_t> creeping = {10, 14, 15, 16};
  EXPECT_EQ(boundedness_verdict(flat), Verdict::Bounded);
  EXPECT_EQ(boundedness_verdict(growing), Verdict::Unbounded);
  EXPECT_EQ(boundedness_verdict(creeping), Verdict::Inconclusive);

  const std::vector<std::size_t> warmup_then_flat = {16, 32, 49, 51, 57, 58, 58, 62};
  EXPECT_NE(boundedness_verdict(warmup_then_flat), Verdict::Unbounded);
  const std::vector<std::size_t> capped = {40, 300, 480, 480};
  const std::array<bool, 4> saturated = {false, true, true, true};
  EXPECT_EQ(boundedness_verdict(capped, {}, saturated), Verdict::Unbounded);
  const std::vector<std::size_t> capped_early = {470, 480, 480, 480};
  const std::array<bool, 4> all_saturated = {true, true, true, true};
  EXPECT_EQ(boundedness_verdict(capped_early, {}, all_saturated), Verdict::Inconclusive);
}

TEST(Profile, RotationIsFlat) {
  const auto rot = make_rotation();
  const std::vector<int> ns = {8, 16, 32, 64, 128, 256};
  const auto p = folner_profile(*rot, "intervals", 0.1, ns, 10000, 1);
  ASSERT_EQ(p.entries.size(), ns.size());
  for (const auto& e : p.entries) {
    EXPECT_GE(e.estimate.upper_count, 8U);
    EXPECT_LE(e.estimate.upper_count, 12U);
    EXPECT_EQ(e.window_size, static_cast<std::size_t>(e.n));
  }
  EXPECT_EQ(p.verdict, Verdict::Bounded);
  EXPECT_EQ(p.system, rot->spec_string());
  EXPECT_EQ(p.family, "intervals");
}

TEST(Profile, OdometerIsFlatAtOneEighth) {
  // Balls of radius 1/8 are the depth-4 cylinders, each of mass 1/16.
  std::size_t exact = 1;
  while (exact * 8 <= 16 * 7) ++exact;  // K / 16 > 1 - 1/8
  EXPECT_EQ(exact, 15U);
  const auto odo = make_odometer();
  const std::vector<int> ns = {8, 16, 32, 64, 128, 256};
  const auto p = folner_profile(*odo, "intervals", 0.125, ns, 4000, 2);
  for (const auto& e : p.entries) {
    EXPECT_LE(e.estimate.upper_count, exact + 2);
    EXPECT_GE(e.estimate.upper_count + 2, exact);
  }
  EXPECT_EQ(p.verdict, Verdict::Bounded);
}

TEST(Profile, BernoulliGrows) {
  const auto shift = make_bernoulli_shift(GroupSpec::integers());
  const std::vector<int> ns = {2, 4, 8, 16};
  const auto p = folner_profile(*shift, "intervals", 0.2, ns, 2000, 1);
  const auto c = counts(p);
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_GT(c[i], c[i - 1]);
  EXPECT_EQ(p.verdict, Verdict::Unbounded);
  EXPECT_GT(p.growth_ratio, 2.0);
}

TEST(Profile, SharedPassMatchesSingleScale) {
  const auto s = make_system("skew-product");
  const std::vector<int> ns = {4, 8, 16};
  const std::vector<double> scales = {0.1, 0.2};
  const auto many = folner_profiles(*s, "intervals", scales, ns, 1000, 3);
  ASSERT_EQ(many.size(), 2U);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const auto one = folner_profile(*s, "intervals", scales[i], ns, 1000, 3);
    EXPECT_EQ(counts(one), counts(many[i]));
  }
}

TEST(Profile, RejectsBadIndexLists) {
  const auto rot = make_rotation();
  const std::vector<int> unordered = {8, 4};
  EXPECT_THROW(folner_profile(*rot, "intervals", 0.1, unordered, 1000, 1), std::invalid_argument);
  const std::vector<int> ok = {1, 2};
  EXPECT_THROW(folner_profile(*rot, "boxes", 0.1, ok, 1000, 1), UnknownNameError);
}

TEST(MaxMean, IdentityComesFirst) {
  for (const auto& spec : {GroupSpec::integers(), GroupSpec::lattice(2), GroupSpec::heisenberg(),
                           GroupSpec::lamplighter(), GroupSpec::real_line()}) {
    const auto c = max_mean_candidates(spec, 20, 1);
    ASSERT_FALSE(c.empty());
    EXPECT_EQ(c.front().family, "identity");
    EXPECT_EQ(c.front().elements, std::vector<GroupElement>{spec.identity()});
    EXPECT_LE(c.size(), 20U);
  }
}

TEST(MaxMean, RotationIsFlat) {
  const auto rot = make_rotation();
  const auto r = max_mean_search(*rot, 0.1, 30, 2000, 1);
  EXPECT_GE(r.worst_estimate.upper_count, 8U);
  EXPECT_LE(r.worst_estimate.upper_count, 12U);
  const auto statics = covering_estimate(*rot, dirac(0), 0.1, rot->sample_measure(2000, 1));
  EXPECT_EQ(r.identity_estimate.upper_count, statics.upper_count);
  EXPECT_EQ(r.verdict, Verdict::Bounded);
  EXPECT_FALSE(r.families.empty());
  EXPECT_EQ(r.candidates.size(), 30U);
}

TEST(MaxMean, BernoulliBeatsIdentity) {
  const auto shift = make_bernoulli_shift(GroupSpec::integers());
  const auto r = max_mean_search(*shift, 0.2, 20, 1000, 1);
  EXPECT_GE(r.worst_estimate.upper_count, 2 * r.identity_estimate.upper_count);
  EXPECT_NE(r.verdict, Verdict::Bounded);
}

TEST(Translate, Examples) {
  const auto rot = make_rotation();
  const std::vector<GroupElement> e3 = {0, 1, 2};
  const auto r = translate_invariance_check(*rot, e3, 5, 0.1, 10000, 1);
  for (const auto* e : {&r.base, &r.translated}) {
    EXPECT_GE(e->upper_count, 8U);
    EXPECT_LE(e->upper_count, 12U);
  }
  EXPECT_LE(std::max(r.base.upper_count, r.translated.upper_count) -
                std::min(r.base.upper_count, r.translated.upper_count),
            2U);

  const auto shift = make_bernoulli_shift(GroupSpec::integers());
  const std::vector<GroupElement> e4 = {0, 1, 2, 3};
  const auto same = translate_invariance_check(*shift, e4, 0, 0.2, 2000, 1);
  EXPECT_EQ(same.base.upper_count, same.translated.upper_count);
  const auto moved = translate_invariance_check(*shift, e4, 3, 0.2, 2000, 1);
  EXPECT_LE(std::max(moved.base.upper_count, moved.translated.upper_count) -
                std::min(moved.base.upper_count, moved.translated.upper_count),
            2U);
}

TEST(Translate, TransportedSampleGivesIdenticalCounts) {
  // With the sample pushed forward by h, rho_{Eh} on x_i sees exactly the distances
  // rho_E sees on h x_i, so the greedy covers coincide.
  const auto shift = make_bernoulli_shift(GroupSpec::lattice(2));
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_subset_measure(shift->group(), rng, 4);
    const auto h = oracle::random_word(shift->group(), rng, 3);
    const auto sample = shift->sample_measure(1000, 70 + static_cast<std::uint64_t>(trial));
    PointSample pushed{{}, sample.seed};
    for (const auto& x : sample.states) pushed.states.push_back(shift->apply(h, x));
    const auto a = covering_estimate(*shift, right_translate(shift->group(), rho, h), 0.3, sample);
    const auto b = covering_estimate(*shift, rho, 0.3, pushed);
    EXPECT_EQ(a.upper_count, b.upper_count);
    EXPECT_EQ(a.centers, b.centers);
  }
}

}  // namespace
}  // namespace meancx
