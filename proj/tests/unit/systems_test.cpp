#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "meancx/folner.hpp"
#include "meancx/systems.hpp"
#include "oracles.hpp"

namespace meancx {
namespace {

State circle(double t) { return CirclePoint{to_fixed(t)}; }

std::vector<SystemPtr> all_systems() {
  std::vector<SystemPtr> out;
  for (const auto& row : list_systems()) out.push_back(make_system(row.address));
  return out;
}

// Draws group elements uniformly from the n = 8 window of the default family.
std::vector<GroupElement> window_elements(const DynamicalSystem& s, int n = 8) {
  return folner_window(s.group(), default_family(s.group()), n).elements;
}

TEST(Systems, ApplyExamples) {
  const auto rot = make_rotation(0.25);
  EXPECT_NEAR(from_fixed(rot->apply(2, circle(0.1)).as<CirclePoint>().angle), 0.6, 1e-15);

  const auto skew = make_skew_product(0.25);
  const auto t = skew->apply(1, TorusPoint{to_fixed(0.5), to_fixed(0.0)}).as<TorusPoint>();
  EXPECT_NEAR(from_fixed(t.x), 0.75, 1e-15);
  EXPECT_NEAR(from_fixed(t.y), 0.5, 1e-15);

  const auto z = GroupSpec::integers();
  const auto shift = make_bernoulli_shift(z);
  const auto moved = shift->apply(1, Configuration::with_ones(z, {0})).as<Configuration>();
  EXPECT_TRUE(moved.bit(z, -1));
  EXPECT_FALSE(moved.bit(z, 0));
  for (int k = -5; k <= 5; ++k) EXPECT_EQ(moved.bit(z, k), k == -1) << k;
}

TEST(Systems, MetricExamples) {
  EXPECT_NEAR(make_rotation()->distance(circle(0.1), circle(0.9)), 0.4, 1e-15);

  const auto odo = make_odometer();
  EXPECT_DOUBLE_EQ(odo->distance(AdicWord{0b0000}, AdicWord{0b1000}), 0.125);
  EXPECT_DOUBLE_EQ(odo->distance(AdicWord{0b0101}, AdicWord{0b1101}), 0.125);

  // Inclusive ball |g| <= 12: Z = 3 - 2^-11.
  const auto z = GroupSpec::integers();
  const auto shift = make_bernoulli_shift(z);
  const double expected = oracle::shift_distance(12, {0});
  EXPECT_DOUBLE_EQ(oracle::shift_normaliser(12), 3.0 - std::ldexp(1.0, -11));
  EXPECT_NEAR(shift->distance(Configuration::zeros(z), Configuration::with_ones(z, {0})), expected, 1e-15);
  // The truncation error bounds the gap to the |g| < 12 convention.
  EXPECT_NEAR(expected, 1.0 / (3.0 - std::ldexp(1.0, -10)), shift->truncation_error());
  EXPECT_NEAR(shift->truncation_error(), std::ldexp(1.0, -11) / oracle::shift_normaliser(12), 1e-15);
}

TEST(Systems, SamplerShapesAndMoments) {
  const auto rot = make_rotation();
  const auto three = rot->sample_measure(3, 7);
  ASSERT_EQ(three.size(), 3U);
  for (const auto& s : three.states) {
    const double t = from_fixed(s.as<CirclePoint>().angle);
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 1.0);
  }
  const auto one = make_odometer()->sample_measure(1, 1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_TRUE(one.states[0].holds<AdicWord>());

  const auto big = rot->sample_measure(100000, 3);
  double mean = 0.0;
  for (const auto& s : big.states) mean += from_fixed(s.as<CirclePoint>().angle);
  EXPECT_NEAR(mean / 1e5, 0.5, 0.01);

  EXPECT_EQ(rot->sample_measure(50, 9).states, rot->sample_measure(50, 9).states);
  EXPECT_NE(rot->sample_measure(50, 9).states, rot->sample_measure(50, 10).states);
}

TEST(Systems, InvarianceExamples) {
  const auto rot = make_rotation();
  TestFunction cosine{"cos", [](const State& s) {
                        return std::complex<double>(std::cos(2 * M_PI * from_fixed(s.as<CirclePoint>().angle)), 0);
                      }};
  EXPECT_LT(invariance_check(*rot, 1, cosine, 100000, 5), 0.02);
  const auto shift = make_bernoulli_shift(GroupSpec::integers());
  EXPECT_LT(invariance_check(*shift, 3, find_test_function(*shift, "x_e"), 100000, 5), 0.02);
  for (const auto& s : all_systems()) {
    for (const auto& f : s->test_functions()) {
      EXPECT_EQ(invariance_check(*s, s->group().identity(), f, 1000, 2), 0.0) << s->name() << " " << f.name;
    }
  }
}

TEST(Systems, InvarianceForEveryGenerator) {
  const std::size_t n = 100000;
  const double bound = 5.0 / std::sqrt(static_cast<double>(n));
  for (const auto& address : builtin_addresses()) {
    const auto s = make_system(address);
    for (const auto& g : s->group().generators()) {
      for (const auto& f : s->test_functions()) {
        EXPECT_LT(invariance_check(*s, g, f, n, 17), bound) << address << " " << g.to_string() << " " << f.name;
      }
    }
  }
}

TEST(Systems, MetricAxiomsOnRandomTriples) {
  for (const auto& s : all_systems()) {
    const auto x = s->sample_measure(10000, 21).states;
    const auto y = s->sample_measure(10000, 22).states;
    const auto z = s->sample_measure(10000, 23).states;
    double diameter = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double xy = s->distance(x[i], y[i]);
      ASSERT_EQ(xy, s->distance(y[i], x[i])) << s->name();
      ASSERT_EQ(s->distance(x[i], x[i]), 0.0) << s->name();
      ASSERT_LE(s->distance(x[i], z[i]), xy + s->distance(y[i], z[i]) + 1e-12) << s->name();
      ASSERT_GE(xy, 0.0);
      diameter = std::max(diameter, xy);
    }
    EXPECT_LE(diameter, 1.0) << s->name();
    EXPECT_GE(diameter, 0.5) << s->name();
  }
}

TEST(Systems, ActionLawIsExactOnDiscreteGroups) {
  std::mt19937_64 rng(31);
  for (const auto& s : all_systems()) {
    if (!s->group().is_discrete()) continue;
    const auto window = window_elements(*s);
    std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
    const auto states = s->sample_measure(50, 32).states;
    for (const auto& x : states) {
      const auto& g = window[pick(rng)];
      const auto& h = window[pick(rng)];
      const auto lhs = s->apply(s->group().compose(g, h), x);
      const auto rhs = s->apply(g, s->apply(h, x));
      ASSERT_EQ(s->distance(lhs, rhs), 0.0) << s->name() << " " << g.to_string() << " " << h.to_string();
    }
  }
}

TEST(Systems, FlowActionLawWithinRounding) {
  const auto flow = make_kronecker_flow();
  const auto r = GroupSpec::real_line();
  const auto states = flow->sample_measure(200, 3).states;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> time(-50.0, 50.0);
  for (const auto& x : states) {
    const double s = time(rng);
    const double t = time(rng);
    EXPECT_LT(flow->distance(flow->apply(r.compose(s, t), x), flow->apply(s, flow->apply(t, x))), 1e-12);
  }
}

TEST(Systems, IsometricSystemsPreserveDistances) {
  std::mt19937_64 rng(41);
  for (const auto& s : all_systems()) {
    if (!s->isometric()) continue;
    const auto window = window_elements(*s);
    std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
    const auto x = s->sample_measure(500, 42).states;
    const auto y = s->sample_measure(500, 43).states;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& g = window[pick(rng)];
      ASSERT_NEAR(s->distance(s->apply(g, x[i]), s->apply(g, y[i])), s->distance(x[i], y[i]), 1e-12) << s->name();
    }
  }
}

TEST(Systems, RegistryAndLabels) {
  const auto rows = list_systems();
  EXPECT_GE(rows.size(), 14U);
  EXPECT_EQ(builtin_addresses().size(), 10U);
  EXPECT_EQ(make_system("rotation")->ground_truth(), GroundTruth::DiscreteSpectrum);
  EXPECT_EQ(make_system("bernoulli-shift:heis3")->ground_truth(), GroundTruth::NotDiscreteSpectrum);
  EXPECT_EQ(make_system("skew-product")->ground_truth(), GroundTruth::NotDiscreteSpectrum);
  EXPECT_FALSE(make_system("sturmian")->isometric());
  EXPECT_TRUE(make_system("odometer")->isometric());
  EXPECT_THROW(make_system("cat-map"), UnknownNameError);
  EXPECT_THROW(make_system("bernoulli-shift:free"), UnknownNameError);

  const auto lifted = product_lift(make_rotation());
  EXPECT_TRUE(lifted->isometric());
  EXPECT_EQ(lifted->ground_truth(), GroundTruth::DiscreteSpectrum);

  const auto relabeled = relabel(make_rotation(), GroundTruth::NotDiscreteSpectrum);
  EXPECT_EQ(relabeled->ground_truth(), GroundTruth::NotDiscreteSpectrum);
  EXPECT_EQ(relabeled->name(), "rotation");

  EXPECT_EQ(default_truncation_radius(GroupSpec::integers()), 12);
  EXPECT_EQ(default_truncation_radius(GroupSpec::lattice(2)), 6);
  EXPECT_EQ(default_truncation_radius(GroupSpec::heisenberg()), 4);
}

TEST(Systems, ProductUsesMaxMetric) {
  const auto base = make_rotation();
  const auto lifted = product_lift(base);
  const auto a = State::pair(circle(0.1), circle(0.3));
  const auto b = State::pair(circle(0.2), circle(0.8));
  EXPECT_NEAR(lifted->distance(a, b), std::max(0.2, 1.0), 1e-12);
  const auto moved = lifted->apply(3, a).as<StatePair>();
  EXPECT_EQ(*moved.first, base->apply(3, circle(0.1)));
  EXPECT_EQ(*moved.second, base->apply(3, circle(0.3)));
}

}  // namespace
}  // namespace meancx
