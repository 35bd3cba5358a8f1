#include <gtest/gtest.h>

#include <random>
#include <set>

#include "meancx/folner.hpp"
#include "meancx/group.hpp"
#include "oracles.hpp"

namespace meancx {
namespace {

std::vector<GroupSpec> discrete_groups() {
  return {GroupSpec::integers(), GroupSpec::lattice(2), GroupSpec::heisenberg(), GroupSpec::lamplighter()};
}

TEST(Groups, IntegerArithmetic) {
  const auto z = GroupSpec::integers();
  EXPECT_EQ(z.compose(2, 3), GroupElement(5));
  EXPECT_EQ(z.inverse(5), GroupElement(-5));
  EXPECT_EQ(GroupSpec::lattice(2).identity(), GroupElement::lattice({0, 0}));
}

TEST(Groups, HeisenbergMatchesMatrixProduct) {
  const auto h = GroupSpec::heisenberg();
  EXPECT_EQ(h.compose(GroupElement::heisenberg(1, 0, 0), GroupElement::heisenberg(0, 1, 0)),
            GroupElement::heisenberg(1, 1, 1));
  EXPECT_EQ(h.inverse(GroupElement::heisenberg(1, 1, 1)), GroupElement::heisenberg(-1, -1, 0));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_element(h, rng);
    const auto k = oracle::random_element(h, rng);
    const auto& a = g.as<HeisenbergPoint>();
    const auto& b = k.as<HeisenbergPoint>();
    const auto m = oracle::multiply(oracle::heis_matrix(a.a, a.b, a.c), oracle::heis_matrix(b.a, b.b, b.c));
    EXPECT_EQ(h.compose(g, k), GroupElement::heisenberg(m[0][1], m[1][2], m[0][2]));
  }
}

TEST(Groups, LamplighterMatchesWreathProduct) {
  const auto l = GroupSpec::lamplighter();
  EXPECT_EQ(l.compose(GroupElement::lamp({}, 1), GroupElement::lamp({0}, 0)), GroupElement::lamp({1}, 1));

  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_element(l, rng, 3);
    const auto k = oracle::random_element(l, rng, 3);
    const auto& a = g.as<LampState>();
    const auto& b = k.as<LampState>();
    const auto [lamps, cursor] = oracle::lamp_compose({a.lamps.begin(), a.lamps.end()}, a.cursor,
                                                      {b.lamps.begin(), b.lamps.end()}, b.cursor);
    EXPECT_EQ(l.compose(g, k), GroupElement::lamp({lamps.begin(), lamps.end()}, cursor));
  }
}

TEST(Groups, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(13);
  for (const auto& spec : discrete_groups()) {
    const auto e = spec.identity();
    for (int i = 0; i < 1000; ++i) {
      const auto a = oracle::random_element(spec, rng);
      const auto b = oracle::random_element(spec, rng);
      const auto c = oracle::random_element(spec, rng);
      ASSERT_EQ(spec.compose(spec.compose(a, b), c), spec.compose(a, spec.compose(b, c))) << spec.name();
      ASSERT_EQ(spec.compose(a, spec.inverse(a)), e) << spec.name();
      ASSERT_EQ(spec.compose(spec.inverse(a), a), e) << spec.name();
      ASSERT_EQ(spec.compose(a, e), a) << spec.name();
      ASSERT_EQ(spec.compose(e, a), a) << spec.name();
    }
  }
}

TEST(Groups, MismatchedKindsAreEncodingErrors) {
  const auto z = GroupSpec::integers();
  EXPECT_THROW(z.compose(GroupElement::heisenberg(1, 0, 0), 1), EncodingError);
  EXPECT_THROW(GroupSpec::heisenberg().inverse(GroupElement(3)), EncodingError);
  EXPECT_THROW(GroupSpec::parse("free-group"), UnknownNameError);
}

TEST(Groups, GeneratorsAreSymmetricAndBallsGrow) {
  for (const auto& spec : discrete_groups()) {
    EXPECT_TRUE(spec.generators_valid()) << spec.name();
    std::set<GroupElement> gens(spec.generators().begin(), spec.generators().end());
    for (const auto& g : spec.generators()) EXPECT_TRUE(gens.count(spec.inverse(g))) << spec.name();
    std::size_t previous = 1;
    for (int r = 1; r <= 3; ++r) {
      const auto ball = spec.word_ball(r);
      EXPECT_GT(ball.size(), previous) << spec.name();
      previous = ball.size();
    }
  }
}

TEST(Groups, ParseRoundTrip) {
  for (const auto& spec : discrete_groups()) EXPECT_EQ(GroupSpec::parse(spec.name()), spec);
  EXPECT_EQ(GroupSpec::parse("R-flow"), GroupSpec::real_line());
  EXPECT_FALSE(GroupSpec::real_line().is_discrete());
}

TEST(Folner, SmallWindows) {
  const auto w = folner_window(GroupSpec::integers(), "intervals", 3);
  EXPECT_EQ(w.elements, (std::vector<GroupElement>{0, 1, 2}));
  EXPECT_EQ(folner_window(GroupSpec::lattice(2), "boxes", 2).elements.size(), 4U);
  EXPECT_EQ(folner_window(GroupSpec::heisenberg(), "heis-boxes", 2).elements.size(), 16U);
  EXPECT_THROW(folner_window(GroupSpec::integers(), "boxes", 3), UnknownNameError);
  EXPECT_THROW(folner_window(GroupSpec::integers(), "intervals", 0), std::invalid_argument);
}

TEST(Folner, WindowsAreNonemptyAndGrow) {
  for (const auto& spec : discrete_groups()) {
    for (const auto& family : folner_families(spec)) {
      std::size_t previous = 0;
      for (int n = 1; n <= 6; ++n) {
        const auto w = folner_window(spec, family, n);
        std::set<GroupElement> distinct(w.elements.begin(), w.elements.end());
        EXPECT_EQ(distinct.size(), w.elements.size()) << family;
        EXPECT_GE(w.elements.size(), std::max<std::size_t>(previous, 1)) << family;
        previous = w.elements.size();
      }
    }
  }
  double previous = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto w = folner_window(GroupSpec::real_line(), "intervals", n);
    EXPECT_GT(w.haar_measure(), previous);
    previous = w.haar_measure();
  }
}

TEST(Folner, HeisenbergBoxesGrowLikeFourthPower) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(folner_window(GroupSpec::heisenberg(), "heis-boxes", n).elements.size(),
              static_cast<std::size_t>(n * n * n * n));
  }
}

// |gF Δ F| / |F| recomputed from the window elements by set enumeration.
double enumerated_ratio(const GroupSpec& spec, const FolnerWindow& w, const GroupElement& g) {
  std::set<GroupElement> f(w.elements.begin(), w.elements.end());
  std::size_t outside = 0;
  for (const auto& x : w.elements) outside += f.count(spec.compose(g, x)) == 0;
  return 2.0 * static_cast<double>(outside) / static_cast<double>(f.size());
}

TEST(Folner, RatioExamples) {
  const auto z = GroupSpec::integers();
  const auto f10 = folner_window(z, "intervals", 10);
  EXPECT_DOUBLE_EQ(folner_ratio(z, f10, 1), 0.2);
  EXPECT_DOUBLE_EQ(folner_ratio(z, f10, 0), 0.0);
  const auto z2 = GroupSpec::lattice(2);
  EXPECT_DOUBLE_EQ(folner_ratio(z2, folner_window(z2, "boxes", 4), GroupElement::lattice({1, 0})), 0.5);
}

TEST(Folner, RatiosDecayForEveryGenerator) {
  struct Case {
    GroupSpec spec;
    std::vector<int> ns;
    double bound;  // < bound at the last n
  };
  const std::vector<Case> cases = {
      {GroupSpec::integers(), {8, 16, 32, 64}, 0.1},
      {GroupSpec::lattice(2), {8, 16, 32, 64}, 0.1},
      {GroupSpec::heisenberg(), {2, 4, 8, 16, 32}, 0.1},
      {GroupSpec::lamplighter(), {2, 4, 8, 12}, 1.0},
  };
  for (const auto& c : cases) {
    for (const auto& family : folner_families(c.spec)) {
      for (const auto& g : c.spec.generators()) {
        double previous = 2.0;
        for (int n : c.ns) {
          const auto w = folner_window(c.spec, family, n);
          const double r = folner_ratio(c.spec, w, g);
          if (w.elements.size() <= 100000) {
            EXPECT_DOUBLE_EQ(r, enumerated_ratio(c.spec, w, g)) << family << " n=" << n;
          }
          EXPECT_LE(r, previous) << family << " n=" << n;
          previous = r;
        }
        EXPECT_LT(previous, c.bound) << c.spec.name() << " " << family << " " << g.to_string();
      }
    }
  }
}

TEST(Folner, HeisenbergBoxRatioClosedForm) {
  // Left multiplication by b^{+-1} shifts one box face; a^{+-1} also shears c by b, so
  // |gF \ F| = n^3 + n (n - 1)^2 / 2 out of n^4.
  const auto h = GroupSpec::heisenberg();
  for (int n : {2, 4, 8, 16, 32}) {
    const auto w = folner_window(h, "heis-boxes", n);
    const double m = n;
    for (const auto& g : h.generators()) {
      const bool shears = g.as<HeisenbergPoint>().a != 0;
      const double expected = 2.0 / m + (shears ? (m - 1) * (m - 1) / (m * m * m) : 0.0);
      EXPECT_NEAR(folner_ratio(h, w, g), expected, 1e-15) << n << " " << g.to_string();
    }
  }
}

TEST(Shulman, IntegerIntervalsMatchEnumeration) {
  const auto z = GroupSpec::integers();
  const auto ten = shulman_constant(z, "intervals", 10);
  EXPECT_DOUBLE_EQ(ten.constant, 1.8);
  EXPECT_EQ(ten.argmax, 10);
  EXPECT_FALSE(ten.analytic);
  EXPECT_DOUBLE_EQ(shulman_constant(z, "intervals", 2).constant, 1.0);

  const auto enumerated = oracle::box_shulman_ratios(1, 40);
  const auto forty = shulman_constant(z, "intervals", 40);
  ASSERT_EQ(forty.ratios.size(), enumerated.size());
  for (std::size_t i = 0; i < enumerated.size(); ++i) EXPECT_DOUBLE_EQ(forty.ratios[i], enumerated[i]);
  EXPECT_LE(forty.constant, 2.0);
}

TEST(Shulman, LatticeBoxesMatchEnumeration) {
  const auto z2 = GroupSpec::lattice(2);
  const auto enumerated = oracle::box_shulman_ratios(2, 12);
  const auto r = shulman_constant(z2, "boxes", 12);
  ASSERT_EQ(r.ratios.size(), enumerated.size());
  for (std::size_t i = 0; i < enumerated.size(); ++i) {
    EXPECT_DOUBLE_EQ(r.ratios[i], enumerated[i]);
    const double n = static_cast<double>(i + 2);
    EXPECT_DOUBLE_EQ(r.ratios[i], ((2 * n - 2) / n) * ((2 * n - 2) / n));
  }
  EXPECT_LE(r.constant, 4.0);
  EXPECT_DOUBLE_EQ(shulman_constant(z2, "boxes", 4).constant, 2.25);
}

TEST(Shulman, FlowReportsAnalyticConstant) {
  const auto r = shulman_constant(GroupSpec::real_line(), "intervals", 10);
  EXPECT_TRUE(r.analytic);
  EXPECT_DOUBLE_EQ(r.constant, 2.0);
}

}  // namespace
}  // namespace meancx
