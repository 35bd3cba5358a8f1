// Circle and torus systems in 64-bit fixed point. Every action here adds a fixed-point
// offset (plus, for the skew product, an exact multiple of the first coordinate), so
// differences of images are computed exactly modulo 1.

#include <cmath>
#include <numbers>

#include "meancx/systems.hpp"
#include "system_util.hpp"

namespace meancx {

namespace {

using detail::character;
using detail::circle_bump;
using detail::format_double;

Fixed times(std::int64_t n, Fixed a) { return static_cast<Fixed>(n) * a; }

// Orbit table for actions by translations of a compact abelian group with an invariant
// metric: d(g x, g y) = d(x, y) exactly, so every element distance equals the base one.
template <class Point, class Metric>
class TranslationTable final : public OrbitTable {
 public:
  TranslationTable(const GroupMeasure& rho, std::span<const State> states, Metric metric)
      : OrbitTable(rho.weights(), states.size()), metric_(metric) {
    points_.reserve(states.size());
    for (const auto& s : states) points_.push_back(s.as<Point>());
  }

  double element_distance(std::size_t i, std::size_t j, std::size_t) const override {
    return metric_(points_[i], points_[j]);
  }
  bool orbit_invariant() const override { return true; }
  double mean_distance(std::size_t i, std::size_t j) const override { return metric_(points_[i], points_[j]); }
  void mean_row(std::size_t i, std::size_t first, std::size_t last, double* out) const override {
    const Point p = points_[i];
    for (std::size_t j = first; j < last; ++j) out[j - first] = metric_(p, points_[j]);
  }

 private:
  Metric metric_;
  std::vector<Point> points_;
};

double circle_metric(CirclePoint a, CirclePoint b) { return 2.0 * circle_gap(a.angle, b.angle); }

double torus_metric(TorusPoint a, TorusPoint b) {
  return 2.0 * std::max(circle_gap(a.x, b.x), circle_gap(a.y, b.y));
}

// Function objects so the orbit tables inline the metric.
struct CircleMetric {
  double operator()(CirclePoint a, CirclePoint b) const noexcept { return circle_metric(a, b); }
};
struct TorusMetric {
  double operator()(TorusPoint a, TorusPoint b) const noexcept { return torus_metric(a, b); }
};

std::vector<TestFunction> circle_functions() {
  auto angle = [](const State& s) { return s.as<CirclePoint>().angle; };
  return {
      {"char1", [angle](const State& s) { return character(angle(s)); }, 1.0},
      {"char2", [angle](const State& s) { return character(2 * angle(s)); }, 1.0},
      {"cos1", [angle](const State& s) { return std::complex<double>(character(angle(s)).real(), 0.0); }, 1.0},
      {"tent", [angle](const State& s) { return std::complex<double>(2.0 * circle_gap(angle(s), 0), 0.0); }, 1.0},
      {"bump", [angle](const State& s) { return std::complex<double>(circle_bump(angle(s), Fixed{1} << 62, 0.125), 0.0); },
       1.0},
      {"const", [](const State&) { return std::complex<double>(1.0, 0.0); }, 1.0},
  };
}

std::vector<TestFunction> torus_functions() {
  auto pt = [](const State& s) { return s.as<TorusPoint>(); };
  return {
      {"char10", [pt](const State& s) { return character(pt(s).x); }, 1.0},
      {"char01", [pt](const State& s) { return character(pt(s).y); }, 1.0},
      {"char11", [pt](const State& s) { return character(pt(s).x + pt(s).y); }, 1.0},
      {"cos01", [pt](const State& s) { return std::complex<double>(character(pt(s).y).real(), 0.0); }, 1.0},
      {"bump",
       [pt](const State& s) {
         const auto p = pt(s);
         return std::complex<double>(circle_bump(p.x, Fixed{1} << 62, 0.25) * circle_bump(p.y, Fixed{1} << 63, 0.25), 0.0);
       },
       1.0},
      {"const", [](const State&) { return std::complex<double>(1.0, 0.0); }, 1.0},
  };
}

std::vector<State> draw_circle(std::size_t count, std::uint64_t seed) {
  detail::Draws draws(seed);
  std::vector<State> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(CirclePoint{draws.next()});
  return out;
}

std::vector<State> draw_torus(std::size_t count, std::uint64_t seed) {
  detail::Draws draws(seed);
  std::vector<State> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Fixed x = draws.next();
    out.emplace_back(TorusPoint{x, draws.next()});
  }
  return out;
}

class Rotation final : public DynamicalSystem {
 public:
  explicit Rotation(double alpha)
      : DynamicalSystem("rotation", GroupSpec::integers(), GroundTruth::DiscreteSpectrum, true),
        alpha_(alpha),
        step_(to_fixed(alpha)) {}

  std::vector<std::pair<std::string, std::string>> parameters() const override {
    return {{"alpha", format_double(alpha_)}};
  }
  State apply(const GroupElement& g, const State& x) const override {
    return CirclePoint{x.as<CirclePoint>().angle + times(g.as<std::int64_t>(), step_)};
  }
  double distance(const State& x, const State& y) const override {
    return circle_metric(x.as<CirclePoint>(), y.as<CirclePoint>());
  }
  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override { return draw_circle(count, seed); }
  std::vector<TestFunction> test_functions() const override { return circle_functions(); }
  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override {
    for (const auto& s : rho.support()) group().require(s.element);
    return std::make_unique<TranslationTable<CirclePoint, CircleMetric>>(rho, states, CircleMetric{});
  }

 private:
  double alpha_;
  Fixed step_;
};

class TorusRotation final : public DynamicalSystem {
 public:
  TorusRotation(double a1, double a2)
      : DynamicalSystem("torus-rotation", GroupSpec::lattice(2), GroundTruth::DiscreteSpectrum, true),
        a1_(a1),
        a2_(a2),
        s1_(to_fixed(a1)),
        s2_(to_fixed(a2)) {}

  std::vector<std::pair<std::string, std::string>> parameters() const override {
    return {{"alpha1", format_double(a1_)}, {"alpha2", format_double(a2_)}};
  }
  State apply(const GroupElement& g, const State& x) const override {
    const auto& v = g.as<LatticePoint>();
    if (v.dim != 2) throw EncodingError("torus-rotation acts by Z^2");
    const auto p = x.as<TorusPoint>();
    return TorusPoint{p.x + times(v.coords[0], s1_), p.y + times(v.coords[1], s2_)};
  }
  double distance(const State& x, const State& y) const override {
    return torus_metric(x.as<TorusPoint>(), y.as<TorusPoint>());
  }
  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override { return draw_torus(count, seed); }
  std::vector<TestFunction> test_functions() const override { return torus_functions(); }
  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override {
    for (const auto& s : rho.support()) group().require(s.element);
    return std::make_unique<TranslationTable<TorusPoint, TorusMetric>>(rho, states, TorusMetric{});
  }

 private:
  double a1_, a2_;
  Fixed s1_, s2_;
};

class KroneckerFlow final : public DynamicalSystem {
 public:
  KroneckerFlow(double w1, double w2)
      : DynamicalSystem("kronecker-flow", GroupSpec::real_line(), GroundTruth::DiscreteSpectrum, true), w1_(w1), w2_(w2) {}

  std::vector<std::pair<std::string, std::string>> parameters() const override {
    return {{"omega1", format_double(w1_)}, {"omega2", format_double(w2_)}};
  }
  State apply(const GroupElement& g, const State& x) const override {
    const long double t = g.as<double>();
    const auto p = x.as<TorusPoint>();
    return TorusPoint{p.x + to_fixed(t * static_cast<long double>(w1_)), p.y + to_fixed(t * static_cast<long double>(w2_))};
  }
  double distance(const State& x, const State& y) const override {
    return torus_metric(x.as<TorusPoint>(), y.as<TorusPoint>());
  }
  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override { return draw_torus(count, seed); }
  std::vector<TestFunction> test_functions() const override { return torus_functions(); }
  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override {
    for (const auto& s : rho.support()) group().require(s.element);
    return std::make_unique<TranslationTable<TorusPoint, TorusMetric>>(rho, states, TorusMetric{});
  }

 private:
  double w1_, w2_;
};

// T^n(x, y) - T^n(x', y') = (dx, dy + n dx) exactly in fixed point.
class SkewTable final : public OrbitTable {
 public:
  SkewTable(const GroupMeasure& rho, std::span<const State> states) : OrbitTable(rho.weights(), states.size()) {
    for (const auto& s : rho.support()) steps_.push_back(static_cast<Fixed>(s.element.as<std::int64_t>()));
    xs_.reserve(states.size());
    ys_.reserve(states.size());
    for (const auto& s : states) {
      const auto p = s.as<TorusPoint>();
      xs_.push_back(p.x);
      ys_.push_back(p.y);
    }
  }

  double element_distance(std::size_t i, std::size_t j, std::size_t k) const override {
    const Fixed dx = xs_[i] - xs_[j];
    const Fixed dy = ys_[i] - ys_[j];
    return circle_gap(dx, 0) + circle_gap(dy + steps_[k] * dx, 0);
  }
  double mean_distance(std::size_t i, std::size_t j) const override {
    const Fixed dx = xs_[i] - xs_[j];
    const Fixed dy = ys_[i] - ys_[j];
    double total = 0.0;
    for (std::size_t k = 0; k < steps_.size(); ++k) total += weights_[k] * circle_gap(dy + steps_[k] * dx, 0);
    return circle_gap(dx, 0) + total;
  }

 private:
  std::vector<Fixed> steps_;
  std::vector<Fixed> xs_, ys_;
};

class SkewProduct final : public DynamicalSystem {
 public:
  explicit SkewProduct(double alpha)
      : DynamicalSystem("skew-product", GroupSpec::integers(), GroundTruth::NotDiscreteSpectrum, false),
        alpha_(alpha),
        step_(to_fixed(alpha)) {}

  std::vector<std::pair<std::string, std::string>> parameters() const override {
    return {{"alpha", format_double(alpha_)}};
  }
  State apply(const GroupElement& g, const State& x) const override {
    const std::int64_t n = g.as<std::int64_t>();
    const auto p = x.as<TorusPoint>();
    // T^n(x, y) = (x + n a, y + n x + n(n-1)/2 a); n(n-1)/2 is an integer for every n.
    const std::int64_t tri = (n % 2 == 0) ? (n / 2) * (n - 1) : n * ((n - 1) / 2);
    return TorusPoint{p.x + times(n, step_), p.y + times(n, p.x) + times(tri, step_)};
  }
  double distance(const State& x, const State& y) const override {
    const auto a = x.as<TorusPoint>();
    const auto b = y.as<TorusPoint>();
    return circle_gap(a.x, b.x) + circle_gap(a.y, b.y);
  }
  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override { return draw_torus(count, seed); }
  std::vector<TestFunction> test_functions() const override { return torus_functions(); }
  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override {
    for (const auto& s : rho.support()) group().require(s.element);
    return std::make_unique<SkewTable>(rho, states);
  }

 private:
  double alpha_;
  Fixed step_;
};

}  // namespace

SystemPtr make_rotation(double alpha) { return std::make_shared<Rotation>(alpha); }
SystemPtr make_torus_rotation(double alpha1, double alpha2) { return std::make_shared<TorusRotation>(alpha1, alpha2); }
SystemPtr make_kronecker_flow(double omega1, double omega2) { return std::make_shared<KroneckerFlow>(omega1, omega2); }
SystemPtr make_skew_product(double alpha) { return std::make_shared<SkewProduct>(alpha); }

}  // namespace meancx
