// The dyadic adding machine on the first 64 binary digits. Adding an integer is
// two's-complement addition, so the action and its inverse are exact.

#include <bit>

#include "meancx/systems.hpp"
#include "system_util.hpp"

namespace meancx {

namespace {

double adic_metric(AdicWord a, AdicWord b) {
  const std::uint64_t diff = a.digits ^ b.digits;
  if (diff == 0) return 0.0;
  return std::ldexp(1.0, -std::countr_zero(diff));
}

class OdometerTable final : public OrbitTable {
 public:
  OdometerTable(const GroupMeasure& rho, std::span<const State> states) : OrbitTable(rho.weights(), states.size()) {
    words_.reserve(states.size());
    for (const auto& s : states) words_.push_back(s.as<AdicWord>());
  }
  double element_distance(std::size_t i, std::size_t j, std::size_t) const override {
    return adic_metric(words_[i], words_[j]);
  }
  bool orbit_invariant() const override { return true; }
  double mean_distance(std::size_t i, std::size_t j) const override { return adic_metric(words_[i], words_[j]); }
  void mean_row(std::size_t i, std::size_t first, std::size_t last, double* out) const override {
    for (std::size_t j = first; j < last; ++j) out[j - first] = adic_metric(words_[i], words_[j]);
  }

 private:
  std::vector<AdicWord> words_;
};

std::complex<double> real(double v) { return {v, 0.0}; }

class Odometer final : public DynamicalSystem {
 public:
  Odometer() : DynamicalSystem("odometer", GroupSpec::integers(), GroundTruth::DiscreteSpectrum, true) {}

  double truncation_error() const override { return std::ldexp(1.0, -64); }
  std::vector<std::pair<std::string, std::string>> parameters() const override { return {{"W", "64"}}; }

  State apply(const GroupElement& g, const State& x) const override {
    return AdicWord{x.as<AdicWord>().digits + static_cast<std::uint64_t>(g.as<std::int64_t>())};
  }
  double distance(const State& x, const State& y) const override {
    return adic_metric(x.as<AdicWord>(), y.as<AdicWord>());
  }
  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override {
    detail::Draws draws(seed);
    std::vector<State> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(AdicWord{draws.next()});
    return out;
  }
  std::vector<TestFunction> test_functions() const override {
    auto word = [](const State& s) { return s.as<AdicWord>().digits; };
    // x mod 2^k read as a phase: the eigenfunctions of the adding machine.
    auto phase = [word](const State& s, int k) { return word(s) << (64 - k); };
    return {
        {"digit0", [word](const State& s) { return real(static_cast<double>(word(s) & 1U)); }, 1.0},
        {"digit1", [word](const State& s) { return real(static_cast<double>((word(s) >> 1) & 1U)); }, 1.0},
        {"digit2", [word](const State& s) { return real(static_cast<double>((word(s) >> 2) & 1U)); }, 1.0},
        {"char8", [phase](const State& s) { return detail::character(phase(s, 3)); }, 1.0},
        {"cylinder", [word](const State& s) { return real((word(s) & 3U) == 1U ? 1.0 : 0.0); }, 1.0},
        {"const", [](const State&) { return real(1.0); }, 1.0},
    };
  }
  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override {
    for (const auto& s : rho.support()) group().require(s.element);
    return std::make_unique<OdometerTable>(rho, states);
  }
};

}  // namespace

SystemPtr make_odometer() { return std::make_shared<Odometer>(); }

}  // namespace meancx
