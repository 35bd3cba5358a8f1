#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "meancx/state.hpp"

namespace meancx::detail {

/// Shortest decimal that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

/// e^{2 pi i t} for a fixed-point phase t.
inline std::complex<double> character(Fixed phase) {
  const double angle = 2.0 * std::numbers::pi * from_fixed(phase);
  return {std::cos(angle), std::sin(angle)};
}

/// Tent bump of height 1 and half-width `width` centred at `centre` on the circle.
inline double circle_bump(Fixed x, Fixed centre, double width) {
  return std::max(0.0, 1.0 - circle_gap(x, centre) / width);
}

/// Independent raw 64-bit draws; mt19937_64 output is specified by the standard, so
/// samples are identical across platforms.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace meancx::detail
