#pragma once

// Built-in dynamical systems and the name registry.
//
// Registry addresses are "<name>" or "<name>:<params>", parameters comma separated:
//   rotation:alpha=golden            torus-rotation:alpha1=...,alpha2=...
//   kronecker-flow:omega1=...,omega2=...   odometer
//   sturmian:alpha=golden            skew-product:alpha=...
//   bernoulli-shift:Z  (or Z^2, heis3, lamplighter; optional L=<radius>)
//   product:<any address above>
// Numeric parameters accept decimals and the word "golden" for (sqrt 5 - 1)/2.

#include <string>
#include <string_view>
#include <vector>

#include "meancx/system.hpp"

namespace meancx {

inline constexpr double kGoldenAngle = 0.6180339887498948482;

SystemPtr make_rotation(double alpha = kGoldenAngle);
/// Z^2 acting by (m, n)(x, y) = (x + m alpha1, y + n alpha2).
SystemPtr make_torus_rotation(double alpha1 = 0.4142135623730950488, double alpha2 = 0.7320508075688772935);
SystemPtr make_kronecker_flow(double omega1 = kGoldenAngle, double omega2 = 0.4142135623730950488);
/// T(x, y) = (x + alpha, y + x) with the metric (d_circle(x) + d_circle(y)) / 2.
SystemPtr make_skew_product(double alpha = kGoldenAngle);
SystemPtr make_odometer();
SystemPtr make_sturmian(double alpha = kGoldenAngle, int radius = 12);
/// Full shift {0,1}^G with fair-coin measure; radius <= 0 picks the default truncation.
SystemPtr make_bernoulli_shift(const GroupSpec& group, int radius = 0);

/// X x X with the diagonal action, max metric and the product measure.
SystemPtr product_lift(SystemPtr base);

/// Default word-length truncation for sequence metrics: 12 on Z, 6 on Z^2, 4 otherwise.
int default_truncation_radius(const GroupSpec& group);

/// Builds a system from its registry address; throws UnknownNameError.
SystemPtr make_system(std::string_view address);

struct SystemEntry {
  std::string address;
  std::string group;
  GroundTruth truth;
  bool isometric;
};

/// One row per built-in system (products of the base systems included).
std::vector<SystemEntry> list_systems();

/// Addresses of the non-product built-in systems, in listing order.
std::vector<std::string> builtin_addresses();

}  // namespace meancx
