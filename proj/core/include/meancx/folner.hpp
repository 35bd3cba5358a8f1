#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meancx/group.hpp"

namespace meancx {

/// Interval [start, start + length] sampled on a uniform grid (real-line flow windows).
struct FlowInterval {
  double start = 0.0;
  double length = 0.0;
  double step = 0.5;
};

/// The n-th set of a named Følner family. For the flow, `elements` holds the
/// quadrature grid of `interval`.
struct FolnerWindow {
  std::string family;
  int index = 0;
  std::vector<GroupElement> elements;
  std::optional<FlowInterval> interval;

  /// Counting measure on discrete kinds, Lebesgue length on the flow.
  double haar_measure() const;
};

struct FolnerOptions {
  double flow_step = 0.5;
};

/// Families registered for `spec`; the first is the default.
std::vector<std::string> folner_families(const GroupSpec& spec);
std::string default_family(const GroupSpec& spec);
bool has_family(const GroupSpec& spec, std::string_view family);

/// Throws UnknownNameError for an unregistered family and std::invalid_argument for n < 1.
FolnerWindow folner_window(const GroupSpec& spec, std::string_view family, int n, const FolnerOptions& options = {});

/// |gF Δ F| / |F| under Haar measure.
double folner_ratio(const GroupSpec& spec, const FolnerWindow& window, const GroupElement& g);

struct ShulmanResult {
  double constant = 0.0;
  int argmax = 0;         // window index achieving the maximum
  bool analytic = false;  // true when reported from the closed form rather than enumeration
  std::vector<double> ratios;  // ratio for n = 2..N (empty when analytic)
};

/// max over 2 <= n <= N of |U_{k<n} F_k^{-1} F_n| / |F_n| by exact enumeration. The flow
/// reports the analytic constant 2 of its interval family instead.
ShulmanResult shulman_constant(const GroupSpec& spec, std::string_view family, int max_index);

}  // namespace meancx
