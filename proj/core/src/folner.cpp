#include "meancx/folner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace meancx {

namespace {

using ElementSet = std::unordered_set<GroupElement, GroupElementHash>;

// Odometer over a box of side lengths, calling `emit` with each lattice point.
template <class Emit>
void for_each_box_point(int dim, std::int64_t lo, std::int64_t hi, Emit&& emit) {
  LatticePoint p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i) p.coords[i] = lo;
  while (true) {
    emit(p);
    int i = 0;
    while (i < dim) {
      if (++p.coords[i] < hi) break;
      p.coords[i] = lo;
      ++i;
    }
    if (i == dim) return;
  }
}

std::vector<GroupElement> lamplighter_window(int n) {
  // Inverse of the standard box {(A, m): A in [0,n), m in [0,n)}: cursor in (-n, 0],
  // lamps inside [cursor, cursor + n). Left translates by the generators move it by a
  // boundary layer only.
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n) << n);
  for (std::int64_t m = 0; m > -n; --m) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::int64_t> lamps;
      for (int b = 0; b < n; ++b) {
        if (mask >> b & 1U) lamps.push_back(m + b);
      }
      out.emplace_back(LampState{std::move(lamps), m});
    }
  }
  return out;
}

}  // namespace

double FolnerWindow::haar_measure() const {
  if (interval) return interval->length;
  return static_cast<double>(elements.size());
}

std::vector<std::string> folner_families(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::IntegerLine:
      return {"intervals", "centered"};
    case GroupKind::IntegerLattice:
      return {"boxes", "centered-boxes"};
    case GroupKind::HeisenbergDiscrete:
      return {"heis-boxes"};
    case GroupKind::Lamplighter:
      return {"lamp-std"};
    case GroupKind::RealLineFlow:
      return {"intervals", "centered"};
  }
  return {};
}

std::string default_family(const GroupSpec& spec) { return folner_families(spec).front(); }

bool has_family(const GroupSpec& spec, std::string_view family) {
  if (spec.kind() == GroupKind::HeisenbergDiscrete && family == "boxes") return true;
  auto families = folner_families(spec);
  return std::find(families.begin(), families.end(), family) != families.end();
}

FolnerWindow folner_window(const GroupSpec& spec, std::string_view family, int n, const FolnerOptions& options) {
  if (!has_family(spec, family)) {
    throw UnknownNameError("family '" + std::string(family) + "' is not registered for group " + spec.name());
  }
  if (n < 1) throw std::invalid_argument("Følner window index must be >= 1");

  FolnerWindow w;
  w.family = std::string(family);
  w.index = n;
  switch (spec.kind()) {
    case GroupKind::IntegerLine:
      if (family == "intervals") {
        for (std::int64_t k = 0; k < n; ++k) w.elements.emplace_back(k);
      } else {
        for (std::int64_t k = -n; k <= n; ++k) w.elements.emplace_back(k);
      }
      break;
    case GroupKind::IntegerLattice: {
      const bool centered = family == "centered-boxes";
      const std::int64_t lo = centered ? -n : 0;
      const std::int64_t hi = centered ? n + 1 : n;
      for_each_box_point(spec.dimension(), lo, hi, [&](const LatticePoint& p) { w.elements.emplace_back(p); });
      break;
    }
    case GroupKind::HeisenbergDiscrete: {
      const std::int64_t m = n;
      w.elements.reserve(static_cast<std::size_t>(m * m * m * m));
      for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b)
          for (std::int64_t c = 0; c < m * m; ++c) w.elements.push_back(GroupElement::heisenberg(a, b, c));
      break;
    }
    case GroupKind::Lamplighter:
      if (n > 16) throw std::invalid_argument("lamplighter windows are limited to n <= 16");
      w.elements = lamplighter_window(n);
      break;
    case GroupKind::RealLineFlow: {
      if (!(options.flow_step > 0.0)) throw std::invalid_argument("flow grid step must be positive");
      FlowInterval iv;
      iv.step = options.flow_step;
      iv.length = family == "intervals" ? n : 2.0 * n;
      iv.start = family == "intervals" ? 0.0 : -static_cast<double>(n);
      const auto cells = static_cast<std::int64_t>(std::llround(iv.length / iv.step));
      if (cells < 1 || std::abs(static_cast<double>(cells) * iv.step - iv.length) > 1e-9 * iv.length) {
        throw std::invalid_argument("flow grid step must divide the window length");
      }
      for (std::int64_t k = 0; k <= cells; ++k) {
        w.elements.emplace_back(iv.start + static_cast<double>(k) * iv.step);
      }
      w.interval = iv;
      break;
    }
  }
  return w;
}

double folner_ratio(const GroupSpec& spec, const FolnerWindow& window, const GroupElement& g) {
  spec.require(g);
  if (window.elements.empty()) throw std::invalid_argument("Følner ratio of an empty window");
  if (window.interval) {
    const double shift = std::abs(g.as<double>());
    return 2.0 * std::min(shift, window.interval->length) / window.interval->length;
  }
  ElementSet base(window.elements.begin(), window.elements.end());
  std::size_t outside = 0;
  for (const auto& f : window.elements) {
    if (!base.contains(spec.compose(g, f))) ++outside;
  }
  // |gF \ F| = |F \ gF| since left translation preserves counting measure.
  return 2.0 * static_cast<double>(outside) / static_cast<double>(window.elements.size());
}

ShulmanResult shulman_constant(const GroupSpec& spec, std::string_view family, int max_index) {
  if (max_index < 2) throw std::invalid_argument("Shulman prefix needs N >= 2");
  if (!has_family(spec, family)) {
    throw UnknownNameError("family '" + std::string(family) + "' is not registered for group " + spec.name());
  }
  ShulmanResult result;
  if (!spec.is_discrete()) {
    // Intervals of growing length: U_{k<n} F_k^{-1} F_n has length T_{n-1} + T_n <= 2 T_n.
    result.constant = 2.0;
    result.analytic = true;
    return result;
  }

  // Inverses of the windows seen so far, accumulated as n grows.
  ElementSet inverses;
  for (int n = 2; n <= max_index; ++n) {
    for (const auto& f : folner_window(spec, family, n - 1).elements) inverses.insert(spec.inverse(f));
    const auto window = folner_window(spec, family, n);
    ElementSet product;
    for (const auto& a : inverses) {
      for (const auto& b : window.elements) product.insert(spec.compose(a, b));
    }
    const double ratio = static_cast<double>(product.size()) / static_cast<double>(window.elements.size());
    result.ratios.push_back(ratio);
    if (ratio > result.constant) {
      result.constant = ratio;
      result.argmax = n;
    }
  }
  return result;
}

}  // namespace meancx
