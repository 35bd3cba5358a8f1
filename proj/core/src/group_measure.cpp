#include "meancx/group_measure.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace meancx {

GroupMeasure::GroupMeasure(std::vector<WeightedElement> support, MeasureTag tag)
    : support_(std::move(support)), tag_(std::move(tag)) {
  if (support_.empty()) throw std::invalid_argument("group measure needs a nonempty support");
  double total = 0.0;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  for (const auto& [g, w] : support_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("group measure weights must be positive");
    if (!seen.insert(g).second) throw std::invalid_argument("repeated support element " + g.to_string());
    total += w;
  }
  // Recursive summation of k weights is off by at most about k ulps.
  const double slack = 1e-12 + static_cast<double>(support_.size()) * std::numeric_limits<double>::epsilon();
  if (std::abs(total - 1.0) > slack) {
    throw std::invalid_argument("group measure weights sum to " + std::to_string(total) + ", not 1");
  }
}

std::vector<GroupElement> GroupMeasure::elements() const {
  std::vector<GroupElement> out;
  out.reserve(support_.size());
  for (const auto& s : support_) out.push_back(s.element);
  return out;
}

std::vector<double> GroupMeasure::weights() const {
  std::vector<double> out;
  out.reserve(support_.size());
  for (const auto& s : support_) out.push_back(s.weight);
  return out;
}

std::string GroupMeasure::tag_name() const {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, UniformOnSet>) return "UniformOnSet";
        if constexpr (std::is_same_v<T, FolnerHaar>) return "FolnerHaar";
        if constexpr (std::is_same_v<T, FlowQuadrature>) return "FlowQuadrature";
        return "Custom";
      },
      tag_);
}

GroupMeasure uniform_on(std::span<const GroupElement> set) {
  if (set.empty()) throw std::invalid_argument("uniform_on needs a nonempty set");
  const double w = 1.0 / static_cast<double>(set.size());
  std::vector<WeightedElement> support;
  support.reserve(set.size());
  for (const auto& g : set) support.push_back({g, w});
  return GroupMeasure(std::move(support), UniformOnSet{});
}

GroupMeasure haar_on(const FolnerWindow& window) {
  if (window.elements.empty()) throw std::invalid_argument("haar_on needs a nonempty window");
  std::vector<WeightedElement> support;
  support.reserve(window.elements.size());
  if (window.interval) {
    const auto& iv = *window.interval;
    const std::size_t last = window.elements.size() - 1;
    const double interior = iv.step / iv.length;
    for (std::size_t k = 0; k <= last; ++k) {
      const bool end = k == 0 || k == last;
      support.push_back({window.elements[k], end ? 0.5 * interior : interior});
    }
    return GroupMeasure(std::move(support), FlowQuadrature{iv.start, iv.length, iv.step});
  }
  const double w = 1.0 / static_cast<double>(window.elements.size());
  for (const auto& g : window.elements) support.push_back({g, w});
  return GroupMeasure(std::move(support), FolnerHaar{window.family, window.index});
}

GroupMeasure dirac(const GroupElement& g) { return GroupMeasure({{g, 1.0}}, UniformOnSet{}); }

GroupMeasure mix(const GroupSpec& group, const GroupMeasure& a, const GroupMeasure& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("mixing weight must lie in [0,1]");
  std::vector<WeightedElement> support;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
  auto add = [&](const GroupMeasure& m, double scale) {
    if (scale == 0.0) return;
    for (const auto& [g, w] : m.support()) {
      group.require(g);
      auto [it, inserted] = index.emplace(g, support.size());
      if (inserted) {
        support.push_back({g, scale * w});
      } else {
        support[it->second].weight += scale * w;
      }
    }
  };
  add(a, lambda);
  add(b, 1.0 - lambda);
  return GroupMeasure(std::move(support), CustomMeasure{});
}

GroupMeasure right_translate(const GroupSpec& group, const GroupMeasure& rho, const GroupElement& h) {
  std::vector<WeightedElement> support;
  support.reserve(rho.size());
  for (const auto& [g, w] : rho.support()) support.push_back({group.compose(g, h), w});
  MeasureTag tag = std::holds_alternative<UniformOnSet>(rho.tag()) ? MeasureTag{UniformOnSet{}} : MeasureTag{CustomMeasure{}};
  return GroupMeasure(std::move(support), tag);
}

}  // namespace meancx
