#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "meancx/folner.hpp"
#include "meancx/group.hpp"

namespace meancx {

struct UniformOnSet {
  bool operator==(const UniformOnSet&) const = default;
};
struct FolnerHaar {
  std::string family;
  int index = 0;
  bool operator==(const FolnerHaar&) const = default;
};
struct FlowQuadrature {
  double start = 0.0;
  double length = 0.0;
  double step = 0.0;
  bool operator==(const FlowQuadrature&) const = default;
};
struct CustomMeasure {
  bool operator==(const CustomMeasure&) const = default;
};

using MeasureTag = std::variant<UniformOnSet, FolnerHaar, FlowQuadrature, CustomMeasure>;

struct WeightedElement {
  GroupElement element;
  double weight = 0.0;
  bool operator==(const WeightedElement&) const = default;
};

/// Finitely supported probability measure on a group. Weights are positive, sum to 1
/// within 1e-12, and the support has no repeats.
class GroupMeasure {
 public:
  GroupMeasure(std::vector<WeightedElement> support, MeasureTag tag);

  const std::vector<WeightedElement>& support() const noexcept { return support_; }
  const MeasureTag& tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return support_.size(); }

  std::vector<GroupElement> elements() const;
  std::vector<double> weights() const;
  std::string tag_name() const;

  bool operator==(const GroupMeasure&) const = default;

 private:
  std::vector<WeightedElement> support_;
  MeasureTag tag_;
};

/// rho_E: equal weights on a nonempty set of distinct elements.
GroupMeasure uniform_on(std::span<const GroupElement> set);

/// Normalised Haar measure on a Følner window: counting measure on discrete kinds,
/// trapezoid weights on the flow grid.
GroupMeasure haar_on(const FolnerWindow& window);

GroupMeasure dirac(const GroupElement& g);

/// lambda * a + (1 - lambda) * b, merging repeated elements.
GroupMeasure mix(const GroupSpec& group, const GroupMeasure& a, const GroupMeasure& b, double lambda);

/// Push-forward under right translation g -> g h; sends rho_E to rho_{Eh}.
GroupMeasure right_translate(const GroupSpec& group, const GroupMeasure& rho, const GroupElement& h);

}  // namespace meancx
