#pragma once

// Built-in countable amenable groups (plus the real-line flow) and their element
// arithmetic. Haar measure is counting measure on every discrete kind and Lebesgue
// length on the flow.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "meancx/error.hpp"

namespace meancx {

enum class GroupKind { IntegerLine, IntegerLattice, HeisenbergDiscrete, Lamplighter, RealLineFlow };

inline constexpr int kMaxLatticeDim = 6;

struct LatticePoint {
  std::array<std::int64_t, kMaxLatticeDim> coords{};
  int dim = 0;

  auto operator<=>(const LatticePoint&) const = default;
};

/// Upper unitriangular matrix [[1,a,c],[0,1,b],[0,0,1]].
struct HeisenbergPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  auto operator<=>(const HeisenbergPoint&) const = default;
};

/// Lamplighter element: finite set of lit lamps (sorted, unique) and the cursor position.
struct LampState {
  std::vector<std::int64_t> lamps;
  std::int64_t cursor = 0;

  auto operator<=>(const LampState&) const = default;
};

class GroupElement {
 public:
  using Value = std::variant<std::int64_t, LatticePoint, HeisenbergPoint, LampState, double>;

  GroupElement() = default;
  GroupElement(std::int64_t n) : value_(n) {}  // NOLINT: integers are the common case
  GroupElement(int n) : value_(static_cast<std::int64_t>(n)) {}  // NOLINT
  GroupElement(LatticePoint p) : value_(p) {}  // NOLINT
  GroupElement(HeisenbergPoint p) : value_(p) {}  // NOLINT
  GroupElement(LampState s) : value_(std::move(s)) {}  // NOLINT
  GroupElement(double t) : value_(t) {}  // NOLINT

  static GroupElement lattice(std::initializer_list<std::int64_t> coords);
  static GroupElement heisenberg(std::int64_t a, std::int64_t b, std::int64_t c) {
    return GroupElement(HeisenbergPoint{a, b, c});
  }
  static GroupElement lamp(std::vector<std::int64_t> lamps, std::int64_t cursor);

  const Value& value() const noexcept { return value_; }

  template <class T>
  const T& as() const;
  template <class T>
  bool holds() const noexcept {
    return std::holds_alternative<T>(value_);
  }

  bool operator==(const GroupElement& other) const = default;
  bool operator<(const GroupElement& other) const { return value_ < other.value_; }

  std::uint64_t hash() const noexcept;
  std::string to_string() const;

 private:
  Value value_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return static_cast<std::size_t>(g.hash()); }
};

class GroupSpec {
 public:
  static GroupSpec integers();
  static GroupSpec lattice(int dim);
  static GroupSpec heisenberg();
  static GroupSpec lamplighter();
  static GroupSpec real_line();

  /// Parses the stable names "Z", "Z^d", "heis3", "lamplighter", "R-flow".
  static GroupSpec parse(std::string_view name);

  GroupKind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return dim_; }
  bool is_discrete() const noexcept { return kind_ != GroupKind::RealLineFlow; }
  std::string name() const;

  const std::vector<GroupElement>& generators() const noexcept { return generators_; }

  GroupElement identity() const;
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  bool accepts(const GroupElement& g) const noexcept;
  /// Throws EncodingError when `g` is not an element of this group.
  void require(const GroupElement& g) const;

  /// Elements of word length <= radius for the standard generating set, in BFS order,
  /// each paired with its word length. Discrete kinds only.
  std::vector<std::pair<GroupElement, int>> word_ball(int radius) const;

  /// Symmetric generating set whose balls grow for radii 1..3.
  bool generators_valid() const;

  bool operator==(const GroupSpec& other) const noexcept { return kind_ == other.kind_ && dim_ == other.dim_; }

 private:
  GroupSpec(GroupKind kind, int dim);

  GroupKind kind_;
  int dim_;
  std::vector<GroupElement> generators_;
};

// Free-function spellings of the group operations.
inline GroupElement compose(const GroupSpec& spec, const GroupElement& g, const GroupElement& h) {
  return spec.compose(g, h);
}
inline GroupElement inverse(const GroupSpec& spec, const GroupElement& g) { return spec.inverse(g); }
inline GroupElement identity(const GroupSpec& spec) { return spec.identity(); }

template <class T>
const T& GroupElement::as() const {
  if (const T* p = std::get_if<T>(&value_)) return *p;
  throw EncodingError("group element has the wrong encoding: " + to_string());
}

}  // namespace meancx
