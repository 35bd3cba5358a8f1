#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "meancx/group.hpp"

namespace meancx {

// Circle coordinates are stored in 64-bit fixed point: the point t in [0,1) is the
// integer floor(t * 2^64). Rotation is then wrap-around addition and composes exactly.
using Fixed = std::uint64_t;

Fixed to_fixed(double t) noexcept;        // t reduced mod 1
Fixed to_fixed(long double t) noexcept;
inline double from_fixed(Fixed u) noexcept { return static_cast<double>(u) * 0x1p-64; }  // in [0,1)

/// Half the circle distance, in [0, 1/2].
inline double circle_gap(Fixed a, Fixed b) noexcept {
  const Fixed d = a - b;
  const Fixed e = Fixed{0} - d;
  return from_fixed(d < e ? d : e);
}

struct CirclePoint {
  Fixed angle = 0;
  bool operator==(const CirclePoint&) const = default;
};

struct TorusPoint {
  Fixed x = 0;
  Fixed y = 0;
  bool operator==(const TorusPoint&) const = default;
};

/// First 64 binary digits of a 2-adic integer; digit i is bit i.
struct AdicWord {
  std::uint64_t digits = 0;
  bool operator==(const AdicWord&) const = default;
};

/// A point of {0,1}^G. Coordinate h reads base(h * offset), where base is an i.i.d.
/// fair-bit field keyed by `seed` (when `random`) XOR-ed with the explicit `ones`.
/// The left shift g acts by offset -> g * offset, so (g x)_h = x_{h g}.
struct Configuration {
  std::uint64_t seed = 0;
  bool random = false;
  std::vector<GroupElement> ones;  // sorted, unique
  GroupElement offset;

  static Configuration zeros(const GroupSpec& group);
  static Configuration with_ones(const GroupSpec& group, std::vector<GroupElement> ones);
  static Configuration fair_bits(const GroupSpec& group, std::uint64_t seed);

  bool base_bit(const GroupElement& coordinate) const;
  bool bit(const GroupSpec& group, const GroupElement& coordinate) const;

  bool operator==(const Configuration&) const = default;
};

/// Fair bit of the random field at a coordinate with precomputed hash.
bool random_bit(std::uint64_t seed, std::uint64_t coordinate_hash) noexcept;

struct State;

struct StatePair {
  std::shared_ptr<const State> first;
  std::shared_ptr<const State> second;
  bool operator==(const StatePair& other) const;
};

struct State {
  using Value = std::variant<CirclePoint, TorusPoint, AdicWord, Configuration, StatePair>;
  Value value;

  State() = default;
  State(CirclePoint p) : value(p) {}  // NOLINT
  State(TorusPoint p) : value(p) {}  // NOLINT
  State(AdicWord w) : value(w) {}  // NOLINT
  State(Configuration c) : value(std::move(c)) {}  // NOLINT
  State(StatePair p) : value(std::move(p)) {}  // NOLINT

  static State pair(State a, State b);

  template <class T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&value)) return *p;
    throw EncodingError("state has the wrong encoding for this system");
  }
  template <class T>
  bool holds() const noexcept {
    return std::holds_alternative<T>(value);
  }

  bool operator==(const State& other) const { return value == other.value; }
};

}  // namespace meancx
