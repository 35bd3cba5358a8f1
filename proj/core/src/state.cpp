#include "meancx/state.hpp"

#include <algorithm>
#include <cmath>

#include "hashing.hpp"

namespace meancx {

Fixed to_fixed(long double t) noexcept {
  long double frac = t - std::floor(t);
  long double scaled = std::ldexp(frac, 64);
  if (!(scaled < 18446744073709551616.0L)) return 0;  // frac rounded up to 1
  if (scaled < 0.0L) return 0;
  return static_cast<Fixed>(scaled);
}

Fixed to_fixed(double t) noexcept { return to_fixed(static_cast<long double>(t)); }

bool random_bit(std::uint64_t seed, std::uint64_t coordinate_hash) noexcept {
  return (detail::mix64(seed ^ detail::mix64(coordinate_hash)) >> 63) != 0;
}

Configuration Configuration::zeros(const GroupSpec& group) {
  Configuration c;
  c.offset = group.identity();
  return c;
}

Configuration Configuration::with_ones(const GroupSpec& group, std::vector<GroupElement> ones) {
  for (const auto& g : ones) group.require(g);
  std::sort(ones.begin(), ones.end());
  ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
  Configuration c = zeros(group);
  c.ones = std::move(ones);
  return c;
}

Configuration Configuration::fair_bits(const GroupSpec& group, std::uint64_t seed) {
  Configuration c = zeros(group);
  c.seed = seed;
  c.random = true;
  return c;
}

bool Configuration::base_bit(const GroupElement& coordinate) const {
  bool b = random && random_bit(seed, coordinate.hash());
  if (!ones.empty() && std::binary_search(ones.begin(), ones.end(), coordinate)) b = !b;
  return b;
}

bool Configuration::bit(const GroupSpec& group, const GroupElement& coordinate) const {
  return base_bit(group.compose(coordinate, offset));
}

bool StatePair::operator==(const StatePair& other) const {
  if (!first || !second || !other.first || !other.second) {
    return first == other.first && second == other.second;
  }
  return *first == *other.first && *second == *other.second;
}

State State::pair(State a, State b) {
  return State(StatePair{std::make_shared<const State>(std::move(a)), std::make_shared<const State>(std::move(b))});
}

}  // namespace meancx
