#include "meancx/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "hashing.hpp"

namespace meancx {

namespace {

// Symmetric difference of two sorted, unique lamp sets.
std::vector<std::int64_t> toggle(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::int64_t> shifted(const std::vector<std::int64_t>& lamps, std::int64_t by) {
  std::vector<std::int64_t> out(lamps);
  for (auto& p : out) p += by;
  return out;
}

}  // namespace

GroupElement GroupElement::lattice(std::initializer_list<std::int64_t> coords) {
  if (coords.size() == 0 || coords.size() > static_cast<std::size_t>(kMaxLatticeDim)) {
    throw EncodingError("lattice points need 1.." + std::to_string(kMaxLatticeDim) + " coordinates");
  }
  LatticePoint p;
  p.dim = static_cast<int>(coords.size());
  std::copy(coords.begin(), coords.end(), p.coords.begin());
  return GroupElement(p);
}

GroupElement GroupElement::lamp(std::vector<std::int64_t> lamps, std::int64_t cursor) {
  std::sort(lamps.begin(), lamps.end());
  // A lamp toggled twice is off.
  std::vector<std::int64_t> unique;
  for (std::size_t i = 0; i < lamps.size();) {
    std::size_t j = i;
    while (j < lamps.size() && lamps[j] == lamps[i]) ++j;
    if ((j - i) % 2 == 1) unique.push_back(lamps[i]);
    i = j;
  }
  return GroupElement(LampState{std::move(unique), cursor});
}

std::uint64_t GroupElement::hash() const noexcept {
  using detail::hash_combine;
  std::uint64_t h = hash_combine(0x6d65616e6378ULL, value_.index());
  std::visit(
      [&h](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          h = hash_combine(h, static_cast<std::uint64_t>(v));
        } else if constexpr (std::is_same_v<T, LatticePoint>) {
          h = hash_combine(h, static_cast<std::uint64_t>(v.dim));
          for (int i = 0; i < v.dim; ++i) h = hash_combine(h, static_cast<std::uint64_t>(v.coords[i]));
        } else if constexpr (std::is_same_v<T, HeisenbergPoint>) {
          h = hash_combine(h, static_cast<std::uint64_t>(v.a));
          h = hash_combine(h, static_cast<std::uint64_t>(v.b));
          h = hash_combine(h, static_cast<std::uint64_t>(v.c));
        } else if constexpr (std::is_same_v<T, LampState>) {
          h = hash_combine(h, static_cast<std::uint64_t>(v.cursor));
          h = hash_combine(h, v.lamps.size());
          for (auto p : v.lamps) h = hash_combine(h, static_cast<std::uint64_t>(p));
        } else {
          h = hash_combine(h, std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v));
        }
      },
      value_);
  return h;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          os << v;
        } else if constexpr (std::is_same_v<T, LatticePoint>) {
          os << '(';
          for (int i = 0; i < v.dim; ++i) os << (i ? "," : "") << v.coords[i];
          os << ')';
        } else if constexpr (std::is_same_v<T, HeisenbergPoint>) {
          os << '(' << v.a << ',' << v.b << ',' << v.c << ')';
        } else if constexpr (std::is_same_v<T, LampState>) {
          os << "({";
          for (std::size_t i = 0; i < v.lamps.size(); ++i) os << (i ? "," : "") << v.lamps[i];
          os << "}," << v.cursor << ')';
        } else {
          os << v;
        }
      },
      value_);
  return os.str();
}

GroupSpec::GroupSpec(GroupKind kind, int dim) : kind_(kind), dim_(dim) {
  switch (kind_) {
    case GroupKind::IntegerLine:
      generators_ = {GroupElement(1), GroupElement(-1)};
      break;
    case GroupKind::IntegerLattice:
      for (int i = 0; i < dim_; ++i) {
        for (int sign : {1, -1}) {
          LatticePoint p;
          p.dim = dim_;
          p.coords[i] = sign;
          generators_.emplace_back(p);
        }
      }
      break;
    case GroupKind::HeisenbergDiscrete:
      generators_ = {GroupElement::heisenberg(1, 0, 0), GroupElement::heisenberg(-1, 0, 0),
                     GroupElement::heisenberg(0, 1, 0), GroupElement::heisenberg(0, -1, 0)};
      break;
    case GroupKind::Lamplighter:
      generators_ = {GroupElement::lamp({}, 1), GroupElement::lamp({}, -1), GroupElement::lamp({0}, 0)};
      break;
    case GroupKind::RealLineFlow:
      generators_ = {GroupElement(1.0), GroupElement(-1.0)};
      break;
  }
}

GroupSpec GroupSpec::integers() { return GroupSpec(GroupKind::IntegerLine, 1); }

GroupSpec GroupSpec::lattice(int dim) {
  if (dim < 1 || dim > kMaxLatticeDim) {
    throw std::invalid_argument("lattice dimension must be in 1.." + std::to_string(kMaxLatticeDim));
  }
  return GroupSpec(GroupKind::IntegerLattice, dim);
}

GroupSpec GroupSpec::heisenberg() { return GroupSpec(GroupKind::HeisenbergDiscrete, 3); }
GroupSpec GroupSpec::lamplighter() { return GroupSpec(GroupKind::Lamplighter, 1); }
GroupSpec GroupSpec::real_line() { return GroupSpec(GroupKind::RealLineFlow, 1); }

GroupSpec GroupSpec::parse(std::string_view name) {
  if (name == "Z") return integers();
  if (name == "heis3") return heisenberg();
  if (name == "lamplighter") return lamplighter();
  if (name == "R-flow" || name == "R") return real_line();
  if (name.size() > 2 && name.substr(0, 2) == "Z^") {
    int dim = 0;
    auto digits = name.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && dim >= 1 && dim <= kMaxLatticeDim) {
      return lattice(dim);
    }
  }
  throw UnknownNameError("unknown group '" + std::string(name) + "' (expected Z, Z^d, heis3, lamplighter, R-flow)");
}

std::string GroupSpec::name() const {
  switch (kind_) {
    case GroupKind::IntegerLine:
      return "Z";
    case GroupKind::IntegerLattice:
      return "Z^" + std::to_string(dim_);
    case GroupKind::HeisenbergDiscrete:
      return "heis3";
    case GroupKind::Lamplighter:
      return "lamplighter";
    case GroupKind::RealLineFlow:
      return "R-flow";
  }
  return "?";
}

bool GroupSpec::accepts(const GroupElement& g) const noexcept {
  switch (kind_) {
    case GroupKind::IntegerLine:
      return g.holds<std::int64_t>();
    case GroupKind::IntegerLattice:
      return g.holds<LatticePoint>() && std::get<LatticePoint>(g.value()).dim == dim_;
    case GroupKind::HeisenbergDiscrete:
      return g.holds<HeisenbergPoint>();
    case GroupKind::Lamplighter:
      return g.holds<LampState>();
    case GroupKind::RealLineFlow:
      return g.holds<double>() && std::isfinite(std::get<double>(g.value()));
  }
  return false;
}

void GroupSpec::require(const GroupElement& g) const {
  if (!accepts(g)) throw EncodingError("element " + g.to_string() + " is not in group " + name());
}

GroupElement GroupSpec::identity() const {
  switch (kind_) {
    case GroupKind::IntegerLine:
      return GroupElement(0);
    case GroupKind::IntegerLattice: {
      LatticePoint p;
      p.dim = dim_;
      return GroupElement(p);
    }
    case GroupKind::HeisenbergDiscrete:
      return GroupElement::heisenberg(0, 0, 0);
    case GroupKind::Lamplighter:
      return GroupElement::lamp({}, 0);
    case GroupKind::RealLineFlow:
      return GroupElement(0.0);
  }
  return {};
}

GroupElement GroupSpec::compose(const GroupElement& g, const GroupElement& h) const {
  require(g);
  require(h);
  switch (kind_) {
    case GroupKind::IntegerLine:
      return GroupElement(g.as<std::int64_t>() + h.as<std::int64_t>());
    case GroupKind::IntegerLattice: {
      LatticePoint p = g.as<LatticePoint>();
      const auto& q = h.as<LatticePoint>();
      for (int i = 0; i < dim_; ++i) p.coords[i] += q.coords[i];
      return GroupElement(p);
    }
    case GroupKind::HeisenbergDiscrete: {
      // [[1,a,c],[0,1,b]] * [[1,a',c'],[0,1,b']] = [[1,a+a',c+c'+a b'],[0,1,b+b']]
      const auto& x = g.as<HeisenbergPoint>();
      const auto& y = h.as<HeisenbergPoint>();
      return GroupElement::heisenberg(x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b);
    }
    case GroupKind::Lamplighter: {
      // (A, m)(B, n) = (A xor (B + m), m + n)
      const auto& x = g.as<LampState>();
      const auto& y = h.as<LampState>();
      return GroupElement(LampState{toggle(x.lamps, shifted(y.lamps, x.cursor)), x.cursor + y.cursor});
    }
    case GroupKind::RealLineFlow:
      return GroupElement(g.as<double>() + h.as<double>());
  }
  return {};
}

GroupElement GroupSpec::inverse(const GroupElement& g) const {
  require(g);
  switch (kind_) {
    case GroupKind::IntegerLine:
      return GroupElement(-g.as<std::int64_t>());
    case GroupKind::IntegerLattice: {
      LatticePoint p = g.as<LatticePoint>();
      for (int i = 0; i < dim_; ++i) p.coords[i] = -p.coords[i];
      return GroupElement(p);
    }
    case GroupKind::HeisenbergDiscrete: {
      const auto& x = g.as<HeisenbergPoint>();
      return GroupElement::heisenberg(-x.a, -x.b, x.a * x.b - x.c);
    }
    case GroupKind::Lamplighter: {
      // (A, m)^-1 = (A - m, -m)
      const auto& x = g.as<LampState>();
      return GroupElement(LampState{shifted(x.lamps, -x.cursor), -x.cursor});
    }
    case GroupKind::RealLineFlow:
      return GroupElement(-g.as<double>());
  }
  return {};
}

std::vector<std::pair<GroupElement, int>> GroupSpec::word_ball(int radius) const {
  if (!is_discrete()) {
    throw UnsupportedError("word balls are only enumerated for discrete groups");
  }
  std::vector<std::pair<GroupElement, int>> ball;
  std::unordered_map<GroupElement, int, GroupElementHash> seen;
  ball.emplace_back(identity(), 0);
  seen.emplace(identity(), 0);
  for (std::size_t head = 0; head < ball.size(); ++head) {
    auto [g, len] = ball[head];
    if (len == radius) continue;
    for (const auto& s : generators_) {
      auto next = compose(g, s);
      if (seen.emplace(next, len + 1).second) ball.emplace_back(std::move(next), len + 1);
    }
  }
  return ball;
}

bool GroupSpec::generators_valid() const {
  std::unordered_map<GroupElement, int, GroupElementHash> gens;
  for (const auto& s : generators_) gens.emplace(s, 0);
  for (const auto& s : generators_) {
    if (!gens.contains(inverse(s))) return false;
  }
  if (!is_discrete()) return true;
  std::size_t previous = 1;
  for (int r = 1; r <= 3; ++r) {
    auto size = word_ball(r).size();
    if (size <= previous) return false;
    previous = size;
  }
  return true;
}

}  // namespace meancx
