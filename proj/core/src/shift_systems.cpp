// Symbolic systems: the Bernoulli G-shifts and the Sturmian subshift. Both use the
// truncated sequence metric
//   d(x, y) = (1/Z) sum_{|h| <= L} 2^{-|h|} |x_h - y_h|,   Z = sum_{|h| <= L} 2^{-|h|},
// with word length |h| for the standard generators and the left shift (g x)_h = x_{hg}.
//
// For a measure rho = sum_k w_k delta_{g_k}, d_rho(x, y) = sum_u c_u [x_u != y_u] over the
// coordinates u = h g_k, with c_u = sum_{h g_k = u} w_k 2^{-|h|} / Z. The orbit table packs
// every sample's bits over those coordinates and sums c_u over the XOR a byte at a time.

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "hashing.hpp"
#include "meancx/parallel.hpp"
#include "meancx/systems.hpp"
#include "system_util.hpp"

namespace meancx {

int default_truncation_radius(const GroupSpec& group) {
  switch (group.kind()) {
    case GroupKind::IntegerLine:
      return 12;
    case GroupKind::IntegerLattice:
      return group.dimension() == 2 ? 6 : 4;
    default:
      return 4;
  }
}

namespace {

struct Coordinates {
  std::vector<GroupElement> elements;
  std::vector<std::uint64_t> hashes;
};

std::complex<double> real(double v) { return {v, 0.0}; }

class SymbolicSystem : public DynamicalSystem {
 public:
  SymbolicSystem(std::string name, GroupSpec group, GroundTruth truth, int radius)
      : DynamicalSystem(std::move(name), group, truth, false), radius_(radius) {
    if (radius < 1) throw std::invalid_argument("truncation radius must be positive");
    for (const auto& [h, len] : group.word_ball(radius)) {
      ball_.push_back(h);
      ball_weight_.push_back(std::ldexp(1.0, -len));
    }
    normalizer_ = 0.0;
    for (double w : ball_weight_) normalizer_ += w;
    for (double& w : ball_weight_) w /= normalizer_;
    for (const auto& [h, len] : group.word_ball(1)) unit_ball_.push_back(h);
  }

  int radius() const noexcept { return radius_; }
  double normalizer() const noexcept { return normalizer_; }

  double truncation_error() const override { return std::ldexp(1.0, 1 - radius_) / normalizer_; }

  double distance(const State& x, const State& y) const override {
    double total = 0.0;
    for (std::size_t t = 0; t < ball_.size(); ++t) {
      if (bit_at(x, ball_[t]) != bit_at(y, ball_[t])) total += ball_weight_[t];
    }
    return total;
  }

  std::vector<TestFunction> test_functions() const override {
    const GroupElement e = group().identity();
    const GroupElement s = group().generators().front();
    const GroupElement s_inv = group().inverse(s);
    auto self = this;
    auto unit = unit_ball_;
    return {
        {"x_e", [self, e](const State& x) { return real(self->bit_at(x, e)); }, 1.0},
        {"x_s", [self, s](const State& x) { return real(self->bit_at(x, s)); }, 1.0},
        {"cylinder", [self, e, s](const State& x) { return real(self->bit_at(x, e) && self->bit_at(x, s)); }, 1.0},
        {"smooth",
         [self, unit](const State& x) {
           double total = 0.0;
           for (const auto& h : unit) total += self->bit_at(x, h);
           return real(total / static_cast<double>(unit.size()));
         },
         1.0},
        {"x_inv", [self, s_inv](const State& x) { return real(self->bit_at(x, s_inv)); }, 1.0},
        {"const", [](const State&) { return real(1.0); }, 1.0},
    };
  }

  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override;

  virtual bool bit_at(const State& x, const GroupElement& coordinate) const = 0;
  /// Sets bit t of `words` to x_{coords[t]}; `words` is zeroed by the caller.
  virtual void pack(const State& x, const Coordinates& coords, std::uint64_t* words) const = 0;

 protected:
  int radius_;
  std::vector<GroupElement> ball_;
  std::vector<double> ball_weight_;
  std::vector<GroupElement> unit_ball_;
  double normalizer_ = 1.0;
};

class SymbolicTable final : public OrbitTable {
 public:
  SymbolicTable(const SymbolicSystem& system, const GroupSpec& group, const GroupMeasure& rho,
                std::span<const State> states, std::span<const GroupElement> ball, std::span<const double> ball_weight)
      : OrbitTable(rho.weights(), states.size()) {
    Coordinates coords;
    std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> index;
    std::vector<double> coefficient;
    lists_.resize(rho.size());
    for (std::size_t k = 0; k < rho.size(); ++k) {
      const auto& g = rho.support()[k].element;
      group.require(g);
      for (std::size_t t = 0; t < ball.size(); ++t) {
        GroupElement u = group.compose(ball[t], g);
        auto [it, inserted] = index.emplace(u, static_cast<std::uint32_t>(coords.elements.size()));
        if (inserted) {
          coords.hashes.push_back(u.hash());
          coords.elements.push_back(std::move(u));
          coefficient.push_back(0.0);
        }
        coefficient[it->second] += weights_[k] * ball_weight[t];
        lists_[k].push_back({it->second, ball_weight[t]});
      }
    }
    const std::size_t width = coords.elements.size();
    words_ = (width + 63) / 64;
    bits_.assign(states.size() * words_, 0);
    parallel_for(0, states.size(), [&](std::size_t i) { system.pack(states[i], coords, &bits_[i * words_]); });

    lut_.assign(words_ * 8 * 256, 0.0);
    for (std::size_t p = 0; p < words_ * 8; ++p) {
      double* row = &lut_[p * 256];
      for (unsigned b = 1; b < 256; ++b) {
        const unsigned low = b & (b - 1);
        const std::size_t t = p * 8 + static_cast<std::size_t>(std::countr_zero(b));
        row[b] = row[low] + (t < width ? coefficient[t] : 0.0);
      }
    }
  }

  double element_distance(std::size_t i, std::size_t j, std::size_t k) const override {
    const std::uint64_t* a = &bits_[i * words_];
    const std::uint64_t* b = &bits_[j * words_];
    double total = 0.0;
    for (const auto& [u, w] : lists_[k]) {
      if (((a[u >> 6] ^ b[u >> 6]) >> (u & 63)) & 1U) total += w;
    }
    return total;
  }

  double mean_distance(std::size_t i, std::size_t j) const override {
    const std::uint64_t* a = &bits_[i * words_];
    const std::uint64_t* b = &bits_[j * words_];
    double total = 0.0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t z = a[w] ^ b[w];
      const double* lut = &lut_[w * 8 * 256];
      while (z != 0) {
        total += lut[z & 255U];
        z >>= 8;
        lut += 256;
      }
    }
    return total;
  }

  void mean_row(std::size_t i, std::size_t first, std::size_t last, double* out) const override {
    for (std::size_t j = first; j < last; ++j) out[j - first] = mean_distance(i, j);
  }

 private:
  struct Entry {
    std::uint32_t coordinate;
    double weight;
  };
  std::vector<std::vector<Entry>> lists_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<double> lut_;
};

std::unique_ptr<OrbitTable> SymbolicSystem::orbit_table(const GroupMeasure& rho, std::span<const State> states) const {
  return std::make_unique<SymbolicTable>(*this, group(), rho, states, ball_, ball_weight_);
}

class BernoulliShift final : public SymbolicSystem {
 public:
  BernoulliShift(const GroupSpec& group, int radius)
      : SymbolicSystem("bernoulli-shift", group, GroundTruth::NotDiscreteSpectrum, radius) {
    if (!group.is_discrete()) throw UnsupportedError("bernoulli-shift needs a discrete group");
  }

  std::string spec_string() const override {
    std::string out = "bernoulli-shift:" + group().name();
    if (radius_ != default_truncation_radius(group())) out += ",L=" + std::to_string(radius_);
    return out;
  }
  std::vector<std::pair<std::string, std::string>> parameters() const override {
    return {{"group", group().name()}, {"L", std::to_string(radius_)}};
  }

  State apply(const GroupElement& g, const State& x) const override {
    Configuration c = x.as<Configuration>();
    c.offset = group().compose(g, c.offset);
    return c;
  }

  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override {
    detail::Draws draws(seed);
    std::vector<State> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(Configuration::fair_bits(group(), draws.next()));
    return out;
  }

  bool bit_at(const State& x, const GroupElement& coordinate) const override {
    return x.as<Configuration>().bit(group(), coordinate);
  }

  void pack(const State& x, const Coordinates& coords, std::uint64_t* words) const override {
    const auto& c = x.as<Configuration>();
    const bool at_identity = c.offset == group().identity();
    for (std::size_t t = 0; t < coords.elements.size(); ++t) {
      bool b;
      if (at_identity) {
        b = c.random && random_bit(c.seed, coords.hashes[t]);
        if (!c.ones.empty() && std::binary_search(c.ones.begin(), c.ones.end(), coords.elements[t])) b = !b;
      } else {
        b = c.bit(group(), coords.elements[t]);
      }
      if (b) words[t >> 6] |= std::uint64_t{1} << (t & 63);
    }
  }
};

// Coding of the rotation by alpha: x_k = 1 iff theta + k alpha lies in [1 - alpha, 1).
// The state stores theta; the shift acts by theta -> theta + alpha.
class Sturmian final : public SymbolicSystem {
 public:
  Sturmian(double alpha, int radius)
      : SymbolicSystem("sturmian", GroupSpec::integers(), GroundTruth::DiscreteSpectrum, radius),
        alpha_(alpha),
        step_(to_fixed(alpha)) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("sturmian alpha must lie in (0,1)");
  }

  std::vector<std::pair<std::string, std::string>> parameters() const override {
    std::vector<std::pair<std::string, std::string>> out{{"alpha", detail::format_double(alpha_)}};
    if (radius_ != 12) out.emplace_back("L", std::to_string(radius_));
    return out;
  }

  State apply(const GroupElement& g, const State& x) const override {
    return CirclePoint{x.as<CirclePoint>().angle + static_cast<Fixed>(g.as<std::int64_t>()) * step_};
  }

  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override {
    detail::Draws draws(seed);
    std::vector<State> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(CirclePoint{draws.next()});
    return out;
  }

  bool bit_at(const State& x, const GroupElement& coordinate) const override {
    return symbol(x.as<CirclePoint>().angle, coordinate.as<std::int64_t>());
  }

  void pack(const State& x, const Coordinates& coords, std::uint64_t* words) const override {
    const Fixed theta = x.as<CirclePoint>().angle;
    for (std::size_t t = 0; t < coords.elements.size(); ++t) {
      if (symbol(theta, coords.elements[t].as<std::int64_t>())) words[t >> 6] |= std::uint64_t{1} << (t & 63);
    }
  }

 private:
  bool symbol(Fixed theta, std::int64_t k) const {
    return theta + static_cast<Fixed>(k) * step_ >= Fixed{0} - step_;
  }

  double alpha_;
  Fixed step_;
};

}  // namespace

SystemPtr make_bernoulli_shift(const GroupSpec& group, int radius) {
  return std::make_shared<BernoulliShift>(group, radius > 0 ? radius : default_truncation_radius(group));
}

SystemPtr make_sturmian(double alpha, int radius) { return std::make_shared<Sturmian>(alpha, radius); }

}  // namespace meancx
