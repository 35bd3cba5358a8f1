#pragma once

// Independent reference computations. Nothing here calls into the library's estimators;
// they re-derive values from definitions by enumeration or closed forms.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "meancx/group.hpp"

namespace oracle {

/// Smallest K with K * eps > 1 - eps for eps = p / q: open arcs of length eps cover
/// at most K * eps of the circle.
inline std::size_t circle_cover_count(std::int64_t p, std::int64_t q) {
  std::size_t k = 1;
  while (static_cast<std::int64_t>(k) * p <= q - p) ++k;
  return k;
}

/// Normaliser of the truncated sequence metric on Z: sum of 2^-|g| over |g| <= radius.
inline double shift_normaliser(int radius) {
  double z = 0.0;
  for (int g = -radius; g <= radius; ++g) z += std::ldexp(1.0, -std::abs(g));
  return z;
}

/// Sequence distance on Z between configurations differing exactly at `diffs`.
inline double shift_distance(int radius, const std::vector<int>& diffs) {
  double d = 0.0;
  for (int g : diffs) {
    if (std::abs(g) <= radius) d += std::ldexp(1.0, -std::abs(g));
  }
  return d / shift_normaliser(radius);
}

/// Exact greedy cover of the finite factor {0,1}^[-L, m+L) of the Bernoulli Z-shift
/// under rho = uniform on [0, m), centres at every cylinder, stopping once the covered
/// mass exceeds 1 - eps. The mean distance is a weighted Hamming distance, so balls
/// are translates x ^ B of one set B.
inline std::size_t bernoulli_cover_count(int m, int radius, double eps) {
  const double z = shift_normaliser(radius);
  const int width = m + 2 * radius;
  std::vector<double> weight(static_cast<std::size_t>(width), 0.0);
  for (int g = 0; g < m; ++g) {
    for (int h = -radius; h <= radius; ++h) {
      weight[static_cast<std::size_t>(g + h + radius)] += std::ldexp(1.0, -std::abs(h)) / z / m;
    }
  }
  const std::size_t points = std::size_t{1} << width;
  std::vector<std::uint32_t> ball;
  for (std::size_t v = 0; v < points; ++v) {
    double d = 0.0;
    for (int j = 0; j < width; ++j) {
      if (v >> j & 1U) d += weight[static_cast<std::size_t>(j)];
    }
    if (d < eps) ball.push_back(static_cast<std::uint32_t>(v));
  }
  const double target = (1.0 - eps) * static_cast<double>(points);
  std::vector<char> covered(points, 0);
  std::size_t mass = 0;
  std::size_t count = 0;
  // Lazy greedy: stale gains only overestimate, so a popped entry whose recomputed gain
  // still tops the queue is a true maximiser.
  std::priority_queue<std::pair<std::size_t, std::int64_t>> queue;
  for (std::size_t x = 0; x < points; ++x) queue.emplace(ball.size(), -static_cast<std::int64_t>(x));
  while (static_cast<double>(mass) <= target) {
    auto [gain, key] = queue.top();
    queue.pop();
    const auto x = static_cast<std::size_t>(-key);
    std::size_t fresh = 0;
    for (auto b : ball) fresh += covered[x ^ b] == 0;
    if (fresh < gain) {
      queue.emplace(fresh, key);
      continue;
    }
    for (auto b : ball) {
      if (!covered[x ^ b]) {
        covered[x ^ b] = 1;
        ++mass;
      }
    }
    ++count;
  }
  return count;
}

using Point = std::vector<std::int64_t>;

/// max over 2 <= n <= N of |U_{k<n} F_k^{-1} F_n| / |F_n| for boxes [0,n)^dim.
inline std::vector<double> box_shulman_ratios(int dim, int max_index) {
  auto box = [dim](int n) {
    std::vector<Point> out;
    Point p(static_cast<std::size_t>(dim), 0);
    const auto total = static_cast<std::size_t>(std::pow(n, dim));
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      for (int j = 0; j < dim; ++j) {
        p[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(r % static_cast<std::size_t>(n));
        r /= static_cast<std::size_t>(n);
      }
      out.push_back(p);
    }
    return out;
  };
  std::vector<double> ratios;
  for (int n = 2; n <= max_index; ++n) {
    const auto fn = box(n);
    std::set<Point> uni;
    for (int k = 1; k < n; ++k) {
      for (const auto& a : box(k)) {
        for (const auto& b : fn) {
          Point c(b);
          for (std::size_t j = 0; j < c.size(); ++j) c[j] -= a[j];
          uni.insert(std::move(c));
        }
      }
    }
    ratios.push_back(static_cast<double>(uni.size()) / static_cast<double>(fn.size()));
  }
  return ratios;
}

/// Heisenberg element as the matrix [[1,a,c],[0,1,b],[0,0,1]].
using Matrix = std::array<std::array<std::int64_t, 3>, 3>;

inline Matrix heis_matrix(std::int64_t a, std::int64_t b, std::int64_t c) {
  return {{{1, a, c}, {0, 1, b}, {0, 0, 1}}};
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  Matrix z{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) z[i][j] += x[i][k] * y[k][j];
  return z;
}

/// Lamplighter composition (f, a)(g, b) = (f + g(. - a), a + b) on lamp sets.
inline std::pair<std::set<std::int64_t>, std::int64_t> lamp_compose(const std::set<std::int64_t>& f, std::int64_t a,
                                                                     const std::set<std::int64_t>& g,
                                                                     std::int64_t b) {
  std::set<std::int64_t> out(f);
  for (auto x : g) {
    if (!out.erase(x + a)) out.insert(x + a);
  }
  return {out, a + b};
}

/// Uniform random element of a discrete group with small coordinates.
inline meancx::GroupElement random_element(const meancx::GroupSpec& spec, std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<std::int64_t> coord(-span, span);
  switch (spec.kind()) {
    case meancx::GroupKind::IntegerLine:
      return meancx::GroupElement(coord(rng));
    case meancx::GroupKind::IntegerLattice: {
      meancx::LatticePoint p;
      p.dim = spec.dimension();
      for (int j = 0; j < p.dim; ++j) p.coords[static_cast<std::size_t>(j)] = coord(rng);
      return meancx::GroupElement(p);
    }
    case meancx::GroupKind::HeisenbergDiscrete:
      return meancx::GroupElement::heisenberg(coord(rng), coord(rng), coord(rng));
    case meancx::GroupKind::Lamplighter: {
      std::vector<std::int64_t> lamps;
      for (std::int64_t x = -span; x <= span; ++x) {
        if (rng() & 1U) lamps.push_back(x);
      }
      return meancx::GroupElement::lamp(lamps, coord(rng));
    }
    case meancx::GroupKind::RealLineFlow:
      return meancx::GroupElement(std::uniform_real_distribution<double>(-span, span)(rng));
  }
  return spec.identity();
}

/// Word of `length` random generators of a discrete group.
inline meancx::GroupElement random_word(const meancx::GroupSpec& spec, std::mt19937_64& rng, int length) {
  const auto& gens = spec.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  auto g = spec.identity();
  for (int i = 0; i < length; ++i) g = spec.compose(g, gens[pick(rng)]);
  return g;
}

}  // namespace oracle
