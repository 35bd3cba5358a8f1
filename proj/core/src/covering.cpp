#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>

#include "meancx/complexity.hpp"
#include "meancx/error.hpp"
#include "meancx/parallel.hpp"

namespace meancx {

namespace {

// Square 0/1 matrix, one bit row per sample point.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n * words_, 0) {}

  std::size_t words() const noexcept { return words_; }
  std::uint64_t* row(std::size_t i) noexcept { return &data_[i * words_]; }
  const std::uint64_t* row(std::size_t i) const noexcept { return &data_[i * words_]; }

  // Copies the strict upper triangle onto the lower one, one 64 x 64 block at a time so
  // the transposed bits collect in a local buffer instead of scattering across rows.
  void mirror() {
    std::uint64_t block[64];
    for (std::size_t bi = 0; bi < words_; ++bi) {
      const std::size_t row_end = std::min(n_, (bi + 1) * 64);
      for (std::size_t bj = bi; bj < words_; ++bj) {
        std::fill(std::begin(block), std::end(block), 0);
        bool any = false;
        for (std::size_t i = bi * 64; i < row_end; ++i) {
          std::uint64_t bits = row(i)[bj];
          if (bj == bi) bits &= ~((std::uint64_t{2} << (i & 63)) - 1);
          any |= bits != 0;
          while (bits != 0) {
            block[std::countr_zero(bits)] |= std::uint64_t{1} << (i & 63);
            bits &= bits - 1;
          }
        }
        if (!any) continue;
        const std::size_t col_end = std::min(n_, (bj + 1) * 64);
        for (std::size_t j = bj * 64; j < col_end; ++j) row(j)[bi] |= block[j & 63];
      }
    }
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

class BitSet {
 public:
  BitSet(std::size_t n, bool value) : words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    if (value && n % 64 != 0) words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t overlap(const std::uint64_t* row) const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w] & row[w]));
    return c;
  }
  void remove(const std::uint64_t* row) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~row[w];
  }
  void add(const std::uint64_t* row) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= row[w];
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Adjacency d_rho(x_i, x_j) < t for every requested threshold t, from one pass over the
// upper triangle of the distance matrix.
std::vector<BitMatrix> adjacency(const OrbitTable& table, std::span<const double> thresholds) {
  const std::size_t n = table.states();
  std::vector<BitMatrix> out;
  out.reserve(thresholds.size());
  for (std::size_t t = 0; t < thresholds.size(); ++t) out.emplace_back(n);
  parallel_for(0, n, [&](std::size_t i) {
    std::vector<double> row(n - i);
    table.mean_row(i, i, n, row.data());
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
      const double limit = thresholds[t];
      std::uint64_t* bits = out[t].row(i);
      for (std::size_t w = i >> 6; w * 64 < n; ++w) {
        const std::size_t lo = std::max(i, w * 64);
        const std::size_t hi = std::min(n, w * 64 + 64);
        std::uint64_t word = 0;
        for (std::size_t j = lo; j < hi; ++j) word |= std::uint64_t{row[j - i] < limit} << (j & 63);
        bits[w] = word;
      }
    }
  });
  for (auto& m : out) m.mirror();
  return out;
}

ComplexityEstimate estimate_from(const BitMatrix& near, const BitMatrix& far, double epsilon, std::size_t n,
                                 std::uint64_t seed) {
  ComplexityEstimate est;
  est.epsilon = epsilon;
  est.sample_size = n;
  est.seed = seed;

  // Lazy greedy: gains only shrink, so a popped entry whose refreshed key still beats the
  // top of the heap is the true maximiser. Keys order by (gain, lower index).
  BitSet uncovered(n, true);
  std::priority_queue<std::pair<std::size_t, std::size_t>> heap;
  for (std::size_t i = 0; i < n; ++i) heap.emplace(uncovered.overlap(near.row(i)), n - 1 - i);
  const double target = (1.0 - epsilon) * static_cast<double>(n);
  std::size_t covered = 0;
  while (!(static_cast<double>(covered) > target) && !heap.empty()) {
    auto [stale, key] = heap.top();
    heap.pop();
    const std::size_t i = n - 1 - key;
    const std::size_t gain = uncovered.overlap(near.row(i));
    if (gain == 0) continue;
    if (!heap.empty() && std::make_pair(gain, key) < heap.top()) {
      heap.emplace(gain, key);
      continue;
    }
    est.centers.push_back(i);
    uncovered.remove(near.row(i));
    covered += gain;
  }
  est.upper_count = est.centers.size();
  est.mass_covered = static_cast<double>(covered) / static_cast<double>(n);
  est.saturated = static_cast<double>(est.upper_count) > 0.5 * target;

  BitSet blocked(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (uncovered.test(i) || blocked.test(i)) continue;
    ++est.lower_count;
    blocked.add(far.row(i));
  }
  BitSet close(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (close.test(i)) continue;
    ++est.packing_count;
    close.add(near.row(i));
  }
  return est;
}

}  // namespace

std::size_t required_sample_size(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
  return static_cast<std::size_t>(std::ceil(100.0 / epsilon - 1e-9));
}

std::vector<ComplexityEstimate> covering_estimates(const DynamicalSystem& system, const GroupMeasure& rho,
                                                   std::span<const double> epsilons, const PointSample& sample) {
  if (epsilons.empty()) return {};
  for (double eps : epsilons) {
    const std::size_t need = required_sample_size(eps);
    if (sample.size() < need) {
      throw SampleSizeError("epsilon " + std::to_string(eps) + " needs at least " + std::to_string(need) +
                                " sample points, got " + std::to_string(sample.size()),
                            need);
    }
  }
  std::vector<double> thresholds;
  for (double eps : epsilons) {
    thresholds.push_back(eps);
    thresholds.push_back(2.0 * eps);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  const auto table = system.orbit_table(rho, sample.states);
  const auto matrices = adjacency(*table, thresholds);
  auto at = [&](double t) -> const BitMatrix& {
    return matrices[static_cast<std::size_t>(std::lower_bound(thresholds.begin(), thresholds.end(), t) -
                                             thresholds.begin())];
  };
  std::vector<ComplexityEstimate> out;
  for (double eps : epsilons) out.push_back(estimate_from(at(eps), at(2.0 * eps), eps, sample.size(), sample.seed));
  return out;
}

ComplexityEstimate covering_estimate(const DynamicalSystem& system, const GroupMeasure& rho, double epsilon,
                                     const PointSample& sample) {
  const double eps[] = {epsilon};
  return covering_estimates(system, rho, eps, sample).front();
}

}  // namespace meancx
