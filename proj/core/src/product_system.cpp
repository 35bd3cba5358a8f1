#include "hashing.hpp"
#include "meancx/systems.hpp"

namespace meancx {

namespace {

// Element distances are the max of the two factor tables; when both factors are
// translation-invariant the max is itself independent of the group element.
class ProductTable final : public OrbitTable {
 public:
  ProductTable(const GroupMeasure& rho, std::unique_ptr<OrbitTable> first, std::unique_ptr<OrbitTable> second)
      : OrbitTable(rho.weights(), first->states()), first_(std::move(first)), second_(std::move(second)) {}

  double element_distance(std::size_t i, std::size_t j, std::size_t k) const override {
    return std::max(first_->element_distance(i, j, k), second_->element_distance(i, j, k));
  }
  bool orbit_invariant() const override { return first_->orbit_invariant() && second_->orbit_invariant(); }
  double mean_distance(std::size_t i, std::size_t j) const override {
    if (orbit_invariant()) return std::max(first_->mean_distance(i, j), second_->mean_distance(i, j));
    return OrbitTable::mean_distance(i, j);
  }

 private:
  std::unique_ptr<OrbitTable> first_;
  std::unique_ptr<OrbitTable> second_;
};

class ProductSystem final : public DynamicalSystem {
 public:
  explicit ProductSystem(SystemPtr base)
      : DynamicalSystem("product", base->group(), base->ground_truth(), base->isometric()), base_(std::move(base)) {}

  std::string spec_string() const override { return "product:" + base_->spec_string(); }
  std::vector<std::pair<std::string, std::string>> parameters() const override {
    return {{"base", base_->spec_string()}};
  }
  double truncation_error() const override { return base_->truncation_error(); }

  State apply(const GroupElement& g, const State& x) const override {
    const auto& p = x.as<StatePair>();
    return State::pair(base_->apply(g, *p.first), base_->apply(g, *p.second));
  }
  double distance(const State& x, const State& y) const override {
    const auto& a = x.as<StatePair>();
    const auto& b = y.as<StatePair>();
    return std::max(base_->distance(*a.first, *b.first), base_->distance(*a.second, *b.second));
  }
  std::vector<State> draw(std::size_t count, std::uint64_t seed) const override {
    auto firsts = base_->draw(count, seed);
    auto seconds = base_->draw(count, detail::mix64(seed ^ 0x5bd1e995ULL));
    std::vector<State> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(State::pair(std::move(firsts[i]), std::move(seconds[i])));
    return out;
  }
  std::vector<TestFunction> test_functions() const override {
    auto base = base_->test_functions();
    std::vector<TestFunction> out;
    for (std::size_t t = 0; t < 3 && t < base.size(); ++t) {
      auto f = base[t].evaluate;
      out.push_back({base[t].name + "@1", [f](const State& s) { return f(*s.as<StatePair>().first); }, base[t].sup_norm});
      out.push_back({base[t].name + "@2", [f](const State& s) { return f(*s.as<StatePair>().second); }, base[t].sup_norm});
    }
    return out;
  }
  std::unique_ptr<OrbitTable> orbit_table(const GroupMeasure& rho, std::span<const State> states) const override {
    std::vector<State> firsts, seconds;
    firsts.reserve(states.size());
    seconds.reserve(states.size());
    for (const auto& s : states) {
      const auto& p = s.as<StatePair>();
      firsts.push_back(*p.first);
      seconds.push_back(*p.second);
    }
    return std::make_unique<ProductTable>(rho, base_->orbit_table(rho, firsts), base_->orbit_table(rho, seconds));
  }

 private:
  SystemPtr base_;
};

}  // namespace

SystemPtr product_lift(SystemPtr base) {
  if (!base) throw std::invalid_argument("product_lift needs a system");
  return std::make_shared<ProductSystem>(std::move(base));
}

}  // namespace meancx
