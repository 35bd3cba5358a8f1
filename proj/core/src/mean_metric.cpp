#include "meancx/mean_metric.hpp"

namespace meancx {

double mean_distance(const DynamicalSystem& system, const GroupMeasure& rho, const State& x, const State& y) {
  double total = 0.0;
  for (const auto& [g, w] : rho.support()) {
    system.group().require(g);
    total += w * system.distance(system.apply(g, x), system.apply(g, y));
  }
  return total;
}

bool in_ball(const DynamicalSystem& system, const GroupMeasure& rho, const State& center, double epsilon,
             const State& y) {
  return mean_distance(system, rho, center, y) < epsilon;
}

}  // namespace meancx
