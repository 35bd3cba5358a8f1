#pragma once

#include "meancx/group_measure.hpp"
#include "meancx/system.hpp"

namespace meancx {

/// d_rho(x, y) = sum_g rho(g) d(g x, g y). Flow quadrature measures carry trapezoid
/// weights, so the same sum is the trapezoid rule over the grid.
double mean_distance(const DynamicalSystem& system, const GroupMeasure& rho, const State& x, const State& y);

/// Open ball membership: d_rho(center, y) < epsilon.
bool in_ball(const DynamicalSystem& system, const GroupMeasure& rho, const State& center, double epsilon,
             const State& y);

}  // namespace meancx
