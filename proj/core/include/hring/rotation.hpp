#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hring/dynamics.hpp"

namespace hring {

enum class RotationMethod { WindingMean, ClosestReturn };

std::string_view to_string(RotationMethod m);

struct RotationEstimate {
  double value = 0.0;  // in [0, 1)
  RotationMethod method = RotationMethod::WindingMean;
  int iterations = 0;
  double error_bound = 0.0;
};

struct RotationReport {
  RotationEstimate winding;
  RotationEstimate closest_return;
  double discrepancy = 0.0;             // circular distance between the two values
  std::vector<int> return_times;        // record closest-return times
  double max_angular_gap = 0.0;         // radians, orbit seen from the center
};

// Rotation number of f^p on the invariant curve through seed, seen from center.
// Throws NotRecurrent or CenterOutsideRing.
RotationReport rotation_number(const Map& map, int p, const SpherePoint& seed, cplx center,
                               int n, double recur_tol = Budget{}.recur_tol);

// Estimators on an already computed finite orbit w_0..w_n of the return map.
RotationEstimate winding_mean(std::span<const cplx> orbit, cplx center);
RotationEstimate closest_return(std::span<const cplx> orbit, cplx center,
                                std::vector<int>* record_times = nullptr);
// Mean shift of angular ranks: an order-only estimate used for parameter bisection.
double rank_shift_rotation(std::span<const cplx> orbit, cplx center);
double max_angular_gap(std::span<const cplx> orbit, cplx center);

// Restriction to the unit circle of CubicBlaschke or Arnold. Throws CircleNotInvariant.
RotationEstimate circle_rotation_number(const Map& map, int n);

}  // namespace hring
