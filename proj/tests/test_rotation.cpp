#include <doctest.h>

#include <cmath>
#include <vector>

#include "properties.hpp"

using namespace hring;
using namespace hring::testing;

namespace {

double circular(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace

TEST_CASE("rigid rotation") {
  const Map m{RigidRotation{kGolden}};
  const RotationReport r = rotation_number(m, 1, cplx{0.7, 0.0}, 0.0, 10000);
  CHECK(circular(r.winding.value, kGolden) < 1e-9);
  CHECK(circular(r.closest_return.value, kGolden) < 1e-6);
  CHECK(r.discrepancy < 1e-6);
  // closest-return times are Fibonacci denominators
  for (int t : r.return_times) {
    bool fib = false;
    for (int a = 1, b = 2; a <= t; std::swap(a, b), b += a) fib = fib || a == t;
    CHECK(fib);
  }
}

TEST_CASE("rotation near 1/2 and negative turning") {
  const RotationReport half = rotation_number(Map{RigidRotation{0.5 - 1e-3 * kGolden}}, 1, cplx{1.0, 0.0}, 0.0, 4000);
  CHECK(circular(half.winding.value, 0.5 - 1e-3 * kGolden) < 1e-9);
  const RotationReport neg = rotation_number(Map{RigidRotation{1.0 - kGolden}}, 1, cplx{1.0, 0.0}, 0.0, 4000);
  CHECK(circular(neg.winding.value, 1.0 - kGolden) < 1e-9);
}

TEST_CASE("estimators on a finite orbit") {
  std::vector<cplx> orbit;
  for (int k = 0; k <= 3000; ++k) orbit.push_back(2.0 + 0.5 * unit_phase(k * kGolden));
  CHECK(circular(winding_mean(orbit, 2.0).value, kGolden) < 1e-12);
  CHECK(circular(closest_return(orbit, 2.0).value, kGolden) < 1e-6);
  CHECK(circular(rank_shift_rotation(orbit, 2.0), kGolden) < 1e-3);
  CHECK(max_angular_gap(orbit, 2.0) < 0.01);
}

TEST_CASE("rotation_number errors") {
  // An attracted orbit is not recurrent.
  try {
    rotation_number(Map{Quadratic{0.0}}, 1, cplx{0.5, 0.0}, 0.0, 2000);
    FAIL("expected NotRecurrent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRecurrent);
  }
  // A center outside the curve.
  try {
    rotation_number(Map{RigidRotation{kGolden}}, 1, cplx{1.0, 0.0}, {3.0, 0.0}, 2000);
    FAIL("expected CenterOutsideRing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CenterOutsideRing);
  }
}

TEST_CASE("circle rotation number") {
  CHECK(circular(circle_rotation_number(Map{Arnold{0.0, 0.25}}, 1000).value, 0.25) < 1e-12);
  CHECK(circular(circle_rotation_number(Map{Arnold{0.0, 0.3}}, 1000).value, 0.3) < 1e-12);
  double prev = -1.0;
  for (int i = 0; i <= 40; ++i) {
    const double t = i / 40.0 * 0.999;
    const double r = circle_rotation_number(Map{Arnold{0.5, t}}, 20000).value;
    CHECK(r >= prev - 1e-4);
    prev = r;
  }
  CHECK_THROWS_AS((circle_rotation_number(Map{Quadratic{0.0}}, 100)), Error);
}

TEST_CASE("meromorphic ring rotation") {
  Budget b;
  b.ring_period = 2;
  const Map m = fig4_map();
  const SpherePoint s = find_ring_seed(m, RayScan{{0.0, 0.0}, {1.0, 0.0}, 1e-3, 1.0, 400}, b);
  const RotationReport r = rotation_number(m, 2, s, 0.0, 2000);
  CHECK(circular(r.winding.value, kGolden) < 1e-3);
  CHECK(r.discrepancy < 1e-2);
}

// Printed parameters sit off the golden locus; see README, known deviations.
TEST_CASE("cubic 2-cycle ring rotation is golden" * doctest::may_fail()) {
  Budget b;
  b.ring_period = 2;
  const Map f = fig1_map();
  const SpherePoint s = find_ring_seed(f, RayScan{{0.0, 0.0}, {0.0, 1.0}, 1e-3, 1.0, 400}, b);
  const RotationReport r = rotation_number(f, 2, s, 0.0, 2000);
  CHECK(circular(r.winding.value, kGolden) < 1e-3);
}
