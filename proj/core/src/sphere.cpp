#include "hring/sphere.hpp"

#include <cmath>

namespace hring {

SpherePoint::SpherePoint(cplx z) : z_(z) {
  const double x = z.real(), y = z.imag();
  if (!std::isfinite(x) || !std::isfinite(y) || std::abs(x) > kOverflow ||
      std::abs(y) > kOverflow || std::hypot(x, y) > kOverflow) {
    z_ = {};
    inf_ = true;
  }
}

UnitVec to_unit_sphere(const SpherePoint& p) {
  if (p.is_infinity()) return {0.0, 0.0, 1.0};
  const cplx z = p.value();
  const double m = std::abs(z);
  if (m <= 1.0) {
    const double s = 1.0 + m * m;
    return {2.0 * z.real() / s, 2.0 * z.imag() / s, (m * m - 1.0) / s};
  }
  // Through w = 1/z to avoid squaring large moduli.
  const cplx w = 1.0 / z;
  const double n = std::abs(w);
  const double s = 1.0 + n * n;
  return {2.0 * w.real() / s, -2.0 * w.imag() / s, (1.0 - n * n) / s};
}

double chordal(const SpherePoint& a, const SpherePoint& b) {
  return std::sqrt(dist2(to_unit_sphere(a), to_unit_sphere(b)));
}

SpherePoint tau(const SpherePoint& p) {
  if (p.is_infinity()) return cplx{0.0, 0.0};
  const cplx z = p.value();
  if (z == cplx{0.0, 0.0}) return SpherePoint::infinity();
  return 1.0 / std::conj(z);
}

}  // namespace hring
