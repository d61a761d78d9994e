#pragma once

#include <complex>

namespace hring {

using cplx = std::complex<double>;

// Moduli above this are treated as the point at infinity.
inline constexpr double kOverflow = 1e300;

class SpherePoint {
 public:
  constexpr SpherePoint() = default;
  // Non-finite or overflowing values become infinity.
  SpherePoint(cplx z);  // NOLINT(google-explicit-constructor)
  SpherePoint(double x) : SpherePoint(cplx{x, 0.0}) {}  // NOLINT

  static constexpr SpherePoint infinity() {
    SpherePoint p;
    p.inf_ = true;
    return p;
  }

  constexpr bool is_infinity() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  // Precondition: is_finite().
  constexpr cplx value() const { return z_; }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.z_ == b.z_);
  }

 private:
  cplx z_{};
  bool inf_ = false;
};

// Point of the unit sphere under inverse stereographic projection.
struct UnitVec {
  double x = 0.0, y = 0.0, z = 0.0;
};

UnitVec to_unit_sphere(const SpherePoint& p);

inline double dist2(const UnitVec& a, const UnitVec& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

// 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)), extended to infinity.
double chordal(const SpherePoint& a, const SpherePoint& b);

// z -> 1/conj(z), swapping 0 and infinity.
SpherePoint tau(const SpherePoint& p);

}  // namespace hring
