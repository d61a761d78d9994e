#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "hring/sphere.hpp"

namespace hring {

// u z^2 (z-a)/(1-az) + b
struct CubicRat {
  cplx a, b, u;
};
// u z^2 (z-alpha)/(1-omega z) + beta, omega = (2 alpha - 3)/(alpha - 2)
struct NormalizedCubic {
  cplx alpha, beta, u;
};
// u (z-b)/(z-a) z^2 e^z
struct MeroTwoZeroExp {
  cplx a, b, u;
};
// e^{2 pi i t} ((z-1/r)/(1-z/r))^3 (z-c)/(1-conj(c) z), c = r^e e^{-2 pi i t}
struct QuarticBlaschke {
  double r = 0.5;
  double t = 0.0;
  int b_exponent = 2;
};
// (a-b)/(b e^b) z^2/(z-a) e^z + b
struct MeroPoleExp {
  cplx a, b;
};
// lambda z^2 e^z
struct EntireZ2Exp {
  cplx lambda;
};
// -z e^{z-b} + b
struct EntireSiegel2 {
  cplx b;
};
// e^{2 pi i t} z^2 (z-a)/(1-conj(a) z)
struct CubicBlaschke {
  cplx a;
  double t = 0.0;
};
// e^{2 pi i t} z e^{(a/2)(z - 1/z)}
struct Arnold {
  double a = 0.0;
  double t = 0.0;
};
// z^2 + c
struct Quadratic {
  cplx c;
};
// e^{2 pi i theta} z
struct RigidRotation {
  double theta = 0.0;
};

using MapSpec = std::variant<CubicRat, NormalizedCubic, MeroTwoZeroExp, QuarticBlaschke,
                             MeroPoleExp, EntireZ2Exp, EntireSiegel2, CubicBlaschke, Arnold,
                             Quadratic, RigidRotation>;

std::string_view family_name(const MapSpec& spec);

struct CriticalPoint {
  SpherePoint point;
  int multiplicity = 1;
};

struct Pole {
  cplx point;
  int order = 1;
};

// Validated map with precomputed constants. Immutable, cheap to copy.
class Map {
 public:
  // Throws Error(DegenerateParameters) when the family invariants fail.
  explicit Map(MapSpec spec);

  const MapSpec& spec() const { return spec_; }
  std::string_view name() const { return family_name(spec_); }

  // Essential singularity at infinity (and at 0 for Arnold).
  bool transcendental() const;
  // Infinity is a super-attracting fixed point, so leaving a large disk is escape.
  bool infinity_attracting() const;

  SpherePoint operator()(const SpherePoint& z) const { return evaluate(z); }
  SpherePoint evaluate(const SpherePoint& z) const;
  cplx derivative(cplx z) const;
  std::vector<CriticalPoint> critical_points() const;
  std::vector<Pole> poles() const;

 private:
  MapSpec spec_;
  // Family-dependent constants: rotation factor, companion zero, leading factor.
  cplx k0_{}, k1_{}, k2_{};
};

SpherePoint evaluate(const Map& map, const SpherePoint& z);
cplx derivative(const Map& map, cplx z);
std::vector<CriticalPoint> critical_points(const Map& map);
std::vector<Pole> poles(const Map& map);

// e^{2 pi i x}
cplx unit_phase(double x);

}  // namespace hring
