#include "hring/maps.hpp"

#include <cmath>
#include <numbers>

#include "hring/errors.hpp"
#include "hring/polynomial.hpp"

namespace hring {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr cplx kZero{0.0, 0.0};

[[noreturn]] void degenerate(std::string_view family, const char* why) {
  throw Error(Errc::DegenerateParameters, std::string(family) + ": " + why);
}

[[noreturn]] void essential(std::string_view family) {
  throw Error(Errc::EssentialSingularity,
              std::string(family) + " has an essential singularity there");
}

[[noreturn]] void pole_input(std::string_view family) {
  throw Error(Errc::PoleInput, std::string(family) + ": derivative requested at a pole");
}

cplx quartic_zero(const QuarticBlaschke& q) {
  return std::pow(q.r, q.b_exponent) * unit_phase(-q.t);
}

}  // namespace

cplx unit_phase(double x) {
  const double a = 2.0 * std::numbers::pi * x;
  return {std::cos(a), std::sin(a)};
}

std::string_view family_name(const MapSpec& spec) {
  return std::visit(
      overloaded{
          [](const CubicRat&) { return std::string_view{"CubicRat"}; },
          [](const NormalizedCubic&) { return std::string_view{"NormalizedCubic"}; },
          [](const MeroTwoZeroExp&) { return std::string_view{"MeroTwoZeroExp"}; },
          [](const QuarticBlaschke&) { return std::string_view{"QuarticBlaschke"}; },
          [](const MeroPoleExp&) { return std::string_view{"MeroPoleExp"}; },
          [](const EntireZ2Exp&) { return std::string_view{"EntireZ2Exp"}; },
          [](const EntireSiegel2&) { return std::string_view{"EntireSiegel2"}; },
          [](const CubicBlaschke&) { return std::string_view{"CubicBlaschke"}; },
          [](const Arnold&) { return std::string_view{"Arnold"}; },
          [](const Quadratic&) { return std::string_view{"Quadratic"}; },
          [](const RigidRotation&) { return std::string_view{"RigidRotation"}; },
      },
      spec);
}

Map::Map(MapSpec spec) : spec_(spec) {
  const auto name = family_name(spec_);
  std::visit(
      overloaded{
          [&](const CubicRat& m) {
            if (m.a == kZero) degenerate(name, "a must be nonzero");
            if (m.u == kZero) degenerate(name, "u must be nonzero");
          },
          [&](const NormalizedCubic& m) {
            if (m.alpha == cplx{2.0, 0.0}) degenerate(name, "alpha = 2 makes omega infinite");
            if (m.u == kZero) degenerate(name, "u must be nonzero");
            k0_ = (2.0 * m.alpha - 3.0) / (m.alpha - 2.0);
          },
          [&](const MeroTwoZeroExp& m) {
            if (m.u == kZero) degenerate(name, "u must be nonzero");
          },
          [&](const QuarticBlaschke& m) {
            if (!(m.r > 0.0 && m.r < 1.0)) degenerate(name, "r must lie in (0,1)");
            if (m.b_exponent != 2 && m.b_exponent != 4) degenerate(name, "b_exponent is 2 or 4");
            k0_ = unit_phase(m.t);
            k1_ = quartic_zero(m);
            k2_ = std::conj(k1_);
          },
          [&](const MeroPoleExp& m) {
            if (m.a == kZero) degenerate(name, "a must be nonzero");
            if (m.b == kZero) degenerate(name, "b must be nonzero");
            if (m.a == m.b) degenerate(name, "a must differ from b");
            k0_ = (m.a - m.b) / (m.b * std::exp(m.b));
          },
          [&](const EntireZ2Exp& m) {
            if (m.lambda == kZero) degenerate(name, "lambda must be nonzero");
          },
          [&](const EntireSiegel2& m) {
            if (m.b == kZero) degenerate(name, "b must be nonzero");
            k0_ = std::exp(-m.b);
          },
          [&](const CubicBlaschke& m) {
            if (!(std::abs(m.a) > 3.0)) degenerate(name, "|a| must exceed 3");
            k0_ = unit_phase(m.t);
            k1_ = std::conj(m.a);
          },
          [&](const Arnold& m) { k0_ = unit_phase(m.t); },
          [](const Quadratic&) {},
          [&](const RigidRotation& m) { k0_ = unit_phase(m.theta); },
      },
      spec_);
}

bool Map::transcendental() const {
  return std::holds_alternative<MeroTwoZeroExp>(spec_) ||
         std::holds_alternative<MeroPoleExp>(spec_) ||
         std::holds_alternative<EntireZ2Exp>(spec_) ||
         std::holds_alternative<EntireSiegel2>(spec_) || std::holds_alternative<Arnold>(spec_);
}

bool Map::infinity_attracting() const {
  return std::holds_alternative<CubicRat>(spec_) ||
         std::holds_alternative<NormalizedCubic>(spec_) ||
         std::holds_alternative<CubicBlaschke>(spec_) ||
         std::holds_alternative<Quadratic>(spec_);
}

SpherePoint Map::evaluate(const SpherePoint& p) const {
  const auto name = family_name(spec_);
  return std::visit(
      overloaded{
          [&](const CubicRat& m) -> SpherePoint {
            if (p.is_infinity()) return SpherePoint::infinity();
            const cplx z = p.value();
            const cplx den = 1.0 - m.a * z;
            if (den == kZero) return SpherePoint::infinity();
            return m.u * z * z * (z - m.a) / den + m.b;
          },
          [&](const NormalizedCubic& m) -> SpherePoint {
            if (p.is_infinity()) return SpherePoint::infinity();
            const cplx z = p.value();
            const cplx den = 1.0 - k0_ * z;
            if (den == kZero) return SpherePoint::infinity();
            return m.u * z * z * (z - m.alpha) / den + m.beta;
          },
          [&](const MeroTwoZeroExp& m) -> SpherePoint {
            if (p.is_infinity()) essential(name);
            const cplx z = p.value();
            if (z == m.a) return SpherePoint::infinity();
            return m.u * (z - m.b) / (z - m.a) * z * z * std::exp(z);
          },
          [&](const QuarticBlaschke& m) -> SpherePoint {
            const double A = 1.0 / m.r;
            cplx F, G;
            if (p.is_finite() && std::abs(p.value()) <= 1.0) {
              const cplx z = p.value();
              const cplx den = 1.0 - A * z;
              if (den == kZero) return SpherePoint::infinity();
              F = (z - A) / den;
              G = (z - k1_) / (1.0 - k2_ * z);
            } else {
              // Same rational function written in w = 1/z.
              const cplx w = p.is_infinity() ? kZero : 1.0 / p.value();
              const cplx gden = w - k2_;
              if (gden == kZero) return SpherePoint::infinity();
              F = (1.0 - A * w) / (w - A);
              G = (1.0 - k1_ * w) / gden;
            }
            return k0_ * F * F * F * G;
          },
          [&](const MeroPoleExp& m) -> SpherePoint {
            if (p.is_infinity()) essential(name);
            const cplx z = p.value();
            if (z == m.a) return SpherePoint::infinity();
            return k0_ * z * z / (z - m.a) * std::exp(z) + m.b;
          },
          [&](const EntireZ2Exp& m) -> SpherePoint {
            if (p.is_infinity()) essential(name);
            const cplx z = p.value();
            return m.lambda * z * z * std::exp(z);
          },
          [&](const EntireSiegel2& m) -> SpherePoint {
            if (p.is_infinity()) essential(name);
            const cplx z = p.value();
            return -z * std::exp(z) * k0_ + m.b;
          },
          [&](const CubicBlaschke& m) -> SpherePoint {
            if (p.is_infinity()) return SpherePoint::infinity();
            const cplx z = p.value();
            const cplx den = 1.0 - k1_ * z;
            if (den == kZero) return SpherePoint::infinity();
            return k0_ * z * z * (z - m.a) / den;
          },
          [&](const Arnold& m) -> SpherePoint {
            if (p.is_infinity() || p.value() == kZero) essential(name);
            const cplx z = p.value();
            return k0_ * z * std::exp(0.5 * m.a * (z - 1.0 / z));
          },
          [&](const Quadratic& m) -> SpherePoint {
            if (p.is_infinity()) return SpherePoint::infinity();
            const cplx z = p.value();
            return z * z + m.c;
          },
          [&](const RigidRotation&) -> SpherePoint {
            if (p.is_infinity()) return SpherePoint::infinity();
            return k0_ * p.value();
          },
      },
      spec_);
}

cplx Map::derivative(cplx z) const {
  const auto name = family_name(spec_);
  return std::visit(
      overloaded{
          [&](const CubicRat& m) -> cplx {
            const cplx den = 1.0 - m.a * z;
            if (den == kZero) pole_input(name);
            const cplx num = -z * (2.0 * m.a * z * z - (m.a * m.a + 3.0) * z + 2.0 * m.a);
            return m.u * num / (den * den);
          },
          [&](const NormalizedCubic& m) -> cplx {
            const cplx w = k0_;
            const cplx den = 1.0 - w * z;
            if (den == kZero) pole_input(name);
            const cplx num = -2.0 * w * z * z * z + (3.0 + m.alpha * w) * z * z - 2.0 * m.alpha * z;
            return m.u * num / (den * den);
          },
          [&](const MeroTwoZeroExp& m) -> cplx {
            if (z == m.a) pole_input(name);
            const cplx d = z - m.a;
            const cplx bracket = z * z * (m.b - m.a) / (d * d) + (z - m.b) * (2.0 * z + z * z) / d;
            return m.u * std::exp(z) * bracket;
          },
          [&](const QuarticBlaschke& m) -> cplx {
            const double A = 1.0 / m.r;
            const cplx fden = 1.0 - A * z;
            const cplx gden = 1.0 - k2_ * z;
            if (fden == kZero || gden == kZero) pole_input(name);
            const cplx F = (z - A) / fden;
            const cplx dF = (1.0 - A * A) / (fden * fden);
            const cplx G = (z - k1_) / gden;
            const cplx dG = (1.0 - std::norm(k1_)) / (gden * gden);
            return k0_ * (3.0 * F * F * dF * G + F * F * F * dG);
          },
          [&](const MeroPoleExp& m) -> cplx {
            if (z == m.a) pole_input(name);
            const cplx d = z - m.a;
            return k0_ * std::exp(z) * z * (z * z + (1.0 - m.a) * z - 2.0 * m.a) / (d * d);
          },
          [&](const EntireZ2Exp& m) -> cplx { return m.lambda * (2.0 * z + z * z) * std::exp(z); },
          [&](const EntireSiegel2&) -> cplx { return -(1.0 + z) * std::exp(z) * k0_; },
          [&](const CubicBlaschke& m) -> cplx {
            const cplx den = 1.0 - k1_ * z;
            if (den == kZero) pole_input(name);
            const cplx num =
                -2.0 * k1_ * z * z * z + (3.0 + std::norm(m.a)) * z * z - 2.0 * m.a * z;
            return k0_ * num / (den * den);
          },
          [&](const Arnold& m) -> cplx {
            if (z == kZero) essential(name);
            const cplx value = k0_ * z * std::exp(0.5 * m.a * (z - 1.0 / z));
            return value * (1.0 / z + 0.5 * m.a * (1.0 + 1.0 / (z * z)));
          },
          [&](const Quadratic&) -> cplx { return 2.0 * z; },
          [&](const RigidRotation&) -> cplx { return k0_; },
      },
      spec_);
}

std::vector<CriticalPoint> Map::critical_points() const {
  using CP = CriticalPoint;
  const SpherePoint inf = SpherePoint::infinity();
  return std::visit(
      overloaded{
          [&](const CubicRat& m) -> std::vector<CP> {
            std::vector<CP> out{{kZero, 1}};
            for (cplx c : quadratic_roots(2.0 * m.a, -(m.a * m.a + 3.0), 2.0 * m.a))
              out.push_back({c, 1});
            out.push_back({inf, 1});
            return out;
          },
          [&](const NormalizedCubic& m) -> std::vector<CP> {
            const cplx w = k0_;
            std::vector<CP> out{{kZero, 1}};
            if (w == kZero) {
              out.push_back({2.0 * m.alpha / 3.0, 1});
              out.push_back({inf, 2});
              return out;
            }
            for (cplx c : quadratic_roots(2.0 * w, -(3.0 + m.alpha * w), 2.0 * m.alpha))
              out.push_back({c, 1});
            out.push_back({inf, 1});
            return out;
          },
          [&](const MeroTwoZeroExp& m) -> std::vector<CP> {
            std::vector<CP> out{{kZero, 1}};
            const std::vector<cplx> cubic{1.0, 2.0 - m.a - m.b, m.a * m.b - 3.0 * m.a - m.b,
                                          2.0 * m.a * m.b};
            for (cplx c : polynomial_roots(cubic).roots) out.push_back({c, 1});
            return out;
          },
          [&](const QuarticBlaschke& m) -> std::vector<CP> {
            const double A = 1.0 / m.r;
            const cplx beta = k1_;
            const cplx B = 1.0 / k2_;
            // 3(A-r)(z-beta)(z-B) + (beta-B)(z-A)(z-r) = 0
            const cplx c2 = 3.0 * (A - m.r) + (beta - B);
            const cplx c1 = -3.0 * (A - m.r) * (beta + B) - (beta - B) * (A + m.r);
            const cplx c0 = 3.0 * (A - m.r) * beta * B + (beta - B) * A * m.r;
            std::vector<CP> out{{A, 2}, {m.r, 2}};
            for (cplx c : quadratic_roots(c2, c1, c0)) out.push_back({c, 1});
            return out;
          },
          [&](const MeroPoleExp& m) -> std::vector<CP> {
            const cplx s = std::sqrt(1.0 + 6.0 * m.a + m.a * m.a);
            return {{kZero, 1}, {(m.a - 1.0 + s) / 2.0, 1}, {(m.a - 1.0 - s) / 2.0, 1}};
          },
          [&](const EntireZ2Exp&) -> std::vector<CP> { return {{kZero, 1}, {-2.0, 1}}; },
          [&](const EntireSiegel2&) -> std::vector<CP> { return {{-1.0, 1}}; },
          [&](const CubicBlaschke& m) -> std::vector<CP> {
            std::vector<CP> out{{kZero, 1}};
            for (cplx c : quadratic_roots(2.0 * k1_, -(3.0 + std::norm(m.a)), 2.0 * m.a))
              out.push_back({c, 1});
            out.push_back({inf, 1});
            return out;
          },
          [&](const Arnold& m) -> std::vector<CP> {
            if (m.a == 0.0) return {};
            std::vector<CP> out;
            for (cplx c : quadratic_roots(0.5 * m.a, 1.0, 0.5 * m.a)) out.push_back({c, 1});
            return out;
          },
          [&](const Quadratic&) -> std::vector<CP> { return {{kZero, 1}, {inf, 1}}; },
          [](const RigidRotation&) -> std::vector<CP> { return {}; },
      },
      spec_);
}

std::vector<Pole> Map::poles() const {
  return std::visit(
      overloaded{
          [](const CubicRat& m) -> std::vector<Pole> { return {{1.0 / m.a, 1}}; },
          [&](const NormalizedCubic&) -> std::vector<Pole> {
            if (k0_ == kZero) return {};
            return {{1.0 / k0_, 1}};
          },
          [](const MeroTwoZeroExp& m) -> std::vector<Pole> { return {{m.a, 1}}; },
          [&](const QuarticBlaschke& m) -> std::vector<Pole> {
            return {{m.r, 3}, {1.0 / k2_, 1}};
          },
          [](const MeroPoleExp& m) -> std::vector<Pole> { return {{m.a, 1}}; },
          [](const EntireZ2Exp&) -> std::vector<Pole> { return {}; },
          [](const EntireSiegel2&) -> std::vector<Pole> { return {}; },
          [&](const CubicBlaschke&) -> std::vector<Pole> { return {{1.0 / k1_, 1}}; },
          [](const Arnold&) -> std::vector<Pole> { return {}; },
          [](const Quadratic&) -> std::vector<Pole> { return {}; },
          [](const RigidRotation&) -> std::vector<Pole> { return {}; },
      },
      spec_);
}

SpherePoint evaluate(const Map& map, const SpherePoint& z) { return map.evaluate(z); }
cplx derivative(const Map& map, cplx z) { return map.derivative(z); }
std::vector<CriticalPoint> critical_points(const Map& map) { return map.critical_points(); }
std::vector<Pole> poles(const Map& map) { return map.poles(); }

}  // namespace hring
