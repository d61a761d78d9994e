#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "properties.hpp"

using namespace hring;
using namespace hring::testing;

TEST_CASE("u_for_period2") {
  CHECK(std::abs(u_for_period2(4.0, 2.0) - (-7.0 / 4.0)) < 1e-15);
  const cplx u = u_for_period2(kFig1A, kFig1B);
  const Map f{CubicRat{kFig1A, kFig1B, u}};
  CHECK(std::abs(f(kFig1B).value()) < 1e-10);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-20.0, 20.0);
  for (int i = 0; i < 50; ++i) {
    const cplx a{d(rng), d(rng)}, b{d(rng), d(rng)};
    const Map g{CubicRat{a, b, u_for_period2(a, b)}};
    CHECK(std::abs(iterate_n(g, cplx{0.0, 0.0}, 2).value()) < 1e-12 * (1.0 + std::abs(b)));
  }
}

TEST_CASE("u_candidates_period3") {
  const std::vector<cplx> us = u_candidates_period3(kFig1A, kFig3B);
  bool found = false;
  for (const cplx& u : us) {
    if (std::abs(u - kFig3U) < 1e-6) found = true;
    CHECK(std::abs(iterate_n(Map{CubicRat{kFig1A, kFig3B, u}}, cplx{0.0, 0.0}, 3).value()) < 1e-8);
  }
  CHECK(found);
  try {
    u_candidates_period3(4.0, 4.0);
    FAIL("expected DegenerateQuartic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateQuartic);
  }
}

TEST_CASE("polynomial roots") {
  const std::vector<cplx> c{1.0, 0.0, -5.0, 0.0, 4.0};  // (z^2-1)(z^2-4)
  const PolyRoots r = polynomial_roots(c);
  CHECK(r.converged);
  REQUIRE(r.roots.size() == 4);
  for (double want : {-2.0, -1.0, 1.0, 2.0}) {
    bool hit = false;
    for (const cplx& z : r.roots) hit = hit || std::abs(z - want) < 1e-12;
    CHECK(hit);
  }
  const std::vector<cplx> q = quadratic_roots(1.0, 0.0, 1.0);
  CHECK(std::abs(q[0] * q[1] - 1.0) < 1e-15);
}

TEST_CASE("solve_siegel2_b") {
  const NewtonReport r = solve_siegel2_b(kGolden, {1.0, 1.0});
  const Map e{EntireSiegel2{r.root}};
  const cplx mult = e.derivative(0.0) * e.derivative(r.root);
  CHECK(std::abs(mult - unit_phase(kGolden)) < 1e-12);
  // theta and 1 - theta from conjugate seeds are conjugate
  const NewtonReport s = solve_siegel2_b(1.0 - kGolden, {1.0, -1.0});
  CHECK(std::abs(s.root - std::conj(r.root)) < 1e-10);
  // theta = 0 near 0 falls onto the excluded solution b = 0
  CHECK_THROWS_AS((solve_siegel2_b(0.0, {0.01, 0.01})), Error);
}

TEST_CASE("siegel_lambda_fixed") {
  const SiegelFixed s = siegel_lambda_fixed(kGolden);
  const Map e{EntireZ2Exp{s.lambda}};
  CHECK(std::abs(e(s.z_fixed).value() - s.z_fixed) < 1e-13);
  const cplx m = e.derivative(s.z_fixed);
  CHECK(std::abs(std::abs(m) - 1.0) < 1e-12);
  CHECK(std::abs(std::arg(m / unit_phase(kGolden))) < 1e-12);

  const SiegelFixed h = siegel_lambda_fixed(0.5);
  CHECK(std::abs(h.z_fixed - (-3.0)) < 1e-12);
  CHECK(std::abs(h.lambda - (-std::exp(3.0) / 3.0)) < 1e-12);
  CHECK(std::abs(Map{EntireZ2Exp{h.lambda}}.derivative(h.z_fixed) - (-1.0)) < 1e-12);
}

TEST_CASE("rescale_normalized") {
  const CubicRat c = rescale_normalized(2.5, {0.3, 0.1}, {0.2, 0.0});
  CHECK(std::abs(c.a * c.a - 10.0) < 1e-12);
  CHECK(std::abs(c.a - std::sqrt(10.0)) < 1e-12);
  const cplx al = 2.5;
  CHECK(std::abs(c.a * c.a - (5.0 + 2.0 * ((al - 2.0) + 1.0 / (al - 2.0)))) < 1e-12);
  try {
    rescale_normalized(2.0, 1.0, 1.0);
    FAIL("expected SingularRescale");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularRescale);
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int k = 0; k < 10; ++k) {
    const cplx alpha{d(rng) + 4.0, d(rng)}, beta{d(rng), d(rng)}, u{d(rng), d(rng)};
    const CubicRat r = rescale_normalized(alpha, beta, u);
    const cplx kappa = r.a / alpha;
    const Map norm{NormalizedCubic{alpha, beta, u}}, f{r};
    for (int i = 0; i < 10; ++i) {
      const cplx z{d(rng), d(rng)};
      const SpherePoint lhs = f(kappa * z), rhs = norm(z);
      if (lhs.is_infinity() || rhs.is_infinity()) continue;
      CHECK(std::abs(lhs.value() - kappa * rhs.value()) < 1e-10 * (1.0 + std::abs(lhs.value())));
    }
  }
}
