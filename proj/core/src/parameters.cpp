#include "hring/parameters.hpp"

#include <algorithm>
#include <cmath>

#include "hring/errors.hpp"
#include "hring/polynomial.hpp"

namespace hring {

cplx u_for_period2(cplx a, cplx b) {
  if (b == cplx{0.0, 0.0} || b == a)
    throw Error(Errc::DegenerateParameters, "u_for_period2 needs b != 0 and b != a");
  return (a * b - 1.0) / (b * (b - a));
}

std::vector<cplx> period3_quartic(cplx a, cplx b) {
  const cplx den = 1.0 - a * b;
  if (den == cplx{0.0, 0.0})
    throw Error(Errc::DegenerateParameters, "period3_quartic: b is the pole 1/a");
  // c(u) = f(b) = P u + b; clearing f(c) = 0 gives u c^2 (c - a) + b (1 - a c) = 0.
  const cplx P = b * b * (b - a) / den;
  const cplx d = b - a;
  return {
      P * P * P,
      P * P * (d + 2.0 * b),
      P * b * (2.0 * d + b),
      b * b * d - a * b * P,
      b * den,
  };
}

std::vector<cplx> u_candidates_period3(cplx a, cplx b) {
  std::vector<cplx> c = period3_quartic(a, b);
  double scale = 0.0;
  for (const cplx& x : c) scale = std::max(scale, std::abs(x));
  if (std::abs(c[0]) <= 1e-14 * scale) {
    Error err(Errc::DegenerateQuartic, "leading coefficient of the period-3 quartic vanishes");
    std::size_t first = 0;
    while (first < c.size() && std::abs(c[first]) <= 1e-14 * scale) ++first;
    if (first + 1 < c.size()) {
      err.partial_roots =
          polynomial_roots(std::span<const cplx>(c).subspan(first)).roots;
    }
    throw err;
  }
  PolyRoots roots = polynomial_roots(c, 500, 1e-10);
  if (!roots.converged)
    throw Error(Errc::NoConvergence, "period-3 quartic roots did not reach residual 1e-10");
  return roots.roots;
}

NewtonReport solve_siegel2_b(double theta, cplx seed, int max_iter) {
  const cplx target = unit_phase(theta);
  auto F = [&](cplx b) { return (b + 1.0) * std::exp(-b) - target; };
  cplx b = seed;
  cplx fb = F(b);
  int it = 0;
  for (; it < max_iter && std::abs(fb) >= 1e-14; ++it) {
    const cplx dF = -b * std::exp(-b);
    if (dF == cplx{0.0, 0.0}) break;
    const cplx step = -fb / dF;
    double damping = 1.0;
    cplx next = b + step;
    cplx fnext = F(next);
    int halvings = 0;
    while (!(std::abs(fnext) < std::abs(fb)) && halvings < 40) {
      damping *= 0.5;
      next = b + damping * step;
      fnext = F(next);
      ++halvings;
    }
    if (!(std::abs(fnext) < std::abs(fb))) break;
    b = next;
    fb = fnext;
  }
  const double residual = std::abs(fb);
  if (!(residual < 1e-12))
    throw Error(Errc::NoConvergence, "damped Newton for (b+1)e^{-b} = e^{2 pi i theta} stalled");
  if (std::abs(b) < 1e-4)
    throw Error(Errc::NoConvergence, "Newton converged to the excluded solution b = 0");
  return {b, residual, it};
}

SiegelFixed siegel_lambda_fixed(double theta) {
  const cplx z = unit_phase(theta) - 2.0;
  return {std::exp(-z) / z, z};
}

cplx normalized_omega(cplx alpha) { return (2.0 * alpha - 3.0) / (alpha - 2.0); }

CubicRat rescale_normalized(cplx alpha, cplx beta, cplx u_norm) {
  if (alpha == cplx{0.0, 0.0} || alpha == cplx{1.5, 0.0} || alpha == cplx{2.0, 0.0})
    throw Error(Errc::SingularRescale, "alpha in {0, 3/2, 2} gives kappa 0 or infinite");
  const cplx kappa = std::sqrt((2.0 * alpha - 3.0) / (alpha * (alpha - 2.0)));
  return {alpha * kappa, kappa * beta, u_norm / (kappa * kappa)};
}

}  // namespace hring
