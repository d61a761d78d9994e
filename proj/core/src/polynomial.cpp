#include "hring/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hring/errors.hpp"

namespace hring {
namespace {

// p(z), p'(z) and sum |c_k||z|^k by Horner.
struct Horner {
  cplx p, dp;
  double scale;
};

Horner horner(std::span<const cplx> c, cplx z) {
  cplx p = c[0], dp = 0.0;
  double s = std::abs(c[0]);
  const double az = std::abs(z);
  for (std::size_t k = 1; k < c.size(); ++k) {
    dp = dp * z + p;
    p = p * z + c[k];
    s = s * az + std::abs(c[k]);
  }
  return {p, dp, s};
}

double rel_residual(std::span<const cplx> c, cplx z) {
  const Horner h = horner(c, z);
  return h.scale > 0.0 ? std::abs(h.p) / h.scale : 0.0;
}

}  // namespace

cplx poly_eval(std::span<const cplx> coeffs, cplx z) { return horner(coeffs, z).p; }

PolyRoots polynomial_roots(std::span<const cplx> coeffs, int max_steps, double tol) {
  if (coeffs.empty() || coeffs[0] == cplx{0.0, 0.0})
    throw Error(Errc::DomainError, "polynomial_roots: leading coefficient must be nonzero");
  const std::size_t n = coeffs.size() - 1;
  PolyRoots out;
  if (n == 0) {
    out.converged = true;
    return out;
  }

  // Initial guesses on a circle of the Fujiwara-type radius, off the real axis.
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k)
    radius = std::max(radius, std::pow(std::abs(coeffs[k] / coeffs[0]), 1.0 / double(k)));
  if (radius == 0.0) radius = 1.0;
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = 2.0 * std::numbers::pi * double(k) / double(n) + 0.4;
    z[k] = std::polar(radius, ang);
  }

  std::vector<bool> done(n, false);
  int step = 0;
  for (; step < max_steps; ++step) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Horner h = horner(coeffs, z[i]);
      if (h.scale == 0.0 || std::abs(h.p) <= 1e-3 * tol * h.scale) {
        done[i] = true;
        continue;
      }
      all = false;
      const cplx ratio = h.p / h.dp;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx denom = 1.0 - ratio * sum;
      const cplx w = (denom == cplx{0.0, 0.0} || !std::isfinite(std::abs(denom)))
                         ? ratio
                         : ratio / denom;
      z[i] -= w;
      if (std::abs(w) <= 1e-16 * std::max(1.0, std::abs(z[i]))) done[i] = true;
    }
    if (all) break;
  }

  // Newton polish on the undeflated polynomial.
  for (cplx& r : z) {
    for (int it = 0; it < 8; ++it) {
      const Horner h = horner(coeffs, r);
      if (h.dp == cplx{0.0, 0.0}) break;
      const cplx next = r - h.p / h.dp;
      if (rel_residual(coeffs, next) > rel_residual(coeffs, r)) break;
      r = next;
    }
  }

  out.steps = step;
  out.relative_residual = 0.0;
  for (const cplx& r : z) out.relative_residual = std::max(out.relative_residual, rel_residual(coeffs, r));
  out.converged = out.relative_residual <= tol;
  out.roots = std::move(z);
  return out;
}

std::vector<cplx> quadratic_roots(cplx c2, cplx c1, cplx c0) {
  if (c2 == cplx{0.0, 0.0}) {
    if (c1 == cplx{0.0, 0.0}) return {};
    return {-c0 / c1};
  }
  const cplx s = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
  // Avoid cancellation: pick the larger-modulus numerator first.
  const cplx q = (std::abs(-c1 + s) >= std::abs(-c1 - s)) ? (-c1 + s) : (-c1 - s);
  if (q == cplx{0.0, 0.0}) return {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
  const cplx r1 = q / (2.0 * c2);
  const cplx r2 = (2.0 * c0) / q;
  // Order as (-c1 + s), (-c1 - s) under the principal root.
  if (std::abs(-c1 + s) >= std::abs(-c1 - s)) return {r1, r2};
  return {r2, r1};
}

}  // namespace hring
