#pragma once

#include <span>
#include <vector>

#include "hring/sphere.hpp"

namespace hring {

// Coefficients are ordered from the highest degree down.
cplx poly_eval(std::span<const cplx> coeffs, cplx z);

struct PolyRoots {
  std::vector<cplx> roots;
  int steps = 0;
  // max over roots of |p(z)| / sum |c_k||z|^k
  double relative_residual = 0.0;
  bool converged = false;
};

// Aberth simultaneous iteration without deflation, then Newton polish.
// Leading coefficient must be nonzero.
PolyRoots polynomial_roots(std::span<const cplx> coeffs, int max_steps = 500,
                           double tol = 1e-10);

// Both roots of c2 z^2 + c1 z + c0 (c2 != 0), principal square root branch.
std::vector<cplx> quadratic_roots(cplx c2, cplx c1, cplx c0);

}  // namespace hring
