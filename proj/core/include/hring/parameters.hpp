#pragma once

#include <vector>

#include "hring/maps.hpp"

namespace hring {

// u making b -> 0 under the cubic family, so 0 -> b -> 0 is a super-attracting 2-cycle.
cplx u_for_period2(cplx a, cplx b);

// Roots u of the quartic from 0 -> b -> c(u) -> 0. Throws DegenerateQuartic with the
// lower-degree roots when the leading coefficient vanishes.
std::vector<cplx> u_candidates_period3(cplx a, cplx b);

// Coefficients (highest degree first) of that quartic.
std::vector<cplx> period3_quartic(cplx a, cplx b);

struct NewtonReport {
  cplx root;
  double residual = 0.0;
  int iterations = 0;
};

// Solves (b+1) e^{-b} = e^{2 pi i theta} by damped Newton.
NewtonReport solve_siegel2_b(double theta, cplx seed, int max_iter = 100);

struct SiegelFixed {
  cplx lambda;
  cplx z_fixed;
};

// lambda with a fixed point of multiplier e^{2 pi i theta} for lambda z^2 e^z.
SiegelFixed siegel_lambda_fixed(double theta);

// Conjugates the normalized cubic by z -> kappa z into the (a, b, u) family.
CubicRat rescale_normalized(cplx alpha, cplx beta, cplx u_norm);

cplx normalized_omega(cplx alpha);

}  // namespace hring
