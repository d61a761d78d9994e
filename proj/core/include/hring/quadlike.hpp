#pragma once

#include <span>
#include <string>
#include <vector>

#include "hring/dynamics.hpp"

namespace hring {

// Geometry attached to lambda z^2 e^z with arg lambda in (0, 2 pi).
class RegionGeometry {
 public:
  // Throws DomainError when lambda is 0 or on the positive real axis.
  explicit RegionGeometry(cplx lambda);

  cplx lambda() const { return lambda_; }
  double arg_lambda() const { return arg_; }
  double abs_lambda() const { return abs_; }
  // lambda z^2 e^z
  cplx E(cplx z) const;

 private:
  cplx lambda_;
  double arg_;
  double abs_;
};

// arg in [0, 2 pi)
double arg0(cplx z);

enum class Branch { Plus, Minus, None };

// Point of the preimage curve sigma_k on the ray of angle theta.
cplx sigma_point(const RegionGeometry& g, int k, Branch branch, double theta);

// Imaginary-part residual of the defining equation of sigma_k at z.
double sigma_residual(const RegionGeometry& g, int k, cplx z);

enum class Region { Omega0, OmegaTilde0, OmegaK };

struct Membership {
  bool inside = false;
  bool on_boundary = false;  // within 1e-9 of a boundary curve
};

// k only matters for OmegaK (k != 0).
Membership region_contains(const RegionGeometry& g, Region region, cplx z, int k = 0);

bool in_V(const RegionGeometry& g, cplx z);
bool in_U(const RegionGeometry& g, cplx z);

struct CriticalValueMargins {
  cplx v;                     // 4 lambda / e^2
  double abs_v = 0.0;
  double upper_margin = 0.0;  // 30 - |v|
  double lower_margin = 0.0;  // |v| - 1/(16|lambda|)
  bool off_positive_axis = false;
};

CriticalValueMargins check_critical_value(const RegionGeometry& g);

// Rounded (1/2pi) sum of principal argument increments over a closed path.
// Throws PathThroughZero or UnderSampled.
int winding_number(std::span<const cplx> samples);

// Closed positively oriented boundary of |lambda| in [1/2, 50], arg in [1/10, 2pi - 1/10].
std::vector<cplx> boundary_D(int samples);

struct QuadlikeGrid {
  int interior = 1000;       // lambda samples in Lambda
  int boundary = 10000;      // lambda samples on the boundary of D
  int z_res = 300;           // z-box resolution per axis
  int containment_lambdas = 2000;  // lambdas (interior + boundary) used for the z-box check
  int degree_lambdas = 3;    // lambdas for the root count
  int degree_w = 100;        // random w per lambda for the root count
  int newton_seeds = 40;     // per axis
  unsigned threads = 0;      // 0: hardware concurrency
};

struct QuadlikeRecord {
  std::string check_id;
  cplx lambda;
  bool pass = true;
  double margin = 0.0;
};

struct QuadlikeReport {
  std::vector<QuadlikeRecord> failures;
  int critical_value_checked = 0;      // (i)
  double critical_value_min_margin = 0.0;
  int boundary_checked = 0;            // (ii)
  double boundary_min_margin = 0.0;
  int winding = 0;                     // (iii)
  int winding_refined = 0;
  int containment_points = 0;          // (iv) z samples with in_U true
  double containment_min_margin = 0.0;
  int degree_trials = 0;
  int degree_failures = 0;
  double gamma1_abs_v = 0.0;
  double gamma2_abs_v = 0.0;
  bool pass_critical_value = false;
  bool pass_boundary = false;
  bool pass_winding = false;
  bool pass_containment = false;
  bool pass_degree = false;
  bool all_pass() const {
    return pass_critical_value && pass_boundary && pass_winding && pass_containment &&
           pass_degree;
  }
};

// Test hook: replaces 4 lambda/e^2 in check (i) with factor * lambda / e^2.
QuadlikeReport verify_mandelbrot_like(const QuadlikeGrid& grid, double critical_factor = 4.0);

// Solutions of lambda z^2 e^z = w in the box [-20,5]x[-4pi,4pi] from a Newton seed grid.
std::vector<cplx> solve_E_equals(const RegionGeometry& g, cplx w, int seeds_per_axis);

// Fate of the free critical orbit -2 under lambda z^2 e^z.
Fate param_fate_E(cplx lambda, const Budget& budget);

}  // namespace hring
