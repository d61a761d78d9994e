#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hring/arithmetic.hpp"
#include "hring/rotation.hpp"

namespace hring {

// Map family with one free real parameter t.
using CircleFamily = std::function<Map(double)>;

CircleFamily cubic_blaschke_family(cplx a);
CircleFamily arnold_family(double a);

struct CircleSearch {
  int iterations = 1000000;  // circle-map steps per rotation estimate
  double bracket_tol = 1e-10;
  double value_tol = 1e-6;
  int max_bisections = 80;
};

// Bisection on the nondecreasing circle rotation number; throws BracketInvalid.
double find_t_circle(const CircleFamily& family, double theta, double t0, double t1,
                     const CircleSearch& settings = {});

struct ParamSlice {
  std::function<Map(double)> map_at;
  // Start of the designated orbit (a free critical point).
  std::function<SpherePoint(const Map&)> designated;
  int ring_period = 1;
  cplx center{0.0, 0.0};
  double s0 = 0.0;
  double s1 = 1.0;
};

// t -> QuarticBlaschke{r, t}; designated point: free critical point of least modulus.
ParamSlice quartic_t_slice(double r, int b_exponent, double t0, double t1);
// s -> CubicRat{a, Re b0 + i s, u_for_period2}; designated point: larger free critical point.
ParamSlice cubic_imag_b_slice(cplx a, cplx b0, double s0, double s1);
// t -> Arnold{a, t}; designated point 1 on the invariant circle.
ParamSlice arnold_t_slice(double a, double t0, double t1);

struct TongueSettings {
  int transient = 20000;      // return-map steps discarded
  int samples = 4000;         // return-map steps used for the rotation estimate
  double cycle_tol = 1e-10;   // chordal closing tolerance of a detected cycle
  int max_cycle = 512;        // longest return-map cycle searched for
  int max_bisections = 60;
  double edge_tol = 1e-12;    // parameter resolution for tongue edges
};

struct TongueProbe {
  bool usable = false;        // orbit stays on the ring locus side around the center
  bool cycle = false;         // converged to an attracting cycle of the return map
  int cycle_length = 0;       // period under the return map
  Convergent rotation{};      // cycle rotation p/q (valid when cycle)
  double rho = 0.0;           // rotation estimate (exact p/q when cycle)
};

TongueProbe probe_tongue(const ParamSlice& slice, double s, const TongueSettings& settings);

struct TongueInterval {
  Convergent target{};
  double lo = 0.0;
  double hi = 0.0;
};

// Gap of rotation p/q inside [lo, hi]: the designated orbit is locked on a p/q cycle or
// has left the ring locus. Assumes monotone rotation along the bracket; the returned ends
// are the nearest parameters outside the gap, resolved to edge_tol. orientation +1/-1
// states whether rotation increases with s; 0 infers it from the bracket ends.
std::optional<TongueInterval> locate_tongue(const ParamSlice& slice, Convergent target,
                                            double lo, double hi,
                                            const TongueSettings& settings,
                                            int orientation = 0);

struct TongueChase {
  double value = 0.0;         // midpoint of the innermost bracket
  int depth = 0;              // deepest convergent index located
  double lo = 0.0;
  double hi = 0.0;
  std::vector<TongueInterval> tongues;
};

// Nests tongues of the convergents of theta; throws TongueNotFound with the deepest
// successful level when a level cannot be located.
TongueChase find_param_by_tongues(const ParamSlice& slice, double theta, int depth,
                                  const TongueSettings& settings = {});

}  // namespace hring
