#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hring/maps.hpp"

namespace hring {

struct StopRules {
  // Overrides the family default escape test when set (|z| > radius).
  std::optional<double> escape_radius;
  bool stop_at_pole = false;
  // Stop once consecutive points are this close (chordal); 0 disables.
  double converge_tol = 0.0;
};

enum class Termination { Budget, Escape, PoleHit, Converged };

std::string_view to_string(Termination t);

struct Orbit {
  std::vector<SpherePoint> points;
  double log_deriv_sum = 0.0;  // sum of log|f'| over finite, non-pole points
  Termination terminated_by = Termination::Budget;
};

// Family default escape test.
bool escaped(const Map& map, const SpherePoint& z, double escape_radius);

Orbit iterate(const Map& map, const SpherePoint& z0, int n, const StopRules& stops = {});

// f^n(z)
SpherePoint iterate_n(const Map& map, SpherePoint z, int n);

struct CycleReport {
  double residual = 0.0;             // chordal(f^p(z0), z0)
  std::vector<SpherePoint> points;   // z0, f(z0), ..., f^p(z0)
  double multiplier = 0.0;           // product of |f'| over finite non-pole cycle points
  bool through_infinity = false;
};

CycleReport verify_cycle(const Map& map, const SpherePoint& z0, int p);

struct Budget {
  int max_iter = 2000;          // N, counted in f^p steps
  int ring_period = 1;          // p
  int max_entry = 32;           // preliminary f steps allowed before recurrence
  double escape_radius = 1e6;   // rational families with attracting infinity
  double attract_tol = 1e-9;    // chordal
  double recur_tol = 5e-3;      // chordal
  int max_period = 64;          // longest attracting cycle searched for
  double converging_tol = 1e-6; // tail residual below which an orbit is still settling
};

enum class FateClass { EscapeToInfinity, AttractedToCycle, RotationDomain, Undecided };

std::string_view to_string(FateClass c);

struct Fate {
  FateClass cls = FateClass::Undecided;
  int period = 0;            // AttractedToCycle
  cplx representative{};     // AttractedToCycle (finite representative, or 0 for infinity)
  bool representative_infinite = false;
  int entry_steps = 0;       // RotationDomain

  bool decided() const {
    return cls == FateClass::EscapeToInfinity || cls == FateClass::AttractedToCycle;
  }
};

Fate classify_point(const Map& map, const SpherePoint& z, const Budget& budget);

struct RayScan {
  cplx base{0.0, 0.0};
  cplx direction{1.0, 0.0};
  double r_min = 1e-3;
  double r_max = 10.0;
  int samples = 200;
};

// Innermost sample on the ray classified RotationDomain(0); throws NoRingFound.
SpherePoint find_ring_seed(const Map& map, const RayScan& scan, const Budget& budget);

// sup over n pseudo-random sphere points of chordal(h(tau z), tau h(z)).
double symmetry_residual(const Map& map, int n, std::uint64_t seed = 1);

struct QuarticCycleReport {
  SpherePoint image_of_zero_factor;  // h(1/r)
  SpherePoint image_of_zero;         // h(0)
  SpherePoint image_of_r;            // h(r)
  SpherePoint image_of_infinity;     // h(inf)
  int period_of_zero = 0;            // exact cycle length through 0 (0 if none up to 8)
  std::vector<SpherePoint> cycle_of_zero;
  int period_of_infinity = 0;
  std::vector<SpherePoint> cycle_of_infinity;
  double pole_order_at_r = 0.0;      // numerical growth exponent of |h| near r
  double residual_zero_cycle = 0.0;
};

QuarticCycleReport quartic_cycle_report(const QuarticBlaschke& q);

}  // namespace hring
