#include "hring/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hring/errors.hpp"

namespace hring {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Budget: return "budget";
    case Termination::Escape: return "escape";
    case Termination::PoleHit: return "pole_hit";
    case Termination::Converged: return "converged";
  }
  return "budget";
}

std::string_view to_string(FateClass c) {
  switch (c) {
    case FateClass::EscapeToInfinity: return "EscapeToInfinity";
    case FateClass::AttractedToCycle: return "AttractedToCycle";
    case FateClass::RotationDomain: return "RotationDomain";
    case FateClass::Undecided: return "Undecided";
  }
  return "Undecided";
}

bool escaped(const Map& map, const SpherePoint& z, double escape_radius) {
  if (map.transcendental()) {
    if (z.is_infinity()) return true;
    const cplx w = z.value();
    if (w.real() > 700.0 || std::abs(w) > 1e100) return true;
    if (std::holds_alternative<Arnold>(map.spec()) && std::abs(w) < 1e-100) return true;
    return false;
  }
  if (map.infinity_attracting())
    return z.is_infinity() || std::abs(z.value()) > escape_radius;
  return false;
}

Orbit iterate(const Map& map, const SpherePoint& z0, int n, const StopRules& stops) {
  if (n < 1) throw Error(Errc::DomainError, "iterate needs n >= 1");
  Orbit orbit;
  orbit.points.reserve(static_cast<std::size_t>(n) + 1);
  orbit.points.push_back(z0);
  const double radius = stops.escape_radius.value_or(1e6);
  for (int k = 0; k < n; ++k) {
    const SpherePoint cur = orbit.points.back();
    const bool out = stops.escape_radius
                         ? (cur.is_infinity() || std::abs(cur.value()) > radius)
                         : escaped(map, cur, radius);
    if (out) {
      orbit.terminated_by = Termination::Escape;
      return orbit;
    }
    const SpherePoint next = map(cur);
    if (cur.is_finite() && next.is_finite()) {
      try {
        orbit.log_deriv_sum += std::log(std::abs(map.derivative(cur.value())));
      } catch (const Error&) {
      }
    }
    orbit.points.push_back(next);
    if (cur.is_finite() && next.is_infinity() && (stops.stop_at_pole || map.transcendental())) {
      orbit.terminated_by = Termination::PoleHit;
      return orbit;
    }
    if (stops.converge_tol > 0.0 && chordal(cur, next) < stops.converge_tol) {
      orbit.terminated_by = Termination::Converged;
      return orbit;
    }
  }
  return orbit;
}

SpherePoint iterate_n(const Map& map, SpherePoint z, int n) {
  for (int k = 0; k < n; ++k) z = map(z);
  return z;
}

CycleReport verify_cycle(const Map& map, const SpherePoint& z0, int p) {
  if (p < 1) throw Error(Errc::DomainError, "verify_cycle needs p >= 1");
  CycleReport rep;
  rep.points.push_back(z0);
  rep.multiplier = 1.0;
  SpherePoint cur = z0;
  for (int k = 0; k < p; ++k) {
    // Images of a rounded pole are huge but finite; they count as infinity.
    const bool at_infinity = chordal(cur, SpherePoint::infinity()) < 1e-12;
    if (at_infinity) rep.through_infinity = true;
    if (cur.is_infinity() && map.transcendental()) {
      rep.residual = chordal(cur, z0);
      return rep;
    }
    if (!at_infinity) {
      try {
        rep.multiplier *= std::abs(map.derivative(cur.value()));
      } catch (const Error&) {
        rep.through_infinity = true;
      }
    }
    cur = map(cur);
    rep.points.push_back(cur);
  }
  rep.residual = chordal(cur, z0);
  return rep;
}

namespace {

// Smallest q such that the last full cycle of length q repeats within tol.
int detect_cycle(const std::vector<UnitVec>& u, int n, int max_period, double tol2) {
  const int qmax = std::min(max_period, n / 2);
  for (int q = 1; q <= qmax; ++q) {
    if (dist2(u[n], u[n - q]) >= tol2) continue;
    bool ok = true;
    for (int j = 1; j < q && ok; ++j) ok = dist2(u[n - j], u[n - j - q]) < tol2;
    if (ok) return q;
  }
  return 0;
}

// A close return at m must repeat at 2m with about twice the distance, as under a
// rotation; a single chance approach of a transient orbit does not.
bool recurrent_from(const std::vector<UnitVec>& u, int k, int p, int n, double tol2) {
  const UnitVec& w = u[k];
  const double tol2_double = 6.25 * tol2;
  for (int m = 1; 2 * m <= n; ++m)
    if (dist2(u[k + p * m], w) < tol2 && dist2(u[k + 2 * p * m], w) < tol2_double) return true;
  return false;
}

}  // namespace

Fate classify_point(const Map& map, const SpherePoint& z, const Budget& budget) {
  const int p = std::max(1, budget.ring_period);
  const int n_steps = std::max(1, budget.max_iter);
  const int k_max = std::max(0, budget.max_entry);
  const int length = k_max + p * n_steps;
  const double atol2 = budget.attract_tol * budget.attract_tol;

  thread_local std::vector<UnitVec> u;
  u.clear();
  u.reserve(static_cast<std::size_t>(length) + 1);

  Fate fate;
  SpherePoint cur = z;
  for (int n = 0;; ++n) {
    if (escaped(map, cur, budget.escape_radius)) {
      fate.cls = FateClass::EscapeToInfinity;
      return fate;
    }
    u.push_back(to_unit_sphere(cur));
    if (n >= 2 && n % 8 == 0) {
      if (const int q = detect_cycle(u, n, budget.max_period, atol2); q > 0) {
        fate.cls = FateClass::AttractedToCycle;
        fate.period = q;
        fate.representative_infinite = cur.is_infinity();
        fate.representative = cur.is_infinity() ? cplx{} : cur.value();
        return fate;
      }
    }
    if (n == length) break;
    cur = map(cur);
  }

  // Still settling onto a cycle: not a rotation domain yet.
  const double ctol2 = budget.converging_tol * budget.converging_tol;
  for (int q = 1; q <= std::min(budget.max_period, length); ++q)
    if (dist2(u[length], u[length - q]) < ctol2) return fate;

  const double rtol2 = budget.recur_tol * budget.recur_tol;
  auto rec = [&](int k) { return recurrent_from(u, k, p, n_steps, rtol2); };
  if (rec(0)) {
    fate.cls = FateClass::RotationDomain;
    fate.entry_steps = 0;
    return fate;
  }
  if (k_max == 0 || !rec(k_max)) return fate;
  // Once inside the periodic rings the orbit stays recurrent: bisect for the entry step.
  int lo = 0, hi = k_max;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (rec(mid))
      hi = mid;
    else
      lo = mid;
  }
  fate.cls = FateClass::RotationDomain;
  fate.entry_steps = hi;
  return fate;
}

SpherePoint find_ring_seed(const Map& map, const RayScan& scan, const Budget& budget) {
  if (scan.samples < 1 || !(scan.r_max >= scan.r_min))
    throw Error(Errc::DomainError, "find_ring_seed: invalid scan");
  const cplx dir = scan.direction / std::abs(scan.direction);
  for (int i = 0; i < scan.samples; ++i) {
    const double t = scan.samples == 1 ? 0.0 : double(i) / double(scan.samples - 1);
    const cplx z = scan.base + (scan.r_min + t * (scan.r_max - scan.r_min)) * dir;
    const Fate f = classify_point(map, z, budget);
    if (f.cls == FateClass::RotationDomain && f.entry_steps == 0) return z;
  }
  throw Error(Errc::NoRingFound, "no ray sample classified as a periodic ring point");
}

double symmetry_residual(const Map& map, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = normal(rng), y = normal(rng), w = normal(rng);
    const double len = std::sqrt(x * x + y * y + w * w);
    // Inverse stereographic projection of a uniform sphere point.
    const double X = x / len, Y = y / len, Z = w / len;
    const SpherePoint z =
        Z >= 1.0 ? SpherePoint::infinity() : SpherePoint(cplx{X, Y} / (1.0 - Z));
    sup = std::max(sup, chordal(map(tau(z)), tau(map(z))));
  }
  return sup;
}

QuarticCycleReport quartic_cycle_report(const QuarticBlaschke& q) {
  const Map h{q};
  QuarticCycleReport rep;
  rep.image_of_zero_factor = h(1.0 / q.r);
  rep.image_of_zero = h(cplx{0.0, 0.0});
  rep.image_of_r = h(q.r);
  rep.image_of_infinity = h(SpherePoint::infinity());

  auto cycle_of = [&](const SpherePoint& start, std::vector<SpherePoint>& pts) {
    pts.assign(1, start);
    SpherePoint cur = start;
    for (int k = 1; k <= 8; ++k) {
      cur = h(cur);
      if (chordal(cur, start) < 1e-12) return k;
      pts.push_back(cur);
    }
    pts.clear();
    return 0;
  };
  rep.period_of_zero = cycle_of(cplx{0.0, 0.0}, rep.cycle_of_zero);
  rep.period_of_infinity = cycle_of(SpherePoint::infinity(), rep.cycle_of_infinity);
  if (rep.period_of_zero > 0)
    rep.residual_zero_cycle =
        chordal(iterate_n(h, cplx{0.0, 0.0}, rep.period_of_zero), cplx{0.0, 0.0});

  const double d1 = 1e-4 * q.r, d2 = 1e-6 * q.r;
  const SpherePoint v1 = h(q.r + d1), v2 = h(q.r + d2);
  if (v1.is_finite() && v2.is_finite())
    rep.pole_order_at_r =
        std::log(std::abs(v2.value()) / std::abs(v1.value())) / std::log(d1 / d2);
  return rep;
}

}  // namespace hring
