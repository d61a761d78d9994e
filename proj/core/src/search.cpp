#include "hring/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hring/errors.hpp"
#include "hring/parameters.hpp"

namespace hring {

CircleFamily cubic_blaschke_family(cplx a) {
  return [a](double t) { return Map{CubicBlaschke{a, t}}; };
}

CircleFamily arnold_family(double a) {
  return [a](double t) { return Map{Arnold{a, t}}; };
}

double find_t_circle(const CircleFamily& family, double theta, double t0, double t1,
                     const CircleSearch& settings) {
  auto rho = [&](double t) {
    return circle_rotation_number(family(t), settings.iterations).value;
  };
  const double r0 = rho(t0), r1 = rho(t1);
  if (!(r0 < theta && theta < r1))
    throw Error(Errc::BracketInvalid, "need rho(t0) < theta < rho(t1); got rho(t0)=" +
                                          std::to_string(r0) + ", rho(t1)=" + std::to_string(r1));
  double lo = t0, hi = t1;
  for (int it = 0; it < settings.max_bisections && hi - lo > settings.bracket_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double r = rho(mid);
    if (std::abs(r - theta) < settings.value_tol) return mid;
    (r < theta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

SpherePoint least_free_critical(const Map& map) {
  SpherePoint best = SpherePoint::infinity();
  double best_mod = INFINITY;
  for (const CriticalPoint& c : map.critical_points()) {
    if (c.multiplicity != 1 || c.point.is_infinity()) continue;
    const double m = std::abs(c.point.value());
    if (m < best_mod) {
      best_mod = m;
      best = c.point;
    }
  }
  return best;
}

SpherePoint largest_finite_critical(const Map& map) {
  SpherePoint best = SpherePoint::infinity();
  double best_mod = -1.0;
  for (const CriticalPoint& c : map.critical_points()) {
    if (c.point.is_infinity()) continue;
    const double m = std::abs(c.point.value());
    if (m > best_mod) {
      best_mod = m;
      best = c.point;
    }
  }
  return best;
}

bool same(const Convergent& a, const Convergent& b) { return a.p == b.p && a.q == b.q; }

}  // namespace

ParamSlice quartic_t_slice(double r, int b_exponent, double t0, double t1) {
  ParamSlice s;
  s.map_at = [r, b_exponent](double t) { return Map{QuarticBlaschke{r, t, b_exponent}}; };
  s.designated = least_free_critical;
  s.ring_period = 2;
  s.s0 = t0;
  s.s1 = t1;
  return s;
}

ParamSlice cubic_imag_b_slice(cplx a, cplx b0, double s0, double s1) {
  ParamSlice s;
  s.map_at = [a, b0](double im) {
    const cplx b{b0.real(), im};
    return Map{CubicRat{a, b, u_for_period2(a, b)}};
  };
  s.designated = largest_finite_critical;
  s.ring_period = 2;
  s.s0 = s0;
  s.s1 = s1;
  return s;
}

ParamSlice arnold_t_slice(double a, double t0, double t1) {
  ParamSlice s;
  s.map_at = [a](double t) { return Map{Arnold{a, t}}; };
  s.designated = [](const Map&) { return SpherePoint(cplx{1.0, 0.0}); };
  s.ring_period = 1;
  s.s0 = t0;
  s.s1 = t1;
  return s;
}

namespace {

// Rotation p/q of a return-map cycle from the constant shift of angular ranks.
bool cycle_rotation(std::span<const cplx> pts, cplx center, Convergent& out) {
  const auto q = static_cast<std::int64_t>(pts.size());
  std::vector<double> ang(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ang[i] = std::arg(pts[i] - center);
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
  std::vector<std::int64_t> rank(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) rank[order[i]] = static_cast<std::int64_t>(i);
  std::int64_t shift = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::int64_t s = ((rank[(i + 1) % pts.size()] - rank[i]) % q + q) % q;
    if (shift < 0) shift = s;
    if (s != shift) return false;
  }
  out = {shift, q};
  return true;
}

TongueProbe probe_once(const ParamSlice& slice, const Map& map, const TongueSettings& st) {
  const int p = std::max(1, slice.ring_period);
  const Budget escape_budget;
  TongueProbe best;
  double best_gap = INFINITY;
  SpherePoint start = slice.designated(map);
  for (int j = 0; j < p; ++j, start = map(start)) {
    SpherePoint cur = start;
    bool alive = true;
    auto step = [&]() {
      for (int i = 0; i < p && alive; ++i) {
        if (escaped(map, cur, escape_budget.escape_radius) || cur.is_infinity()) {
          alive = false;
          break;
        }
        cur = map(cur);
      }
      if (cur.is_infinity()) alive = false;
    };
    for (int m = 0; m < st.transient && alive; ++m) step();
    if (!alive) continue;

    TongueProbe pr;
    const SpherePoint anchor = cur;
    std::vector<cplx> pts{cur.value()};
    for (int m = 1; m <= st.max_cycle && alive; ++m) {
      step();
      if (!alive) break;
      if (chordal(cur, anchor) < st.cycle_tol) {
        pr.cycle = true;
        pr.cycle_length = m;
        break;
      }
      pts.push_back(cur.value());
    }
    if (!alive) continue;
    double gap;
    if (pr.cycle) {
      Convergent rot;
      if (!cycle_rotation(pts, slice.center, rot)) continue;
      pr.rotation = rot;
      pr.rho = double(rot.p) / double(rot.q);
      gap = pts.size() >= 3 ? max_angular_gap(pts, slice.center) : std::numbers::pi;
      pr.usable = rot.q >= 2 || gap < std::numbers::pi;
    } else {
      for (int m = static_cast<int>(pts.size()); m <= st.samples && alive; ++m) {
        step();
        if (alive) pts.push_back(cur.value());
      }
      if (!alive) continue;
      gap = max_angular_gap(pts, slice.center);
      pr.rho = rank_shift_rotation(pts, slice.center);
      pr.usable = gap < std::numbers::pi;
    }
    if (pr.usable && gap < best_gap) {
      best_gap = gap;
      best = pr;
    }
  }
  return best;
}

}  // namespace

TongueProbe probe_tongue(const ParamSlice& slice, double s, const TongueSettings& settings) {
  return probe_once(slice, slice.map_at(s), settings);
}

std::optional<TongueInterval> locate_tongue(const ParamSlice& slice, Convergent target,
                                            double lo, double hi,
                                            const TongueSettings& settings, int orientation) {
  const double r = double(target.p) / double(target.q);
  TongueSettings deep = settings;
  deep.transient *= 8;
  deep.samples *= 8;

  auto probe = [&](double s) {
    TongueProbe pr = probe_tongue(slice, s, settings);
    // Estimates within their own resolution of the target are redone with a longer orbit.
    if (pr.usable && !pr.cycle && std::abs(pr.rho - r) < 2.0 / settings.samples)
      pr = probe_tongue(slice, s, deep);
    return pr;
  };
  // A rational gap shows either a locked cycle or a critical orbit lost to another basin.
  auto inside = [&](const TongueProbe& pr) {
    return !pr.usable || (pr.cycle && same(pr.rotation, target));
  };

  if (orientation == 0) {
    const TongueProbe plo = probe(lo), phi = probe(hi);
    if (inside(plo) || inside(phi)) return std::nullopt;
    orientation = phi.rho > plo.rho ? 1 : -1;
  }
  double a = lo, b = hi;  // rotation below target at a, above at b
  if (orientation < 0) std::swap(a, b);

  // First parameter outside the gap between in and out.
  auto edge = [&](double in, double out) {
    for (int it = 0; it < 80 && std::abs(in - out) > settings.edge_tol; ++it) {
      const double mid = 0.5 * (in + out);
      (inside(probe(mid)) ? in : out) = mid;
    }
    return out;
  };
  // Rotation next to the gap, sampled away from its edge where estimates degrade.
  auto beside = [&](double edge_s, double far) -> std::optional<double> {
    double w = 0.5;
    for (int k = 0; k < 12; ++k, w *= 0.5) {
      const TongueProbe pr = probe(edge_s + w * (far - edge_s));
      if (!inside(pr)) return pr.rho;
    }
    return std::nullopt;
  };

  for (int it = 0; it < settings.max_bisections; ++it) {
    if (std::abs(b - a) < settings.edge_tol) break;
    const double mid = 0.5 * (a + b);
    const TongueProbe pm = probe(mid);
    if (!inside(pm)) {
      (pm.rho < r ? a : b) = mid;
      continue;
    }
    const double ea = edge(mid, a);
    const double eb = edge(mid, b);
    const std::optional<double> ra = beside(ea, a), rb = beside(eb, b);
    if (ra && *ra > r) {
      b = ea;  // gap of a larger rotation number
      continue;
    }
    if (rb && *rb < r) {
      a = eb;  // gap of a smaller rotation number
      continue;
    }
    return TongueInterval{target, std::min(ea, eb), std::max(ea, eb)};
  }
  return std::nullopt;
}

TongueChase find_param_by_tongues(const ParamSlice& slice, double theta, int depth,
                                  const TongueSettings& settings) {
  if (depth < 1) throw Error(Errc::DomainError, "tongue chasing needs depth >= 1");
  const std::vector<Convergent> conv = convergents(cf_expand(theta, depth));

  TongueChase out;
  double lo = slice.s0, hi = slice.s1;
  const TongueProbe plo = probe_tongue(slice, lo, settings);
  const TongueProbe phi = probe_tongue(slice, hi, settings);
  if (!plo.usable || !phi.usable) {
    Error err(Errc::TongueNotFound, "designated orbit does not surround the center at the "
                                    "bracket ends");
    err.level = 0;
    throw err;
  }
  const bool increasing = phi.rho > plo.rho;
  const double rlo = std::min(plo.rho, phi.rho), rhi = std::max(plo.rho, phi.rho);
  if (!(rlo < theta && theta < rhi)) {
    Error err(Errc::TongueNotFound, "bracket rotation range [" + std::to_string(rlo) + ", " +
                                        std::to_string(rhi) + "] misses theta");
    err.level = 0;
    throw err;
  }

  for (int n = 1; n <= static_cast<int>(conv.size()); ++n) {
    const Convergent c = conv[n - 1];
    if (c.q < 2) continue;
    const double r = double(c.p) / double(c.q);
    // Low-order tongues outside the starting bracket are already excluded by it.
    if (out.tongues.empty() && !(rlo <= r && r <= rhi)) continue;
    const auto t = locate_tongue(slice, c, lo, hi, settings, increasing ? 1 : -1);
    if (!t) {
      Error err(Errc::TongueNotFound, "no tongue of rotation " + std::to_string(c.p) + "/" +
                                          std::to_string(c.q) + " at level " +
                                          std::to_string(n));
      err.level = out.depth;
      throw err;
    }
    out.tongues.push_back(*t);
    out.depth = n;
    if ((r < theta) == increasing)
      lo = t->hi;
    else
      hi = t->lo;
  }
  out.lo = lo;
  out.hi = hi;
  out.value = 0.5 * (lo + hi);
  return out;
}

}  // namespace hring
