// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero when a gating
// criterion fails; criterion 9 is report-only.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "properties.hpp"

using namespace hring;
using namespace hring::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double circular(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

// ---------------------------------------------------------------------------------------

Outcome fig1_ring() {
  const Map f = fig1_map();
  const double cycle = std::abs(iterate_n(f, cplx{0.0, 0.0}, 2).value());
  Budget budget;
  budget.ring_period = 2;
  // Rays from 0 along the axes, in order; the first that finds a ring seed is used.
  SpherePoint seed;
  bool found = false;
  std::string rays;
  for (const cplx dir : {cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{-1.0, 0.0}, cplx{0.0, -1.0}}) {
    try {
      seed = find_ring_seed(f, RayScan{{0.0, 0.0}, dir, 1e-3, 1.0, 400}, budget);
      found = true;
      break;
    } catch (const Error&) {
      rays += fmt("no seed along %+g%+gi; ", dir.real(), dir.imag());
    }
  }
  if (!found) return {false, fmt("|f^2(0)|=%.2e; ", cycle) + rays};
  try {
    const RotationReport r = rotation_number(f, 2, seed, 0.0, 2000);
    const bool ok = cycle < 1e-10 && circular(r.winding.value, kGolden) < 1e-3 &&
                    r.discrepancy < 1e-2;
    return {ok, rays + fmt("|f^2(0)|=%.2e seed=%.6f%+.6fi rotation=%.7f (target %.7f, tol 1e-3) "
                    "closest_return=%.7f discrepancy=%.2e",
                    cycle, seed.value().real(), seed.value().imag(), r.winding.value, kGolden,
                    r.closest_return.value, r.discrepancy)};
  } catch (const Error& e) {
    return {false, rays + fmt("|f^2(0)|=%.2e seed=%.6f%+.6fi; rotation_number: %s", cycle,
                       seed.value().real(), seed.value().imag(), e.what())};
  }
}

Outcome fig3_root() {
  const std::vector<cplx> us = u_candidates_period3(kFig1A, kFig3B);
  double best = INFINITY;
  cplx best_u;
  for (const cplx& u : us)
    if (std::abs(u - kFig3U) < best) best = std::abs(u - kFig3U), best_u = u;
  const double cycle = std::abs(iterate_n(Map{CubicRat{kFig1A, kFig3B, best_u}}, cplx{0.0, 0.0}, 3).value());
  return {best < 1e-6 && cycle < 1e-8,
          fmt("%zu roots; nearest %.8f%+.8fi at distance %.2e (tol 1e-6); |f^3(0)|=%.2e (tol 1e-8)",
              us.size(), best_u.real(), best_u.imag(), best, cycle)};
}

Outcome fig4_ring() {
  const Map m = fig4_map();
  const double residual = verify_cycle(m, cplx{0.0, 0.0}, 2).residual;
  Budget budget;
  budget.ring_period = 2;
  std::string rot;
  bool rot_ok = false;
  try {
    const SpherePoint seed = find_ring_seed(m, RayScan{{0.0, 0.0}, {1.0, 0.0}, 1e-3, 1.0, 400}, budget);
    const RotationReport r = rotation_number(m, 2, seed, 0.0, 2000);
    rot_ok = circular(r.winding.value, kGolden) < 1e-3;
    rot = fmt("rotation=%.7f closest_return=%.7f", r.winding.value, r.closest_return.value);
  } catch (const Error& e) {
    rot = std::string("rotation: ") + e.what();
  }
  const FateImage img = render_dynamical(m, Window{-2.9, 1.1, -1.2, 1.2}, 400, 240, budget);
  const ClassCounts c = count_classes(img);
  const bool classes = c.ring > 0 && c.preimage > 0 && c.attracted > 0 && c.undecided > 0;
  return {residual < 1e-10 && rot_ok && classes,
          fmt("cycle residual=%.2e; %s; green=%ld dark-yellow=%ld white=%ld black=%ld grey=%ld",
              residual, rot.c_str(), c.ring, c.preimage, c.attracted, c.undecided, c.escape)};
}

Outcome fig2_quartic() {
  const double s2 = symmetry_residual(Map{QuarticBlaschke{kFig2R, kFig2T, 2}}, 200);
  const double s4 = symmetry_residual(Map{QuarticBlaschke{kFig2R, kFig2T, 4}}, 200);
  const QuarticCycleReport rep = quartic_cycle_report(QuarticBlaschke{kFig2R, kFig2T, 2});
  const bool zero = rep.image_of_zero_factor.is_finite() && std::abs(rep.image_of_zero_factor.value()) < 1e-12;
  const bool pole3 = std::abs(rep.pole_order_at_r - 3.0) < 0.01;
  std::string chase;
  bool chase_ok = false;
  try {
    const TongueChase c = find_param_by_tongues(quartic_t_slice(kFig2R, 2, 0.25, 0.40), kGolden, 7);
    chase_ok = c.depth >= 6 && std::abs(c.value - kFig2T) < 5e-4;
    chase = fmt("tongue chase t=%.8f depth %d (target %.8f, tol 5e-4)", c.value, c.depth, kFig2T);
  } catch (const Error& e) {
    chase = fmt("tongue chase: %s (level %d)", e.what(), e.level);
  }
  return {s2 < 1e-10 && s4 < 1e-10 && zero && pole3 && chase_ok,
          fmt("symmetry sup %.2e / %.2e; h(1/r)=0 %s; pole order at r %.4f; %s", s2, s4,
              zero ? "yes" : "no", rep.pole_order_at_r, chase.c_str())};
}

Outcome quadlike() {
  const QuadlikeReport r = verify_mandelbrot_like(QuadlikeGrid{});
  const double e2 = std::exp(2.0);
  const double g1 = std::abs(r.gamma1_abs_v - 2.0 / e2), g2 = std::abs(r.gamma2_abs_v - 200.0 / e2);
  const bool margins = g1 < 1e-12 && g2 < 1e-10 && r.gamma1_abs_v < 1.0 / 3.0 && r.gamma2_abs_v > 25.0;
  return {r.all_pass() && r.winding == 1 && r.winding_refined == 1 && margins,
          fmt("i=%s ii=%s iii=%s iv=%s degree=%s; winding %d/%d; |v| on gamma1 %.6f (2/e^2 err "
              "%.1e), gamma2 %.4f (200/e^2 err %.1e); %d z samples, %d/%d degree failures",
              r.pass_critical_value ? "PASS" : "FAIL", r.pass_boundary ? "PASS" : "FAIL",
              r.pass_winding ? "PASS" : "FAIL", r.pass_containment ? "PASS" : "FAIL",
              r.pass_degree ? "PASS" : "FAIL", r.winding, r.winding_refined, r.gamma1_abs_v, g1,
              r.gamma2_abs_v, g2, r.containment_points, r.degree_failures, r.degree_trials)};
}

Outcome siegel() {
  const SiegelFixed s = siegel_lambda_fixed(kGolden);
  const Map e{EntireZ2Exp{s.lambda}};
  const double residual = std::abs(e(s.z_fixed).value() - s.z_fixed);
  const cplx mult = e.derivative(s.z_fixed);
  const double modulus = std::abs(std::abs(mult) - 1.0);
  const double arg_err = std::abs(std::arg(mult / unit_phase(kGolden)));
  Budget budget;
  budget.max_iter = 10000;
  const Fate fate = param_fate_E(s.lambda, budget);
  return {residual < 1e-13 && modulus < 1e-12 && arg_err < 1e-12 &&
              fate.cls != FateClass::EscapeToInfinity,
          fmt("lambda=%.10f%+.10fi residual %.2e, ||m|-1| %.2e, arg error %.2e, critical fate %s",
              s.lambda.real(), s.lambda.imag(), residual, modulus, arg_err,
              std::string(to_string(fate.cls)).c_str())};
}

Outcome arithmetic() {
  const std::vector<Convergent> conv = convergents(cf_expand(kGolden, 30));
  std::int64_t f0 = 1, f1 = 2;  // q_1, q_2
  bool fib = conv.size() == 30;
  for (std::size_t k = 0; k < conv.size(); ++k) {
    const std::int64_t want = k == 0 ? f0 : k == 1 ? f1 : 0;
    std::int64_t q = want;
    if (k >= 2) {
      q = f0 + f1;
      f0 = f1;
      f1 = q;
    }
    fib = fib && conv[k].q == q;
  }
  // Exact Fibonacci denominators 1, 2, 3, 5 plugged into the partial sum.
  const long double oracle = std::log(2.0L) / 1 + std::log(3.0L) / 2 + std::log(5.0L) / 3;
  const double got = brjuno_partial(kGolden, 3);
  const double err = std::abs(got - static_cast<double>(oracle));
  return {fib && err < 1e-5,
          fmt("Fibonacci denominators through n=30: %s; brjuno_partial(golden,3)=%.7f oracle=%.7f "
              "(err %.1e); printed 1.77886 differs from the oracle by %.1e",
              fib ? "exact" : "MISMATCH", got, static_cast<double>(oracle), err,
              std::abs(1.77886 - static_cast<double>(oracle)))};
}

Outcome properties() {
  const Check d = derivative_check(1000);
  const Check m = budget_monotonicity(200);
  const Check t2 = tau_fate_agreement(100, 2), t4 = tau_fate_agreement(100, 4);
  const Check g = degree_two(100);
  return {d.pass && m.pass && t2.pass && t4.pass && g.pass,
          "derivative: " + d.detail + "; monotonicity: " + m.detail + "; tau fates: " + t2.detail +
              ", " + t4.detail + "; degree 2: " + g.detail};
}

Outcome interlaced() {
  const Map f{CubicRat{kSec51A, kSec51B, u_for_period2(kSec51A, kSec51B)}};
  const double cycle = std::abs(iterate_n(f, cplx{0.0, 0.0}, 2).value());
  Budget budget;
  budget.ring_period = 2;
  std::string out = fmt("|f^2(0)|=%.2e", cycle);
  for (const cplx& base : {cplx{0.0, 0.0}, kSec51B}) {
    for (const cplx dir : {cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.0, 1.0}, cplx{0.0, -1.0}}) {
      try {
        const SpherePoint s = find_ring_seed(f, RayScan{base, dir, 1e-3, std::abs(kSec51B), 400}, budget);
        const RotationReport r = rotation_number(f, 2, s, base, 2000);
        return {cycle < 1e-6 && circular(r.winding.value, kGolden) < 1e-2,
                out + fmt("; ring seed %.6f%+.6fi rotation %.6f", s.value().real(), s.value().imag(),
                          r.winding.value)};
      } catch (const Error&) {
      }
    }
  }
  // Diagnosis: fate census of the critical orbits and of a grid around the rays.
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 41; ++i)
    for (int j = 0; j < 41; ++j) {
      const cplx z{-60.0 + 3.0 * i, -60.0 + 3.0 * j};
      ++counts[static_cast<int>(classify_point(f, z, budget).cls)];
    }
  std::string crit;
  for (const CriticalPoint& c : f.critical_points()) {
    if (c.point.is_infinity()) continue;
    crit += fmt(" %.4f%+.4fi:%s", c.point.value().real(), c.point.value().imag(),
                std::string(to_string(classify_point(f, c.point, budget).cls)).c_str());
  }
  return {false, out + fmt("; no ring seed on 8 rays from 0 and b. Diagnosis: 41x41 grid over "
                           "[-60,60]^2 has escape=%d attracted=%d rotation=%d undecided=%d; "
                           "critical fates:",
                           counts[0], counts[1], counts[2], counts[3]) + crit};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool gating;
    double limit_s;  // runtime limit, part of the criterion
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "p=2 cubic ring, golden rotation", true, 30.0, fig1_ring},
      {2, "p=3 cubic root", true, 1.0, fig3_root},
      {3, "meromorphic 2-cycle ring and render", true, 120.0, fig4_ring},
      {4, "nested quartic symmetry, cycles and tongue chase", true, 600.0, fig2_quartic},
      {5, "Mandelbrot-like family checks", true, 300.0, quadlike},
      {6, "Siegel fixed parameter", true, 1e9, siegel},
      {7, "continued fractions and Brjuno sum", true, 1e9, arithmetic},
      {8, "property suite", true, 1e9, properties},
      {9, "interlaced parameters (report only)", false, 1e9, interlaced},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > c.limit_s) {
      o.pass = false;
      o.detail += fmt("; runtime %.1fs exceeds %.0fs", secs, c.limit_s);
    }
    const char* tag = o.pass ? "PASS" : c.gating ? "FAIL" : "REPORT";
    std::printf("[%s] criterion %d (%s) %.1fs: %s\n", tag, c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (c.gating && !o.pass) ++failed;
  }
  std::printf("%d gating criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
