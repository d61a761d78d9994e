#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hring/hring.hpp"

namespace hring::testing {

inline const cplx kFig1A{4.0, 0.0};
inline const cplx kFig1B{11.03081483, -5.91931036};
inline const cplx kFig3B{12.21173310, -1.67440929};
inline const cplx kFig3U{-0.01828231, 0.31119224};
inline const cplx kFig4A{0.01, 0.0};
inline const cplx kFig4B{-1.23796766, -0.16535887};
inline constexpr double kFig2R = 1.0 / 40.0;
inline constexpr double kFig2T = 0.34172383;
inline const cplx kSec51A{80.0, 0.0};
inline const cplx kSec51B{46.47151539, 3.87122727};

inline Map fig1_map() { return Map{CubicRat{kFig1A, kFig1B, u_for_period2(kFig1A, kFig1B)}}; }
inline Map fig4_map() { return Map{MeroPoleExp{kFig4A, kFig4B}}; }

struct Check {
  bool pass = false;
  std::string detail;
};

// One sample map per family, with its excluded points (poles, essential singularities).
struct FamilySample {
  Map map;
  std::vector<cplx> excluded;
};

inline std::vector<FamilySample> family_samples() {
  std::vector<FamilySample> out;
  auto add = [&](MapSpec spec) {
    Map m{spec};
    std::vector<cplx> ex;
    for (const Pole& p : m.poles()) ex.push_back(p.point);
    if (std::holds_alternative<Arnold>(spec)) ex.push_back(0.0);
    out.push_back({m, ex});
  };
  add(CubicRat{kFig1A, kFig1B, u_for_period2(kFig1A, kFig1B)});
  add(NormalizedCubic{{2.5, 0.0}, {1.0, 1.0}, {0.3, 0.2}});
  add(MeroTwoZeroExp{{2.0, 0.0}, {-1.0, 0.5}, {0.2, 0.0}});
  add(QuarticBlaschke{kFig2R, kFig2T, 2});
  add(QuarticBlaschke{kFig2R, kFig2T, 4});
  add(MeroPoleExp{kFig4A, kFig4B});
  add(EntireZ2Exp{{-1.0, 0.0}});
  add(EntireSiegel2{{1.4175818874721364, 3.3449196550936984}});
  add(CubicBlaschke{{4.0, 0.0}, 0.3});
  add(Arnold{0.5, 0.2});
  add(Quadratic{{-0.75, 0.1}});
  add(RigidRotation{kGolden});
  return out;
}

// Analytic derivative against a central difference with step 1e-6 (1 + |z|).
inline Check derivative_check(int points, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 3.0), angle(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  std::string worst_family;
  int failures = 0, checked = 0;
  for (const FamilySample& fs : family_samples()) {
    int n = 0;
    while (n < points) {
      const cplx z = std::polar(radius(rng), angle(rng));
      if (std::any_of(fs.excluded.begin(), fs.excluded.end(),
                      [&](cplx p) { return std::abs(z - p) < 0.2; }))
        continue;
      ++n;
      const double h = 1e-6 * (1.0 + std::abs(z));
      const SpherePoint fp = fs.map(z + h), fm = fs.map(z - h);
      const cplx fd = (fp.value() - fm.value()) / (2.0 * h);
      const cplx d = fs.map.derivative(z);
      const double ratio = std::abs(d - fd) / (1e-5 * (1.0 + std::abs(d)));
      ++checked;
      if (ratio >= 1.0) ++failures;
      if (ratio > worst) {
        worst = ratio;
        worst_family = std::string(fs.map.name());
      }
    }
  }
  return {failures == 0, std::to_string(checked) + " points, " + std::to_string(failures) +
                             " failures, worst error/tolerance " + std::to_string(worst) + " (" +
                             worst_family + ")"};
}

// Decided fates at a small budget must survive a larger one.
inline Check budget_monotonicity(int points, std::uint64_t seed = 11) {
  struct Case {
    Map map;
    Window window;
    int period;
  };
  const std::vector<Case> cases{{fig4_map(), {-2.9, 1.1, -1.2, 1.2}, 2},
                                {fig1_map(), {-2.0, 14.0, -8.0, 4.0}, 2},
                                {Map{QuarticBlaschke{kFig2R, 0.2888, 2}}, {-3.0, 3.0, -3.0, 3.0}, 2}};
  std::mt19937_64 rng(seed);
  int decided = 0, flips = 0;
  for (const Case& c : cases) {
    std::uniform_real_distribution<double> re(c.window.re_min, c.window.re_max),
        im(c.window.im_min, c.window.im_max);
    Budget small, large;
    small.ring_period = large.ring_period = c.period;
    small.max_iter = 250;
    large.max_iter = 2000;
    for (int i = 0; i < points; ++i) {
      const cplx z{re(rng), im(rng)};
      const Fate a = classify_point(c.map, z, small);
      if (!a.decided()) continue;
      ++decided;
      const Fate b = classify_point(c.map, z, large);
      if (b.cls != a.cls || b.period != a.period) ++flips;
    }
  }
  return {flips == 0 && decided > 0,
          std::to_string(decided) + " decided points, " + std::to_string(flips) + " changed class"};
}

inline SpherePoint random_sphere_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double x, y, z, n;
  do {
    x = g(rng), y = g(rng), z = g(rng);
    n = std::sqrt(x * x + y * y + z * z);
  } while (n < 1e-9 || z / n > 1.0 - 1e-12);
  x /= n, y /= n, z /= n;
  return cplx{x / (1.0 - z), y / (1.0 - z)};
}

// Fate of z and of tau(z) under the tau-symmetric quartic agree.
inline Check tau_fate_agreement(int points, int b_exponent, std::uint64_t seed = 13) {
  const Map h{QuarticBlaschke{kFig2R, 0.2888, b_exponent}};
  Budget budget;
  budget.ring_period = 2;
  std::mt19937_64 rng(seed);
  int mismatches = 0;
  for (int i = 0; i < points; ++i) {
    const SpherePoint z = random_sphere_point(rng);
    const Fate a = classify_point(h, z, budget);
    const Fate b = classify_point(h, tau(z), budget);
    if (a.cls != b.cls || a.period != b.period) ++mismatches;
  }
  return {mismatches == 0, std::to_string(points) + " points, " + std::to_string(mismatches) +
                               " mismatches (b_exponent " + std::to_string(b_exponent) + ")"};
}

// Random w in V have exactly two preimages in Omega0 under lambda z^2 e^z.
inline Check degree_two(int trials, std::uint64_t seed = 17) {
  const std::vector<cplx> lambdas{{-1.0, 0.0}, {0.0, 1.0}, std::polar(10.0, 2.0),
                                  std::polar(0.6, 5.0), std::polar(40.0, 3.5)};
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int k = 0; k < trials; ++k) {
    const RegionGeometry g(lambdas[static_cast<std::size_t>(k) % lambdas.size()]);
    std::uniform_real_distribution<double> log_r(std::log(1.0 / (16.0 * g.abs_lambda())),
                                                 std::log(30.0));
    std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
    cplx w;
    do w = std::polar(std::exp(log_r(rng)), arg(rng));
    while (!in_V(g, w));
    int count = 0;
    for (const cplx& z : solve_E_equals(g, w, 40))
      if (region_contains(g, Region::Omega0, z).inside) ++count;
    if (count != 2) ++failures;
  }
  return {failures == 0,
          std::to_string(trials) + " random w, " + std::to_string(failures) + " without two preimages"};
}

}  // namespace hring::testing
