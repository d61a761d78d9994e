#include "hring/quadlike.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "hring/errors.hpp"

namespace hring {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kBoundaryTol = 1e-9;
constexpr double kInnerRadius = 0.5, kOuterRadius = 50.0, kArgMargin = 0.1;
constexpr double kBoxReMin = -20.0, kBoxReMax = 5.0, kBoxIm = 4.0 * kPi;

const double kE2 = std::exp(2.0);

bool on_positive_axis(cplx z) { return z.imag() == 0.0 && z.real() > 0.0; }

// Radius where sigma_k (or a branch of sigma_0) crosses the ray of angle theta, or -1.
double crossing(double arg_lambda, int k, Branch branch, double theta) {
  const double s = std::sin(theta);
  if (k >= 1) return ((2 * k + 2) * kPi - arg_lambda - 2.0 * theta) / s;
  if (k <= -1) return ((2 * k + 4) * kPi - arg_lambda - 2.0 * theta) / s;
  if (branch == Branch::Plus) {
    if (theta <= 0.0 || theta >= kPi - arg_lambda / 2.0) return -1.0;
    return (2.0 * kPi - arg_lambda - 2.0 * theta) / s;
  }
  if (branch == Branch::Minus) {
    if (theta <= kTwoPi - arg_lambda / 2.0 || theta >= kTwoPi) return -1.0;
    return (4.0 * kPi - arg_lambda - 2.0 * theta) / s;
  }
  return -1.0;
}

bool near(double rho, double boundary) {
  return boundary > 0.0 && std::abs(rho - boundary) <= kBoundaryTol * std::max(1.0, boundary);
}

// rho strictly between inner and outer crossings (inner <= 0 means the origin).
Membership between(double rho, double inner, double outer) {
  Membership m;
  if (near(rho, inner) || near(rho, outer)) {
    m.on_boundary = true;
    return m;
  }
  m.inside = rho > std::max(inner, 0.0) && rho < outer;
  return m;
}

// Runs body(i) for i in [0, n) over a pool of threads; results are written by index.
template <typename Body>
void parallel_for(int n, unsigned threads, Body&& body) {
  unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  t = std::min<unsigned>(t, static_cast<unsigned>(std::max(1, n)));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
}

enum class Arc { Outer, Descending, Inner, Ascending };

struct BoundarySample {
  cplx lambda;
  Arc arc;
};

std::vector<BoundarySample> boundary_samples(int samples) {
  const int q = std::max(1, samples / 4);
  const double a0 = kArgMargin, a1 = kTwoPi - kArgMargin;
  std::vector<BoundarySample> out;
  out.reserve(static_cast<std::size_t>(4 * q));
  for (int i = 0; i < q; ++i)
    out.push_back({std::polar(kOuterRadius, a0 + (a1 - a0) * i / q), Arc::Outer});
  for (int i = 0; i < q; ++i)
    out.push_back({std::polar(kOuterRadius * std::pow(kInnerRadius / kOuterRadius, double(i) / q), a1),
                   Arc::Descending});
  for (int i = 0; i < q; ++i)
    out.push_back({std::polar(kInnerRadius, a1 - (a1 - a0) * i / q), Arc::Inner});
  for (int i = 0; i < q; ++i)
    out.push_back({std::polar(kInnerRadius * std::pow(kOuterRadius / kInnerRadius, double(i) / q), a0),
                   Arc::Ascending});
  return out;
}

std::vector<cplx> interior_samples(int n) {
  std::mt19937_64 rng(0x51e9e1);
  std::uniform_real_distribution<double> log_r(std::log(0.4), std::log(51.0));
  std::uniform_real_distribution<double> arg(0.0, kTwoPi);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    const double a = arg(rng);
    const double r = std::exp(log_r(rng));
    if (a <= 0.0 || r <= 0.4 || r >= 51.0) continue;
    out.push_back(std::polar(r, a));
  }
  return out;
}

}  // namespace

RegionGeometry::RegionGeometry(cplx lambda) : lambda_(lambda), abs_(std::abs(lambda)) {
  if (lambda == cplx{0.0, 0.0} || on_positive_axis(lambda))
    throw Error(Errc::DomainError, "lambda must be nonzero and off the positive real axis");
  arg_ = arg0(lambda);
}

cplx RegionGeometry::E(cplx z) const { return lambda_ * z * z * std::exp(z); }

double arg0(cplx z) {
  const double a = std::arg(z);
  return a < 0.0 ? a + kTwoPi : a;
}

cplx sigma_point(const RegionGeometry& g, int k, Branch branch, double theta) {
  const double A = g.arg_lambda();
  bool ok;
  if (k >= 1)
    ok = theta > 0.0 && theta < kPi;
  else if (k <= -1)
    ok = theta > kPi && theta < kTwoPi;
  else if (branch == Branch::Plus)
    ok = theta > 0.0 && theta < kPi - A / 2.0;
  else if (branch == Branch::Minus)
    ok = theta > kTwoPi - A / 2.0 && theta < kTwoPi;
  else
    ok = false;
  if (!ok) throw Error(Errc::DomainError, "angle outside the branch domain of sigma_k");
  return std::polar(crossing(A, k, branch, theta), theta);
}

double sigma_residual(const RegionGeometry& g, int k, cplx z) {
  return std::abs(z.imag() - ((2 * k + 2) * kPi - g.arg_lambda() - arg0(z * z)));
}

Membership region_contains(const RegionGeometry& g, Region region, cplx z, int k) {
  Membership m;
  if (z == cplx{0.0, 0.0}) {
    m.on_boundary = true;
    return m;
  }
  const double A = g.arg_lambda();
  const double theta = arg0(z);
  const double rho = std::abs(z);
  const bool upper = theta > 0.0 && theta < kPi;
  const bool lower = theta > kPi;

  switch (region) {
    case Region::Omega0:
      if (theta == kPi) {
        m.inside = true;
        return m;
      }
      if (upper) return between(rho, crossing(A, 0, Branch::Plus, theta), crossing(A, 1, Branch::None, theta));
      if (lower) return between(rho, crossing(A, 0, Branch::Minus, theta), crossing(A, -1, Branch::None, theta));
      return m;  // positive real axis
    case Region::OmegaTilde0: {
      if (theta == 0.0) {
        m.inside = true;
        return m;
      }
      const double edge = upper ? crossing(A, 0, Branch::Plus, theta)
                        : lower ? crossing(A, 0, Branch::Minus, theta)
                                : -1.0;
      if (edge <= 0.0) return m;
      return between(rho, 0.0, edge);
    }
    case Region::OmegaK:
      if (k >= 1 && upper)
        return between(rho, crossing(A, k, Branch::None, theta), crossing(A, k + 1, Branch::None, theta));
      if (k <= -1 && lower)
        return between(rho, crossing(A, k, Branch::None, theta), crossing(A, k - 1, Branch::None, theta));
      return m;
  }
  return m;
}

bool in_V(const RegionGeometry& g, cplx z) {
  const double r = std::abs(z);
  return r > 1.0 / (16.0 * g.abs_lambda()) && r < 30.0 && !on_positive_axis(z);
}

bool in_U(const RegionGeometry& g, cplx z) {
  return region_contains(g, Region::Omega0, z).inside && in_V(g, g.E(z));
}

CriticalValueMargins check_critical_value(const RegionGeometry& g) {
  CriticalValueMargins c;
  c.v = 4.0 * g.lambda() / kE2;
  c.abs_v = std::abs(c.v);
  c.upper_margin = 30.0 - c.abs_v;
  c.lower_margin = c.abs_v - 1.0 / (16.0 * g.abs_lambda());
  c.off_positive_axis = !on_positive_axis(c.v);
  return c;
}

int winding_number(std::span<const cplx> samples) {
  if (samples.size() < 2) return 0;
  const double scale = std::max(1.0, std::abs(samples.front()));
  if (std::abs(samples.front() - samples.back()) > 1e-9 * scale)
    throw Error(Errc::DomainError, "winding_number needs a closed path");
  for (const cplx& s : samples)
    if (std::abs(s) < 1e-9) throw Error(Errc::PathThroughZero, "path passes within 1e-9 of 0");
  double total = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double inc = std::arg(samples[i] / samples[i - 1]);
    if (std::abs(inc) > kPi / 2.0)
      throw Error(Errc::UnderSampled, "argument increment exceeds pi/2");
    total += inc;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

std::vector<cplx> boundary_D(int samples) {
  if (samples < 4) throw Error(Errc::DomainError, "boundary_D needs at least 4 samples");
  std::vector<cplx> out;
  for (const BoundarySample& b : boundary_samples(samples)) out.push_back(b.lambda);
  out.push_back(out.front());
  return out;
}

std::vector<cplx> solve_E_equals(const RegionGeometry& g, cplx w, int seeds_per_axis) {
  std::vector<cplx> roots;
  const int n = std::max(1, seeds_per_axis);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx z{kBoxReMin + (kBoxReMax - kBoxReMin) * (i + 0.5) / n,
             -kBoxIm + 2.0 * kBoxIm * (j + 0.5) / n};
      bool converged = false;
      for (int it = 0; it < 100; ++it) {
        // Newton on lambda z^2 e^z / w - 1
        const cplx ez = g.lambda() * std::exp(z) / w;
        const cplx F = ez * z * z - 1.0;
        const cplx dF = ez * z * (z + 2.0);
        if (dF == cplx{0.0, 0.0} || !std::isfinite(std::abs(F))) break;
        const cplx step = F / dF;
        z -= step;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z.real() < -200.0) break;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) {
          converged = std::abs(g.lambda() * z * z * std::exp(z) / w - 1.0) < 1e-10;
          break;
        }
      }
      if (!converged) continue;
      if (z.real() < kBoxReMin || z.real() > kBoxReMax || std::abs(z.imag()) > kBoxIm) continue;
      const bool dup = std::any_of(roots.begin(), roots.end(),
                                   [&](const cplx& r) { return std::abs(r - z) < 1e-8; });
      if (!dup) roots.push_back(z);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return roots;
}

QuadlikeReport verify_mandelbrot_like(const QuadlikeGrid& grid, double critical_factor) {
  QuadlikeReport rep;
  const std::vector<cplx> interior = interior_samples(grid.interior);
  const std::vector<BoundarySample> boundary = boundary_samples(grid.boundary);
  auto critical_value = [&](cplx lambda) { return critical_factor * lambda / kE2; };

  // (i) critical value inside V on interior and boundary samples
  rep.critical_value_min_margin = INFINITY;
  auto check_i = [&](cplx lambda) {
    const cplx v = critical_value(lambda);
    const double margin = std::min(30.0 - std::abs(v), std::abs(v) - 1.0 / (16.0 * std::abs(lambda)));
    const bool ok = margin > 0.0 && !on_positive_axis(v);
    ++rep.critical_value_checked;
    rep.critical_value_min_margin = std::min(rep.critical_value_min_margin, margin);
    if (!ok) rep.failures.push_back({"i", lambda, false, margin});
  };
  for (const cplx& l : interior) check_i(l);
  for (const BoundarySample& b : boundary) check_i(b.lambda);
  rep.pass_critical_value = rep.failures.empty();

  // (ii) critical value outside U on the boundary of D
  const std::size_t before_ii = rep.failures.size();
  rep.boundary_min_margin = INFINITY;
  bool have_g1 = false, have_g2 = false;
  for (const BoundarySample& b : boundary) {
    const cplx v = critical_value(b.lambda);
    const RegionGeometry g(b.lambda);
    double margin = 0.0;
    switch (b.arc) {
      case Arc::Inner:
        margin = 1.0 / (6.0 * std::abs(b.lambda)) - std::abs(v);
        if (!have_g1) rep.gamma1_abs_v = std::abs(v), have_g1 = true;
        break;
      case Arc::Outer:
        margin = std::abs(v) - 25.0;
        if (!have_g2) rep.gamma2_abs_v = std::abs(v), have_g2 = true;
        break;
      case Arc::Ascending:
      case Arc::Descending: {
        const Membership m = region_contains(g, Region::OmegaTilde0, v);
        const double theta = arg0(v);
        const Branch br = theta < kPi ? Branch::Plus : Branch::Minus;
        const double edge = crossing(g.arg_lambda(), 0, br, theta);
        margin = m.inside ? (edge - std::abs(v)) / edge : -1.0;
        break;
      }
    }
    ++rep.boundary_checked;
    rep.boundary_min_margin = std::min(rep.boundary_min_margin, margin);
    if (!(margin > 0.0)) rep.failures.push_back({"ii", b.lambda, false, margin});
  }
  rep.pass_boundary = rep.failures.size() == before_ii;

  // (iii) winding of v + 2 around 0 along the boundary, and after doubling the samples
  auto winding_for = [&](int samples) {
    std::vector<cplx> path;
    for (const cplx& l : boundary_D(samples)) path.push_back(critical_value(l) + 2.0);
    return winding_number(path);
  };
  try {
    rep.winding = winding_for(grid.boundary);
    rep.winding_refined = winding_for(2 * grid.boundary);
    rep.pass_winding = rep.winding == 1 && rep.winding_refined == 1;
  } catch (const Error&) {
    rep.pass_winding = false;
  }
  if (!rep.pass_winding) rep.failures.push_back({"iii", {}, false, double(rep.winding)});

  // (iv) U sampled on the z-box stays in 1/(6|lambda|) < |z| < 25
  std::vector<cplx> lambdas;
  {
    const int want = std::max(0, grid.containment_lambdas);
    const int nb = std::min<int>(want / 2, static_cast<int>(boundary.size()));
    const int ni = std::min<int>(want - nb, static_cast<int>(interior.size()));
    for (int i = 0; i < ni; ++i) lambdas.push_back(interior[static_cast<std::size_t>(i) * interior.size() / ni]);
    for (int i = 0; i < nb; ++i)
      lambdas.push_back(boundary[static_cast<std::size_t>(i) * boundary.size() / nb].lambda);
  }
  struct Containment {
    int points = 0;
    double margin = INFINITY;
  };
  std::vector<Containment> per(lambdas.size());
  const int res = std::max(1, grid.z_res);
  parallel_for(static_cast<int>(lambdas.size()), grid.threads, [&](int idx) {
    const RegionGeometry g(lambdas[idx]);
    const double inner = 1.0 / (6.0 * g.abs_lambda());
    Containment c;
    for (int i = 0; i < res; ++i) {
      const double x = kBoxReMin + (kBoxReMax - kBoxReMin) * (i + 0.5) / res;
      for (int j = 0; j < res; ++j) {
        const cplx z{x, -kBoxIm + 2.0 * kBoxIm * (j + 0.5) / res};
        if (!in_V(g, g.E(z))) continue;
        if (!region_contains(g, Region::Omega0, z).inside) continue;
        ++c.points;
        const double r = std::abs(z);
        c.margin = std::min(c.margin, std::min(r - inner, 25.0 - r));
      }
    }
    per[idx] = c;
  });
  rep.containment_min_margin = INFINITY;
  int containment_failures = 0;
  for (std::size_t i = 0; i < per.size(); ++i) {
    rep.containment_points += per[i].points;
    rep.containment_min_margin = std::min(rep.containment_min_margin, per[i].margin);
    if (!(per[i].margin > 0.0)) {
      ++containment_failures;
      rep.failures.push_back({"iv", lambdas[i], false, per[i].margin});
    }
  }
  rep.pass_containment = containment_failures == 0 && rep.containment_points > 0;

  // degree 2 of E on Omega0: two preimages in Omega0 of random points of V
  std::mt19937_64 rng(0xde9);
  for (int li = 0; li < grid.degree_lambdas; ++li) {
    const cplx lambda = interior[static_cast<std::size_t>(li) * interior.size() /
                                 std::max(1, grid.degree_lambdas)];
    const RegionGeometry g(lambda);
    std::uniform_real_distribution<double> log_r(std::log(1.0 / (16.0 * g.abs_lambda())), std::log(30.0));
    std::uniform_real_distribution<double> arg(0.0, kTwoPi);
    for (int k = 0; k < grid.degree_w; ++k) {
      cplx w;
      do w = std::polar(std::exp(log_r(rng)), arg(rng));
      while (!in_V(g, w));
      int count = 0;
      for (const cplx& z : solve_E_equals(g, w, grid.newton_seeds))
        if (region_contains(g, Region::Omega0, z).inside) ++count;
      ++rep.degree_trials;
      if (count != 2) {
        ++rep.degree_failures;
        rep.failures.push_back({"degree", lambda, false, double(count)});
      }
    }
  }
  rep.pass_degree = rep.degree_failures == 0;
  return rep;
}

Fate param_fate_E(cplx lambda, const Budget& budget) {
  return classify_point(Map{EntireZ2Exp{lambda}}, cplx{-2.0, 0.0}, budget);
}

}  // namespace hring
