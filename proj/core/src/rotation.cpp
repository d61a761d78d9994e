#include "hring/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hring/errors.hpp"

namespace hring {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

struct Lift {
  std::vector<double> increments;  // continuous branch, mean in [0, 2 pi)
  double mean = 0.0;               // radians per step
};

// Increments of arg(w - c) made continuous along the angular order of the orbit.
Lift continuous_lift(std::span<const cplx> w, cplx c) {
  const std::size_t n = w.size() - 1;
  std::vector<double> ang(w.size());
  for (std::size_t m = 0; m < w.size(); ++m) ang[m] = wrap_positive(std::arg(w[m] - c));
  Lift lift;
  lift.increments.resize(n);
  for (std::size_t m = 0; m < n; ++m) lift.increments[m] = wrap_positive(ang[m + 1] - ang[m]);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ang[a] < ang[b] || (ang[a] == ang[b] && a < b);
  });
  for (std::size_t i = 1; i < n; ++i) {
    const double prev = lift.increments[order[i - 1]];
    double& cur = lift.increments[order[i]];
    cur -= kTwoPi * std::round((cur - prev) / kTwoPi);
  }
  double sum = 0.0;
  for (double d : lift.increments) sum += d;
  double mean = sum / double(n);
  const double shift = kTwoPi * std::floor(mean / kTwoPi);
  for (double& d : lift.increments) d -= shift;
  lift.mean = mean - shift;
  return lift;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) return -1;
  return ((x % m) + m) % m;
}

double circular_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace

std::string_view to_string(RotationMethod m) {
  return m == RotationMethod::WindingMean ? "winding_mean" : "closest_return";
}

RotationEstimate winding_mean(std::span<const cplx> orbit, cplx center) {
  if (orbit.size() < 2) throw Error(Errc::DomainError, "winding_mean needs two points");
  const Lift lift = continuous_lift(orbit, center);
  const std::size_t n = lift.increments.size();
  double acc = 0.0, lo = 0.0, hi = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    acc += lift.increments[m] - lift.mean;
    lo = std::min(lo, acc);
    hi = std::max(hi, acc);
  }
  RotationEstimate est;
  est.method = RotationMethod::WindingMean;
  est.iterations = static_cast<int>(n);
  est.value = lift.mean / kTwoPi;
  if (est.value >= 1.0) est.value -= 1.0;
  est.error_bound = (hi - lo) / (kTwoPi * double(n));
  return est;
}

RotationEstimate closest_return(std::span<const cplx> orbit, cplx center,
                                std::vector<int>* record_times) {
  RotationEstimate est;
  est.method = RotationMethod::ClosestReturn;
  est.iterations = static_cast<int>(orbit.size()) - 1;
  est.error_bound = 1.0;
  if (orbit.size() < 3) return est;

  const cplx w0 = orbit[0];
  const cplx tangent = cplx{0.0, 1.0} * (w0 - center);
  std::vector<int> times;
  std::vector<int> sides;
  double best = INFINITY;
  for (std::size_t m = 1; m < orbit.size(); ++m) {
    const double d = std::abs(orbit[m] - w0);
    if (d < best) {
      best = d;
      times.push_back(static_cast<int>(m));
      const double proj = std::real((orbit[m] - w0) * std::conj(tangent));
      sides.push_back(proj >= 0.0 ? 1 : -1);
    }
  }
  if (record_times) *record_times = times;

  // Last record Q and the latest earlier record on the opposite side.
  for (std::size_t i = times.size(); i-- > 1;) {
    const std::int64_t q = times[i];
    if (q < 2) break;
    for (std::size_t j = i; j-- > 0;) {
      if (sides[j] == sides[i]) continue;
      const std::int64_t qp = times[j];
      const std::int64_t inv = mod_inverse(qp, q);
      if (inv < 0) break;
      const std::int64_t p = ((-sides[i] * inv) % q + q) % q;
      est.value = double(p) / double(q);
      est.error_bound = 1.0 / (double(q) * double(qp));
      return est;
    }
  }
  return est;
}

double rank_shift_rotation(std::span<const cplx> orbit, cplx center) {
  const std::size_t n = orbit.size();
  if (n < 2) return 0.0;
  std::vector<double> ang(n);
  for (std::size_t m = 0; m < n; ++m) ang[m] = wrap_positive(std::arg(orbit[m] - center));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ang[a] < ang[b] || (ang[a] == ang[b] && a < b);
  });
  std::vector<std::int64_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::int64_t>(i);
  const auto N = static_cast<std::int64_t>(n);
  double sum = 0.0;
  for (std::size_t m = 0; m + 1 < n; ++m) sum += double(((rank[m + 1] - rank[m]) % N + N) % N);
  return sum / double(n - 1) / double(N);
}

double max_angular_gap(std::span<const cplx> orbit, cplx center) {
  if (orbit.empty()) return kTwoPi;
  std::vector<double> ang;
  ang.reserve(orbit.size());
  for (const cplx& w : orbit) ang.push_back(wrap_positive(std::arg(w - center)));
  std::sort(ang.begin(), ang.end());
  double gap = ang.front() + kTwoPi - ang.back();
  for (std::size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
  return gap;
}

RotationReport rotation_number(const Map& map, int p, const SpherePoint& seed, cplx center,
                               int n, double recur_tol) {
  if (p < 1 || n < 2) throw Error(Errc::DomainError, "rotation_number needs p >= 1, N >= 2");
  if (seed.is_infinity()) throw Error(Errc::NotRecurrent, "seed at infinity");
  std::vector<cplx> w;
  w.reserve(static_cast<std::size_t>(n) + 1);
  w.push_back(seed.value());
  SpherePoint cur = seed;
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < p; ++j) {
      if (escaped(map, cur, Budget{}.escape_radius) || cur.is_infinity())
        throw Error(Errc::NotRecurrent, "orbit left every bounded region");
      cur = map(cur);
    }
    if (cur.is_infinity()) throw Error(Errc::NotRecurrent, "orbit reached infinity");
    w.push_back(cur.value());
  }

  // Same test as classify_point: a close return at m repeated at 2m.
  bool recurrent = false;
  double closest = INFINITY;
  for (std::size_t m = 1; 2 * m < w.size() && !recurrent; ++m) {
    const double d = chordal(w[m], w[0]);
    closest = std::min(closest, d);
    recurrent = d < recur_tol && chordal(w[2 * m], w[0]) < 2.5 * recur_tol;
  }
  if (!recurrent)
    throw Error(Errc::NotRecurrent, "no repeated close return to the seed (closest " +
                                        std::to_string(closest) + ")");

  RotationReport rep;
  rep.max_angular_gap = max_angular_gap(w, center);
  if (rep.max_angular_gap >= std::numbers::pi)
    throw Error(Errc::CenterOutsideRing, "orbit does not surround the center");

  // Backward winding of more than a full turn means the lift is inconsistent.
  const Lift lift = continuous_lift(w, center);
  double acc = 0.0, peak = 0.0;
  for (double d : lift.increments) {
    acc += d;
    peak = std::max(peak, acc);
    if (peak - acc > kTwoPi)
      throw Error(Errc::CenterOutsideRing, "cumulative winding runs backwards a full turn");
  }

  rep.winding = winding_mean(w, center);
  rep.closest_return = closest_return(w, center, &rep.return_times);
  rep.discrepancy = circular_distance(rep.winding.value, rep.closest_return.value);
  if (rep.discrepancy > 1e-2)
    throw Error(Errc::CenterOutsideRing,
                "winding " + std::to_string(rep.winding.value) + " and closest-return " +
                    std::to_string(rep.closest_return.value) + " estimates disagree");
  return rep;
}

RotationEstimate circle_rotation_number(const Map& map, int n) {
  if (!std::holds_alternative<CubicBlaschke>(map.spec()) &&
      !std::holds_alternative<Arnold>(map.spec()))
    throw Error(Errc::DomainError, "circle rotation needs CubicBlaschke or Arnold");
  if (n < 2) throw Error(Errc::DomainError, "circle rotation needs N >= 2");
  for (int k = 0; k < 64; ++k) {
    const SpherePoint v = map(std::polar(1.0, kTwoPi * k / 64.0));
    if (v.is_infinity() || std::abs(std::abs(v.value()) - 1.0) > 1e-9)
      throw Error(Errc::CircleNotInvariant, "|f| deviates from 1 on the unit circle");
  }
  std::vector<cplx> w;
  w.reserve(static_cast<std::size_t>(n) + 1);
  cplx z{1.0, 0.0};
  w.push_back(z);
  for (int m = 0; m < n; ++m) {
    z = map(z).value();
    z /= std::abs(z);  // stay on the invariant circle
    w.push_back(z);
  }
  return winding_mean(w, cplx{0.0, 0.0});
}

}  // namespace hring
