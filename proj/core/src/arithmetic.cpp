#include "hring/arithmetic.hpp"

#include <cmath>
#include <limits>

#include "hring/errors.hpp"

namespace hring {
namespace {
__extension__ typedef __int128 i128;
}  // namespace

ContinuedFraction cf_expand(double x, int n) {
  if (!(x > 0.0 && x < 1.0)) throw Error(Errc::DomainError, "cf_expand needs x in (0,1)");
  if (n < 1) throw Error(Errc::DomainError, "cf_expand needs n >= 1");
  ContinuedFraction cf{x, {}, false};
  constexpr double ulp = std::numeric_limits<double>::epsilon();
  double frac = x;
  double err = ulp * x;
  for (int k = 0; k < n; ++k) {
    if (frac < 1e-12)
      throw Error(Errc::PrecisionExhausted, "fractional part below 1e-12 at quotient " +
                                                std::to_string(k + 1));
    const double y = 1.0 / frac;
    const double err_y = err / (frac * frac) + ulp * y;
    const double a = std::floor(y);
    const double rest = y - a;
    // The quotient is only trusted if y is not within its error of an integer.
    if (rest != 0.0 && (rest < err_y || 1.0 - rest < err_y))
      throw Error(Errc::PrecisionExhausted,
                  "quotient " + std::to_string(k + 1) + " not resolved in double precision");
    if (a > 9.0e15) throw Error(Errc::PrecisionExhausted, "quotient overflow");
    cf.quotients.push_back(static_cast<std::int64_t>(a));
    if (rest == 0.0) {
      cf.terminated = true;
      break;
    }
    frac = rest;
    err = err_y;
  }
  return cf;
}

ContinuedFraction cf_expand(Rational x, int n) {
  if (x.den <= 0 || x.num <= 0 || x.num >= x.den)
    throw Error(Errc::DomainError, "cf_expand needs a rational in (0,1)");
  if (n < 1) throw Error(Errc::DomainError, "cf_expand needs n >= 1");
  ContinuedFraction cf{double(x.num) / double(x.den), {}, false};
  std::int64_t p = x.num, q = x.den;
  for (int k = 0; k < n; ++k) {
    cf.quotients.push_back(q / p);
    const std::int64_t r = q % p;
    if (r == 0) {
      cf.terminated = true;
      break;
    }
    q = p;
    p = r;
  }
  return cf;
}

std::vector<Convergent> convergents(const std::vector<std::int64_t>& quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  // p_{-1}/q_{-1} = 1/0, p_0/q_0 = 0/1 for [0; a_1, ...]
  i128 pm2 = 1, qm2 = 0, pm1 = 0, qm1 = 1;
  constexpr i128 limit = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t a : quotients) {
    const i128 p = a * pm1 + pm2;
    const i128 q = a * qm1 + qm2;
    if (p > limit || q > limit)
      throw Error(Errc::PrecisionExhausted, "convergent exceeds 64-bit range");
    out.push_back({static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)});
    pm2 = pm1;
    qm2 = qm1;
    pm1 = p;
    qm1 = q;
  }
  return out;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  return convergents(cf.quotients);
}

double cf_value(const std::vector<std::int64_t>& quotients) {
  double v = 0.0;
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) v = 1.0 / (double(*it) + v);
  return v;
}

double brjuno_partial(const std::vector<Convergent>& conv, int n) {
  double sum = 0.0;
  for (int k = 0; k < n && k + 1 < static_cast<int>(conv.size()); ++k)
    sum += std::log(double(conv[k + 1].q)) / double(conv[k].q);
  return sum;
}

double brjuno_partial(double x, int n) {
  if (n <= 0) return 0.0;
  return brjuno_partial(convergents(cf_expand(x, n + 1)), n);
}

}  // namespace hring
