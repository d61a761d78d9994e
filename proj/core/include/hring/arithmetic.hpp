#pragma once

#include <cstdint>
#include <vector>

namespace hring {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct ContinuedFraction {
  double x = 0.0;
  std::vector<std::int64_t> quotients;  // a_1..a_n of [0; a_1, a_2, ...]
  bool terminated = false;              // expansion ended exactly
};

struct Convergent {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

// First n quotients of x in (0,1) by the Gauss map. Throws PrecisionExhausted when a
// quotient can no longer be trusted in double precision.
ContinuedFraction cf_expand(double x, int n);
// Exact Euclid on a rational in (0,1).
ContinuedFraction cf_expand(Rational x, int n);

std::vector<Convergent> convergents(const ContinuedFraction& cf);
std::vector<Convergent> convergents(const std::vector<std::int64_t>& quotients);

// Value of [0; a_1, ..., a_n].
double cf_value(const std::vector<std::int64_t>& quotients);

// sum_{k=1}^{n} log(q_{k+1}) / q_k
double brjuno_partial(double x, int n);
double brjuno_partial(const std::vector<Convergent>& conv, int n);

inline constexpr double kGolden = 0.6180339887498948482;

}  // namespace hring
