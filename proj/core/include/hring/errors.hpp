#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hring {

enum class Errc {
  EssentialSingularity,
  PoleInput,
  DegenerateParameters,
  DegenerateQuartic,
  NoConvergence,
  SingularRescale,
  PrecisionExhausted,
  NoRingFound,
  CenterOutsideRing,
  NotRecurrent,
  CircleNotInvariant,
  BracketInvalid,
  TongueNotFound,
  DomainError,
  PathThroughZero,
  UnderSampled,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

  // TongueNotFound: deepest level that succeeded.
  int level = -1;
  // DegenerateQuartic: roots of the lower-degree polynomial that remained.
  std::vector<std::complex<double>> partial_roots;

 private:
  Errc code_;
};

}  // namespace hring
