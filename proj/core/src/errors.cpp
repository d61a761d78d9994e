#include "hring/errors.hpp"

namespace hring {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EssentialSingularity: return "EssentialSingularity";
    case Errc::PoleInput: return "PoleInput";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::DegenerateQuartic: return "DegenerateQuartic";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SingularRescale: return "SingularRescale";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NoRingFound: return "NoRingFound";
    case Errc::CenterOutsideRing: return "CenterOutsideRing";
    case Errc::NotRecurrent: return "NotRecurrent";
    case Errc::CircleNotInvariant: return "CircleNotInvariant";
    case Errc::BracketInvalid: return "BracketInvalid";
    case Errc::TongueNotFound: return "TongueNotFound";
    case Errc::DomainError: return "DomainError";
    case Errc::PathThroughZero: return "PathThroughZero";
    case Errc::UnderSampled: return "UnderSampled";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hring
