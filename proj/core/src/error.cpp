#include "stabledeg/error.hpp"

namespace stabledeg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::non_prime_modulus: return "NonPrimeModulus";
    case Errc::modulus_too_small: return "ModulusTooSmall";
    case Errc::modulus_too_large: return "ModulusTooLarge";
    case Errc::insufficient_regular_elements: return "InsufficientRegularElements";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::dimension_too_small: return "DimensionTooSmall";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::not_a_field: return "NotAField";
    case Errc::too_large: return "TooLarge";
    case Errc::not_regular_colour: return "NotRegularColour";
    case Errc::stability_violation: return "StabilityViolation";
    case Errc::collision_mismatch: return "CollisionMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace stabledeg
