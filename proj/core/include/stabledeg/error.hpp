#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stabledeg {

enum class Errc {
  non_prime_modulus,
  modulus_too_small,
  modulus_too_large,
  insufficient_regular_elements,
  dimension_mismatch,
  dimension_too_small,
  singular_matrix,
  degree_overflow,
  not_a_field,
  too_large,
  not_regular_colour,
  stability_violation,
  collision_mismatch,
  parse_error,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (tests, the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stabledeg
