#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibhill {

enum class Errc {
  invalid_modulus,
  invalid_argument,
  not_invertible,
  not_prime,
  out_of_range,
  overflow,
  invalid_range,
  dimension_mismatch,
  modulus_mismatch,
  lambda_degenerate,
  lambda_too_large,
  unmapped_character,
  value_out_of_range,
  malformed_envelope,
  insufficient_pairs,
  parse_error,
  io_error,
};

/// Kebab-case name used in CLI diagnostics, e.g. "not-invertible".
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace fibhill
