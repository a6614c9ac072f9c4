#include "fibhill/error.hpp"

namespace fibhill {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_modulus: return "invalid-modulus";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_invertible: return "not-invertible";
    case Errc::not_prime: return "not-prime";
    case Errc::out_of_range: return "out-of-range";
    case Errc::overflow: return "overflow";
    case Errc::invalid_range: return "invalid-range";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::modulus_mismatch: return "modulus-mismatch";
    case Errc::lambda_degenerate: return "lambda-degenerate";
    case Errc::lambda_too_large: return "lambda-too-large";
    case Errc::unmapped_character: return "unmapped-character";
    case Errc::value_out_of_range: return "value-out-of-range";
    case Errc::malformed_envelope: return "malformed-envelope";
    case Errc::insufficient_pairs: return "insufficient-pairs";
    case Errc::parse_error: return "parse-error";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace fibhill
