#include "tfreud/precision.hpp"

#include <string>

#include "tfreud/errors.hpp"

namespace tfreud {

namespace {

void check_bits(int bits) {
  if (bits < PrecisionContext::kMinBits)
    throw ConfigError("mantissa_bits must be >= 64, got " + std::to_string(bits));
}

ExtReal default_tol(int bits) {
  PrecisionScope scope(bits);
  return ldexp(ExtReal(1), 1 - bits);
}

}  // namespace

PrecisionContext::PrecisionContext(int mantissa_bits)
    : bits_((check_bits(mantissa_bits), mantissa_bits)),
      series_tol_(default_tol(mantissa_bits)),
      max_terms_(kDefaultMaxTerms) {}

PrecisionContext::PrecisionContext(int mantissa_bits, const ExtReal& series_tol, int max_terms)
    : bits_((check_bits(mantissa_bits), mantissa_bits)), max_terms_(max_terms) {
  PrecisionScope scope(bits_);
  series_tol_ = ExtReal(0) + series_tol;  // round to this context's width
  if (!(series_tol_ > 0)) throw ConfigError("series_tol must be positive");
  if (series_tol_ < ldexp(ExtReal(1), 1 - bits_))
    throw ConfigError("series_tol must be >= 2^(1 - mantissa_bits)");
  if (max_terms_ < 1) throw ConfigError("max_terms must be positive");
}

ExtReal PrecisionContext::epsilon() const {
  PrecisionScope scope(bits_);
  return ldexp(ExtReal(1), 1 - bits_);
}

ExtReal PrecisionContext::tol_identity() const {
  PrecisionScope scope(bits_);
  return ldexp(pow(ExtReal(10), 52L), -bits_);
}

PrecisionContext PrecisionContext::with_bits(int mantissa_bits) const {
  check_bits(mantissa_bits);
  ExtReal tol;
  {
    PrecisionScope scope(mantissa_bits);
    tol = ldexp(ExtReal(0) + series_tol_, bits_ - mantissa_bits);
  }
  return PrecisionContext(mantissa_bits, tol, max_terms_);
}

}  // namespace tfreud
