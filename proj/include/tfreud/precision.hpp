#pragma once

#include "tfreud/ext_real.hpp"

namespace tfreud {

/// Mantissa width and series controls shared by every extended-precision
/// computation. Immutable after construction.
class PrecisionContext {
 public:
  static constexpr int kDefaultBits = 256;
  static constexpr int kDefaultMaxTerms = 10000;
  static constexpr int kMinBits = 64;

  /// series_tol defaults to 2^(1 - mantissa_bits).
  explicit PrecisionContext(int mantissa_bits = kDefaultBits);
  PrecisionContext(int mantissa_bits, const ExtReal& series_tol, int max_terms = kDefaultMaxTerms);

  int mantissa_bits() const noexcept { return bits_; }
  const ExtReal& series_tol() const noexcept { return series_tol_; }
  int max_terms() const noexcept { return max_terms_; }

  /// Unit roundoff 2^(1 - mantissa_bits).
  ExtReal epsilon() const;

  /// Threshold for the printed recurrence identities: 1e-25 at 256 bits,
  /// scaled as 2^(-mantissa_bits) * 1e52.
  ExtReal tol_identity() const;

  /// Same context at a different width, series_tol rescaled by the same factor.
  PrecisionContext with_bits(int mantissa_bits) const;

 private:
  int bits_;
  ExtReal series_tol_;
  int max_terms_;
};

/// Sets the calling thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.mantissa_bits()) {}
  explicit PrecisionScope(long bits) : saved_(working_precision()) {
    detail::set_working_precision(static_cast<mpfr_prec_t>(bits));
  }
  ~PrecisionScope() { detail::set_working_precision(saved_); }

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace tfreud
