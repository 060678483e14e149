#pragma once

#include "tfreud/ext_real.hpp"
#include "tfreud/precision.hpp"

namespace tfreud {

/// Lower incomplete gamma function  ∫_0^x t^(a-1) e^(-t) dt  from its power series
///
///   x^a e^(-x) / a * sum_k x^k / (a+1)_k,
///
/// summed with 32 guard bits and rounded to ctx.mantissa_bits(). The sum stops once the
/// geometric bound on the remaining tail falls below series_tol relative to the partial sum.
///
/// Throws DomainError for a <= 0 or x < 0 and ConvergenceError when ctx.max_terms()
/// terms do not suffice.
ExtReal lower_incomplete_gamma(const ExtReal& a, const ExtReal& x, const PrecisionContext& ctx);

/// Γ(a) for a > 0 at full working precision.
ExtReal complete_gamma(const ExtReal& a, const PrecisionContext& ctx);

}  // namespace tfreud
