#include "tfreud/specfun.hpp"

#include "tfreud/errors.hpp"

namespace tfreud {

namespace {
constexpr int kGuardBits = 32;
}

ExtReal lower_incomplete_gamma(const ExtReal& a, const ExtReal& x, const PrecisionContext& ctx) {
  if (!(a > 0)) throw DomainError("lower_incomplete_gamma: a must be positive");
  if (!(x >= 0)) throw DomainError("lower_incomplete_gamma: x must be non-negative");

  PrecisionScope outer(ctx);
  if (x.is_zero()) return ExtReal(0);

  ExtReal result;
  {
    PrecisionScope guarded(ctx.mantissa_bits() + kGuardBits);
    const ExtReal aa = ExtReal(0) + a;
    const ExtReal xx = ExtReal(0) + x;

    ExtReal term(1);
    ExtReal sum(1);
    int k = 1;
    for (;; ++k) {
      if (k > ctx.max_terms())
        throw ConvergenceError("lower_incomplete_gamma: series exceeded max_terms",
                               abs(term / sum).to_double());
      const ExtReal denom = aa + k;
      term *= xx / denom;
      sum += term;
      // tail after this term is bounded by term * q / (1 - q), q = x / (a + k + 1)
      const ExtReal next = denom + 1;
      if (next > 2 * xx) {
        const ExtReal tail = term * xx / (next - xx);
        if (tail <= ctx.series_tol() * sum) break;
      }
    }
    result = exp(aa * log(xx) - xx) / aa * sum;
  }
  return ExtReal(0) + result;
}

ExtReal complete_gamma(const ExtReal& a, const PrecisionContext& ctx) {
  if (!(a > 0)) throw DomainError("complete_gamma: a must be positive");
  PrecisionScope scope(ctx);
  ExtReal r;
  mpfr_gamma(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace tfreud
