#pragma once

// Moments u_n(z) = ∫_{-z}^{z} x^n e^{-x^4} dx of the truncated quartic
// Freud weight, their recurrences, their z-derivatives, the large-z ratio
// against the untruncated moments, and Stieltjes-function checks.

#include <span>
#include <vector>

#include "tfreud/ext_real.hpp"
#include "tfreud/precision.hpp"
#include "tfreud/residual.hpp"

namespace tfreud {

enum class MomentSource { series, oracle };

/// Even moments u_0, u_2, ..., u_{2(size-1)} for one z.
class MomentTable {
 public:
  /// Builds `count` even moments from the incomplete gamma series.
  static MomentTable from_series(const ExtReal& z, int count, const PrecisionContext& ctx);

  /// Wraps externally computed even moments (e.g. from quadrature). All values
  /// must be positive.
  MomentTable(const ExtReal& z, std::vector<ExtReal> even_moments, MomentSource source,
              const PrecisionContext& ctx);

  const ExtReal& z() const noexcept { return z_; }
  int size() const noexcept { return static_cast<int>(even_.size()); }
  MomentSource source() const noexcept { return source_; }
  const PrecisionContext& ctx() const noexcept { return ctx_; }

  /// u_{2m}.
  const ExtReal& even(int m) const;
  /// u_n; zero for odd n.
  ExtReal operator[](int n) const;
  std::span<const ExtReal> even_moments() const noexcept { return even_; }

 private:
  ExtReal z_;
  std::vector<ExtReal> even_;
  MomentSource source_;
  PrecisionContext ctx_;
};

/// u_n(z) = (1 + (-1)^n)/4 · γ̂((n+1)/4, z^4).
ExtReal moment(int n, const ExtReal& z, const PrecisionContext& ctx);

/// Residuals of 4u_{2n+6} - 4z²u_{2n+4} - (2n+3)u_{2n+2} + (2n+1)z²u_{2n} = 0
/// for n = 0 .. table.size()-4.
std::vector<Residual> check_moment_recurrence(const MomentTable& table);

/// Residuals of 4u_{2n+4} - (2n+1)u_{2n} + 2z^{2n+1}e^{-z^4} = 0 for n = 0 .. table.size()-3.
std::vector<Residual> check_moment_exp_recurrence(const MomentTable& table);

/// Closed form ∂_z u_n = 2 z^n e^{-z^4} (n even).
ExtReal moment_z_derivative(int n, const ExtReal& z, const PrecisionContext& ctx);

/// Same derivative through ((n+1)u_n - 4u_{n+4}) / z (n even).
ExtReal moment_z_derivative_via_moments(int n, const ExtReal& z, const PrecisionContext& ctx);

/// Large-z expansion of u_{2n}/u^F_{2n}, u^F_{2n} = Γ((2n+1)/4)/2:
///   1 - e^{-z^4} Σ_{k=0}^{K} z^{2(n-2k)-3} / Γ((2n+1)/4 - k).
struct MomentRatioExpansion {
  ExtReal value;
  int terms_used = 0;        // number of k values summed
  ExtReal first_omitted;     // |term k = terms_used|, the natural error scale
  bool stopped_early = false;  // cut before K (non-positive Γ argument or growing terms)
};

MomentRatioExpansion freud_moment_ratio(int n, const ExtReal& z, int max_order,
                                        const PrecisionContext& ctx);

/// Truncated Stieltjes series S(t;z) = Σ_{n<terms} u_{2n} / t^{2n+1}.
struct StieltjesTruncation {
  ExtReal z;
  int terms;
  MomentTable moments;
};

StieltjesTruncation make_stieltjes_truncation(const ExtReal& z, int terms,
                                              const PrecisionContext& ctx);

/// Requires |t| >= 2z.
ExtReal stieltjes_value(const ExtReal& t, const StieltjesTruncation& trunc);

struct StieltjesResiduals {
  /// φ∂_tS + (φ'+ψ)S - [u_0(4t^4-1) + 4(u_2 t^2 + u_4)], right side as published.
  Residual r_t;
  /// Same left side against u_0(4t^4-1) + 4(u_2 t^2 + u_4) - 4z^2(u_0 t^2 + u_2),
  /// the right side obtained by integrating the weight by parts.
  Residual r_t_corrected;
  /// φ∂_zS - 2t e^{-z^4}.
  Residual r_z;
  /// Geometric bounds on the truncation error each residual inherits.
  ExtReal tail_bound_t;
  ExtReal tail_bound_z;
};

/// Requires |t| >= 2z; z = 0 gives S ≡ 0 and exact zero residuals.
StieltjesResiduals stieltjes_ode_residuals(const ExtReal& t, const ExtReal& z, int terms,
                                           const PrecisionContext& ctx);

}  // namespace tfreud
