#pragma once

// Recurrence coefficients γ_n(z) of xP_n = P_{n+1} + γ_n P_{n-1}, the
// auxiliary sequence g_n(z) and the squared norms h_n(z), built either from
// the moments (Gram route) or by the coupled nonlinear iteration for (g_n, γ_n).

#include <optional>
#include <string>
#include <vector>

#include "tfreud/ext_real.hpp"
#include "tfreud/moments.hpp"
#include "tfreud/precision.hpp"
#include "tfreud/residual.hpp"

namespace tfreud {

enum class GammaRoute { from_moments, laguerre_freud };

const char* to_string(GammaRoute route) noexcept;

/// Why a sequence stops short of the requested length.
struct Truncation {
  enum class Kind { instability, positivity_loss };
  Kind kind;
  int failing_index;  // first index that could not be produced
  std::string message;
};

/// γ_0..γ_N, g_0..g_{N-1} and h_0..h_N for one z. Immutable.
///
/// Indices below zero read as 0 for γ (the convention γ_0 = γ_{-1} = γ_{-2} = 0).
class GammaSequence {
 public:
  GammaSequence(ExtReal z, std::vector<ExtReal> gamma, std::vector<ExtReal> g,
                std::vector<ExtReal> h, GammaRoute route, PrecisionContext ctx,
                int requested, std::optional<Truncation> truncation);

  const ExtReal& z() const noexcept { return z_; }
  GammaRoute route() const noexcept { return route_; }
  const PrecisionContext& ctx() const noexcept { return ctx_; }

  /// Largest n with γ_n available.
  int max_index() const noexcept { return static_cast<int>(gamma_.size()) - 1; }
  /// The N originally asked for; larger than max_index() only when truncated.
  int requested() const noexcept { return requested_; }
  const std::optional<Truncation>& truncation() const noexcept { return truncation_; }

  /// γ_n; zero for n <= 0.
  ExtReal gamma(int n) const;
  /// g_n for 0 <= n <= max_index()-1.
  const ExtReal& g(int n) const;
  /// h_n for 0 <= n <= max_index().
  const ExtReal& h(int n) const;

  /// Throws unless γ_0..γ_n are available: the truncation cause
  /// (InstabilityError / PositivityLossError) if the sequence stopped early,
  /// LengthError otherwise.
  void require(int n) const;

  /// Same sequence with every entry rounded to ctx.mantissa_bits(); used to
  /// hand a sequence built at high precision to cheaper downstream work.
  GammaSequence rounded(const PrecisionContext& ctx) const;

  const std::vector<ExtReal>& gammas() const noexcept { return gamma_; }
  const std::vector<ExtReal>& gs() const noexcept { return g_; }
  const std::vector<ExtReal>& hs() const noexcept { return h_; }

 private:
  ExtReal z_;
  std::vector<ExtReal> gamma_;
  std::vector<ExtReal> g_;
  std::vector<ExtReal> h_;
  GammaRoute route_;
  PrecisionContext ctx_;
  int requested_;
  std::optional<Truncation> truncation_;
};

/// γ_1 = u_2/u_0, γ_2 = (u_4u_0 - u_2²)/(u_0u_2).
struct GammaInit {
  ExtReal gamma1;
  ExtReal gamma2;
};
GammaInit gamma_init(const ExtReal& z, const PrecisionContext& ctx);

/// Forward iteration of
///   g_{k+1}   = z²g_k² / (γ_k(g_k + g_{k-1})) - g_k,
///   γ_{k+2}   = ((k+1)/2 - g_{k+1}) / (2γ_{k+1}) - γ_{k+1} - γ_k,
/// from γ_0 = g_0 = 0, γ_1, γ_2 from gamma_init and g_1 = 1/2 - 2γ_1(γ_2 + γ_1).
///
/// A divisor below `divisor_floor` (default 2^(-mantissa_bits/2)) or a
/// non-positive γ stops the iteration; the sequence is returned truncated and
/// the cause recorded in truncation().
GammaSequence gamma_laguerre_freud(const ExtReal& z, int N, const PrecisionContext& ctx,
                                   std::optional<ExtReal> divisor_floor = std::nullopt);

/// Gram route: monic coefficient vectors of P_n by the three-term recurrence,
/// h_n = <u, x^n P_n> from the moment table, γ_n = h_n/h_{n-1}. A non-positive
/// h_n truncates the sequence.
GammaSequence gamma_from_moments(const ExtReal& z, int N, const PrecisionContext& ctx);
GammaSequence gamma_from_moments(const MomentTable& moments, int N);

/// Monic coefficient vectors (ascending powers) of P_0..P_N from γ.
std::vector<std::vector<ExtReal>> monic_coefficients(const GammaSequence& seq, int N);

/// Residual of
///   z²/4 = γ_n[γ_{n-1}(γ_{n-2}+γ_{n-1}+γ_n-z²) + γ_n(γ_{n+1}+γ_n+γ_{n-1}-z²) + 1/4 - n/2]
///        - γ_{n+1}[γ_{n+2}(γ_{n+3}+γ_{n+2}+γ_{n+1}-z²) + γ_{n+1}(γ_{n+2}+γ_{n+1}+γ_n-z²) - n/2 - 3/4]
/// for n = 1 .. max_index()-3. Entry i holds n = i + 1.
std::vector<Residual> check_laguerre_freud(const GammaSequence& seq);
Residual laguerre_freud_residual(const GammaSequence& seq, int n);

/// Residual of
///   z²(n/2 - 2γ_n(γ_{n+1}+γ_n+γ_{n-1}))²
///     = γ_n (n + 1/2 - 2γ_n(…) - 2γ_{n+1}(γ_{n+2}+γ_{n+1}+γ_n))
///           (n - 1/2 - 2γ_n(…) - 2γ_{n-1}(γ_n+γ_{n-1}+γ_{n-2}))
/// for n = 0 .. max_index()-2. Entry i holds n = i.
std::vector<Residual> check_fifth_order(const GammaSequence& seq);
Residual fifth_order_residual(const GammaSequence& seq, int n);

/// z²/4 + (z²/16)n^-2 + (3z⁶/32)n^-3 + z²(4 - 8z⁴ + 27z⁶)/256 n^-4.
ExtReal gamma_asymptotic(int n, const ExtReal& z);
/// n/2 - 3z⁴/8 - (3z⁴/16)n^-2 - (9z⁸/32)n^-3 - 3z⁴(22 + 27z⁸)/256 n^-4.
ExtReal g_asymptotic(int n, const ExtReal& z);

struct TodaResiduals {
  ExtReal r_h;      // ϑ ln h_n  (central difference) minus its closed form
  ExtReal r_gamma;  // ϑ ln γ_n  (central difference) minus its closed form
  /// True when the step is so small that rounding in the differences
  /// (~ eps/step) is comparable to the O(step²) truncation error.
  bool cancellation_warning = false;
};

/// ϑ = z∂_z. Closed forms
///   ϑ ln h_n = 2n + 1 - 4[γ_n(γ_{n+1}+γ_n+γ_{n-1}) + γ_{n+1}(γ_{n+2}+γ_{n+1}+γ_n)],
///   ϑ ln γ_n = 4[γ_{n-1}(γ_n+γ_{n-1}+γ_{n-2}) - γ_{n+1}(γ_{n+2}+γ_{n+1}+γ_n) + 1/2].
/// γ and h at z ± step come from the moment route. Requires n >= 1, z - step > 0.
TodaResiduals toda_check(const ExtReal& z, int n, const ExtReal& step, const PrecisionContext& ctx);

}  // namespace tfreud
