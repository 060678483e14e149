#pragma once

// Zeros of P_n(x;z), the quartic 𝒜_n's roots as fixed charges, the
// equilibrium condition of the zeros, and their motion in z.

#include <functional>
#include <vector>

#include "tfreud/ext_real.hpp"
#include "tfreud/polyeval.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/residual.hpp"

namespace tfreud {

/// n×n symmetric tridiagonal matrix with zero diagonal and off-diagonal
/// entries √γ_1 … √γ_{n-1}; its eigenvalues are the zeros of P_n.
class JacobiMatrix {
 public:
  JacobiMatrix(int n, const GammaSequence& seq);

  int size() const noexcept { return n_; }
  /// γ_i = (off-diagonal i)², i = 1 .. n-1.
  const std::vector<ExtReal>& squared_off_diagonal() const noexcept { return off2_; }

  /// Number of eigenvalues strictly below x (Sturm sequence count).
  int count_below(const ExtReal& x) const;
  /// Gershgorin radius: every eigenvalue lies in [-r, r].
  ExtReal spectral_bound() const;

 private:
  int n_;
  std::vector<ExtReal> off2_;
};

struct ZeroSet {
  int n = 0;
  ExtReal z;
  std::vector<ExtReal> x;  // ascending
  /// Largest |Newton correction| applied after bisection.
  ExtReal max_newton_shift;
};

/// Bisection on Sturm counts down to about half the working precision, then
/// one Newton step on the recurrence value. Symmetric: the negative zeros are
/// the mirror images of the positive ones, and 0 is exact for odd n.
ZeroSet zeros(int n, const GammaSequence& seq);

/// Real roots ±η and imaginary roots ±iζ of 𝒜_n(x;z) = x⁴ + b_nx² + c_n.
struct ElectrostaticModel {
  int n = 0;
  ExtReal z;
  ExtReal b;
  ExtReal c;
  ExtReal eta1;       // positive real root
  ExtReal eta2;       // -eta1
  ExtReal zeta_imag;  // ζ_{1,2} = ±i·zeta_imag
};

/// η = √((√(b²-4c) - b)/2), ζ = √((√(b²-4c) + b)/2). Throws StructureViolation
/// when the discriminant or either radicand is not positive, i.e. when
/// 𝒜_n does not have two real and two purely imaginary roots.
ElectrostaticModel electrostatic_points(int n, const GammaSequence& seq);

/// Sign of the pairwise term in the equilibrium condition. With
/// V_n = x⁴ + ln|𝒜_n/φ| the zeros satisfy V'_n(x_k) = Σ_{j≠k} 2/(x_k - x_j)
/// (`corrected`); `published` adds the pairwise sum to V'_n instead.
enum class EquilibriumForm { corrected, published };

/// For each zero x_k:
///   corrected:  Σ_{j≠k} 2/(x_k - x_j) - 4x_k³ - 𝒜'_n(x_k)/𝒜_n(x_k) + φ'(x_k)/φ(x_k),
///   published:  Σ_{j≠k} 2/(x_k - x_j) + 4x_k³ + 𝒜'_n(x_k)/𝒜_n(x_k) - φ'(x_k)/φ(x_k).
std::vector<Residual> equilibrium_residual(const ZeroSet& zs, const GammaSequence& seq,
                                           EquilibriumForm form = EquilibriumForm::corrected);

struct PotentialValue {
  ExtReal total;  // x⁴ + ln|𝒜_n| - ln|φ|
  ExtReal long_range;   // x⁴
  ExtReal short_range;  // ln|𝒜_n/φ|
};

/// Throws PoleError at x = ±z or at a real root of 𝒜_n.
PotentialValue potential_value(const ExtReal& x, int n, const GammaSequence& seq);

using SequenceProvider = std::function<GammaSequence(const ExtReal& z)>;

/// Moment-route sequences long enough for 𝒜_n.
SequenceProvider moment_route_provider(int n, const PrecisionContext& ctx);

struct Trajectory {
  int n = 0;
  int k = 0;
  std::vector<ExtReal> z;
  std::vector<ExtReal> x;
};

/// Integrates ẋ = (x/z)𝒜_n(z;z)/𝒜_n(x;z) for the k-th zero (1-based,
/// ascending) from z0 to z1 with `steps` classical RK4 steps. The start value
/// is zeros(n, provider(z0)).x[k-1]. Throws PoleError if 𝒜_n(x;z) changes
/// sign or vanishes along the path.
Trajectory zero_dynamics_trace(int n, int k, const ExtReal& z0, const ExtReal& z1, int steps,
                               const SequenceProvider& provider, const PrecisionContext& ctx);

/// z cos(kπ/(n+1)).
ExtReal chebyshev_limit(int n, int k, const ExtReal& z);

/// max_k |x_k - limit_k| after sorting both ascending.
ExtReal chebyshev_deviation(const ZeroSet& zs);

}  // namespace tfreud
