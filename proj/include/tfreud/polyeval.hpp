#pragma once

// Evaluation of the monic polynomials P_n(x;z) from γ_n, and numerical
// checks of the relations they satisfy with φ(x;z) = x² - z².

#include "tfreud/ext_real.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/residual.hpp"

namespace tfreud {

/// P_n(x;z) with first and second x-derivatives.
struct PolyEval {
  int n = 0;
  ExtReal x;
  ExtReal value;
  ExtReal dvalue;
  ExtReal d2value;
};

/// Forward three-term recurrence, differentiated twice in lockstep:
///   P'_{k+1}  = P_k + xP'_k - γ_kP'_{k-1},
///   P''_{k+1} = 2P'_k + xP''_k - γ_kP''_{k-1}.
/// Negative n gives the zero polynomial.
PolyEval eval(int n, const ExtReal& x, const GammaSequence& seq);

/// λ_{n,n-2}, the x^{n-2} coefficient of P_n: -Σ_{k=1}^{n-1} γ_k. Requires n >= 2.
ExtReal lambda_coefficient(int n, const GammaSequence& seq);

/// Coefficients of φ∂_xP_{n+1} = (n+1)P_{n+2} + B_nP_n + C_nP_{n-2} + D_nP_{n-4}.
struct StructureCoefficients {
  int n = 0;
  ExtReal B;
  ExtReal C;
  ExtReal D;
};

StructureCoefficients structure_coefficients(int n, const GammaSequence& seq);
Residual check_structure(int n, const ExtReal& x, const GammaSequence& seq);

/// 𝒜_n(x;z) = x⁴ + b_nx² + c_n and ℬ_n(x;z) = x[4γ_n(γ_{n+1}+γ_n+γ_{n-1}+φ) - n].
class LadderCoefficients {
 public:
  LadderCoefficients(int n, const GammaSequence& seq);

  int n() const noexcept { return n_; }
  const ExtReal& b() const noexcept { return b_; }
  const ExtReal& c() const noexcept { return c_; }

  ExtReal A(const ExtReal& x) const;
  ExtReal dA(const ExtReal& x) const;
  ExtReal B(const ExtReal& x) const;
  ExtReal dB(const ExtReal& x) const;

 private:
  int n_;
  ExtReal z2_;
  ExtReal gamma_n_;
  ExtReal sum3_;  // γ_{n+1} + γ_n + γ_{n-1}
  ExtReal b_;
  ExtReal c_;
};

struct LadderResiduals {
  /// φ∂_xP_n - [4γ_n𝒜_nP_{n-1} - ℬ_nP_n]
  Residual r_lower;
  /// ℬ_n + ℬ_{n+1} - 4x(𝒜_n - x²φ)
  Residual r_compat;
};

LadderResiduals ladder_check(int n, const ExtReal& x, const GammaSequence& seq);

/// (-φ∂_x + ℬ_n + 4x³φ)P_{n-1} - 4𝒜_{n-1}P_n. Requires n >= 1.
Residual raising_check(int n, const ExtReal& x, const GammaSequence& seq);

/// Which S(x;n) to use in the second-order equation. `published` keeps the
/// printed sign of the γ_n𝒜_n²𝒜_{n-1} term (-16); `corrected` uses +16,
/// which is what the factorisation through the two ladder operators gives.
enum class HolonomicForm { corrected, published };

struct HolonomicCoefficients {
  ExtReal R;
  ExtReal S;
};

/// Throws PoleError when φ(x) or 𝒜_n(x) vanish at the working precision.
HolonomicCoefficients holonomic_coefficients(int n, const ExtReal& x, const GammaSequence& seq,
                                             HolonomicForm form = HolonomicForm::corrected);

/// ∂²_xP_n + R∂_xP_n + SP_n.
Residual holonomic_residual(int n, const ExtReal& x, const GammaSequence& seq,
                            HolonomicForm form = HolonomicForm::corrected);

struct BoundaryResiduals {
  /// P_n(z)P_{n-1}(z)e^{-z⁴} - [n/2 - 2γ_n(γ_{n+1}+γ_n+γ_{n-1})]h_{n-1}
  Residual r_prod;
  /// P_n²(z)e^{-z⁴} - h_n[(2n+1) - 4(γ_{n+2}γ_{n+1} + (γ_n+γ_{n+1})² + γ_nγ_{n-1})]/(2z)
  Residual r_square;
};

/// Requires n >= 1.
BoundaryResiduals boundary_identities(int n, const GammaSequence& seq);

/// Residual of the z-flow
///   -nP_n + x∂_xP_n + z∂_zP_n + 4γ_n(γ_{n+1}+γ_n+γ_{n-1}+x²)P_n = 4γ_n(γ_{n+1}+γ_n+x²)xP_{n-1},
/// with ∂_zP_n from a central difference of moment-route sequences at z ± step.
Residual z_flow_residual(int n, const ExtReal& x, const ExtReal& z, const ExtReal& step,
                         const PrecisionContext& ctx);

}  // namespace tfreud
