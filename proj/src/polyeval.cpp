#include "tfreud/polyeval.hpp"

#include "tfreud/errors.hpp"

namespace tfreud {

PolyEval eval(int n, const ExtReal& x_in, const GammaSequence& seq) {
  PrecisionScope scope(seq.ctx());
  PolyEval out;
  out.n = n;
  out.x = ExtReal(0) + x_in;
  const ExtReal& x = out.x;
  if (n < 0) {
    out.value = out.dvalue = out.d2value = ExtReal(0);
    return out;
  }
  if (n >= 2) seq.require(n - 1);

  ExtReal p0(1), p1 = x;
  ExtReal d0(0), d1(1);
  ExtReal s0(0), s1(0);
  if (n == 0) {
    out.value = p0;
    out.dvalue = d0;
    out.d2value = s0;
    return out;
  }
  for (int k = 1; k < n; ++k) {
    const ExtReal gk = seq.gamma(k);
    ExtReal p2 = x * p1 - gk * p0;
    ExtReal d2 = p1 + x * d1 - gk * d0;
    ExtReal s2 = 2 * d1 + x * s1 - gk * s0;
    p0 = std::move(p1);
    p1 = std::move(p2);
    d0 = std::move(d1);
    d1 = std::move(d2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  out.value = std::move(p1);
  out.dvalue = std::move(d1);
  out.d2value = std::move(s1);
  return out;
}

ExtReal lambda_coefficient(int n, const GammaSequence& seq) {
  if (n < 2) throw DomainError("lambda_coefficient: n must be >= 2");
  seq.require(n - 1);
  PrecisionScope scope(seq.ctx());
  ExtReal s(0);
  for (int k = 1; k < n; ++k) s -= seq.gamma(k);
  return s;
}

StructureCoefficients structure_coefficients(int n, const GammaSequence& seq) {
  if (n < 0) throw DomainError("structure_coefficients: n must be >= 0");
  seq.require(n + 3);
  PrecisionScope scope(seq.ctx());
  auto G = [&](int k) { return seq.gamma(k); };
  const ExtReal z2 = square(seq.z());

  StructureCoefficients sc;
  sc.n = n;
  sc.B = 4 * G(n + 1) *
         (G(n + 2) * (G(n + 3) + G(n + 2) + G(n + 1) + G(n) - z2) +
          G(n + 1) * (G(n + 2) + G(n + 1) + G(n) - z2) + G(n) * (G(n + 1) + G(n) + G(n - 1) - z2) -
          ExtReal::ratio(1, 2) - ExtReal::ratio(n, 4));
  sc.C = 4 * G(n + 1) * G(n) * G(n - 1) * (G(n + 2) + G(n + 1) + G(n) + G(n - 1) + G(n - 2) - z2);
  sc.D = 4 * G(n + 1) * G(n) * G(n - 1) * G(n - 2) * G(n - 3);
  return sc;
}

Residual check_structure(int n, const ExtReal& x, const GammaSequence& seq) {
  const auto sc = structure_coefficients(n, seq);
  PrecisionScope scope(seq.ctx());
  const ExtReal phi = square(x) - square(seq.z());
  TermSum s;
  s.add(phi * eval(n + 1, x, seq).dvalue);
  s.sub((n + 1) * eval(n + 2, x, seq).value);
  s.sub(sc.B * eval(n, x, seq).value);
  s.sub(sc.C * eval(n - 2, x, seq).value);
  s.sub(sc.D * eval(n - 4, x, seq).value);
  return s.result();
}

LadderCoefficients::LadderCoefficients(int n, const GammaSequence& seq) : n_(n) {
  if (n < 0) throw DomainError("LadderCoefficients: n must be >= 0");
  seq.require(n + 2);
  PrecisionScope scope(seq.ctx());
  auto G = [&](int k) { return seq.gamma(k); };
  z2_ = square(seq.z());
  gamma_n_ = G(n);
  sum3_ = G(n + 1) + G(n) + G(n - 1);
  b_ = G(n + 1) + G(n) - z2_;
  c_ = G(n) * (sum3_ - z2_) + G(n + 1) * (G(n + 2) + G(n + 1) + G(n) - z2_) -
       ExtReal::ratio(n, 2) - ExtReal::ratio(1, 4);
}

ExtReal LadderCoefficients::A(const ExtReal& x) const {
  const ExtReal x2 = square(x);
  return (x2 + b_) * x2 + c_;
}

ExtReal LadderCoefficients::dA(const ExtReal& x) const {
  return x * (4 * square(x) + 2 * b_);
}

ExtReal LadderCoefficients::B(const ExtReal& x) const {
  return x * (4 * gamma_n_ * (sum3_ + square(x) - z2_) - n_);
}

ExtReal LadderCoefficients::dB(const ExtReal& x) const {
  const ExtReal x2 = square(x);
  return 4 * gamma_n_ * (sum3_ + 3 * x2 - z2_) - n_;
}

namespace {

// ℬ_n needs only γ_{n-1}..γ_{n+1}; used where 𝒜_n's c_n (which needs γ_{n+2}) is not available.
ExtReal ladder_B(int n, const ExtReal& x, const GammaSequence& seq) {
  auto G = [&](int k) { return seq.gamma(k); };
  const ExtReal phi = square(x) - square(seq.z());
  return x * (4 * G(n) * (G(n + 1) + G(n) + G(n - 1) + phi) - n);
}

}  // namespace

LadderResiduals ladder_check(int n, const ExtReal& x, const GammaSequence& seq) {
  if (n < 0) throw DomainError("ladder_check: n must be >= 0");
  const LadderCoefficients L(n, seq);
  PrecisionScope scope(seq.ctx());
  const ExtReal phi = square(x) - square(seq.z());
  const auto pn = eval(n, x, seq);
  const ExtReal pm = eval(n - 1, x, seq).value;

  LadderResiduals out;
  out.r_lower = TermSum()
                    .add(phi * pn.dvalue)
                    .sub(4 * seq.gamma(n) * L.A(x) * pm)
                    .add(L.B(x) * pn.value)
                    .result();
  out.r_compat = TermSum()
                     .add(L.B(x))
                     .add(ladder_B(n + 1, x, seq))
                     .sub(4 * x * L.A(x))
                     .add(4 * x * square(x) * phi)
                     .result();
  return out;
}

Residual raising_check(int n, const ExtReal& x, const GammaSequence& seq) {
  if (n < 1) throw DomainError("raising_check: n must be >= 1");
  const LadderCoefficients L(n, seq);
  const LadderCoefficients Lm(n - 1, seq);
  PrecisionScope scope(seq.ctx());
  const ExtReal phi = square(x) - square(seq.z());
  const auto pm = eval(n - 1, x, seq);
  return TermSum()
      .sub(phi * pm.dvalue)
      .add(L.B(x) * pm.value)
      .add(4 * x * square(x) * phi * pm.value)
      .sub(4 * Lm.A(x) * eval(n, x, seq).value)
      .result();
}

HolonomicCoefficients holonomic_coefficients(int n, const ExtReal& x, const GammaSequence& seq,
                                             HolonomicForm form) {
  if (n < 1) throw DomainError("holonomic_coefficients: n must be >= 1");
  const LadderCoefficients L(n, seq);
  const LadderCoefficients Lm(n - 1, seq);
  PrecisionScope scope(seq.ctx());
  auto G = [&](int k) { return seq.gamma(k); };

  const ExtReal x2 = square(x);
  const ExtReal z2 = square(seq.z());
  const ExtReal phi = x2 - z2;
  const ExtReal A = L.A(x);
  const ExtReal pole_tol = sqrt(seq.ctx().epsilon());
  if (abs(phi) <= pole_tol * z2)
    throw PoleError("holonomic_coefficients: phi(x;z) vanishes at x = " + x.to_string(20));
  if (abs(A) <= pole_tol * (square(x2) + abs(L.b()) * x2 + abs(L.c())))
    throw PoleError("holonomic_coefficients: A_n(x;z) vanishes at x = " + x.to_string(20));

  const ExtReal B = L.B(x);
  const ExtReal g1 = G(n + 1) + G(n);
  HolonomicCoefficients out;
  out.R = -2 * x * ((2 * x2 * phi - 1) * A + phi * (g1 + 2 * x2 - z2)) / (phi * A);

  const ExtReal last = 16 * G(n) * square(A) * Lm.A(x);
  ExtReal num = -A * B * (B + 4 * phi * x2 * x) - 2 * x * B * phi * (2 * x2 - z2 + g1) +
                A * phi * (4 * G(n) * (3 * x2 - z2 + G(n - 1) + g1) - n);
  num += (form == HolonomicForm::corrected) ? last : -last;
  out.S = num / (square(phi) * A);
  return out;
}

Residual holonomic_residual(int n, const ExtReal& x, const GammaSequence& seq, HolonomicForm form) {
  const auto rs = holonomic_coefficients(n, x, seq, form);
  PrecisionScope scope(seq.ctx());
  const auto p = eval(n, x, seq);
  return TermSum().add(p.d2value).add(rs.R * p.dvalue).add(rs.S * p.value).result();
}

BoundaryResiduals boundary_identities(int n, const GammaSequence& seq) {
  if (n < 1) throw DomainError("boundary_identities: n must be >= 1");
  seq.require(n + 2);
  PrecisionScope scope(seq.ctx());
  auto G = [&](int k) { return seq.gamma(k); };
  const ExtReal& z = seq.z();
  const ExtReal damp = exp(-square(square(z)));
  const ExtReal pn = eval(n, z, seq).value;
  const ExtReal pm = eval(n - 1, z, seq).value;

  BoundaryResiduals out;
  out.r_prod = TermSum()
                   .add(pn * pm * damp)
                   .sub(ExtReal::ratio(n, 2) * seq.h(n - 1))
                   .add(2 * G(n) * (G(n + 1) + G(n) + G(n - 1)) * seq.h(n - 1))
                   .result();
  const ExtReal bracket =
      (2 * n + 1) - 4 * (G(n + 2) * G(n + 1) + square(G(n) + G(n + 1)) + G(n) * G(n - 1));
  out.r_square = TermSum()
                     .add(square(pn) * damp)
                     .sub(seq.h(n) * bracket / (2 * z))
                     .result();
  return out;
}

Residual z_flow_residual(int n, const ExtReal& x, const ExtReal& z, const ExtReal& step,
                         const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("z_flow_residual: n must be >= 1");
  if (!(step > 0) || !(z - step > 0)) throw DomainError("z_flow_residual: need 0 < step < z");
  const auto mid = gamma_from_moments(z, n + 1, ctx);
  const auto plus = gamma_from_moments(z + step, n + 1, ctx);
  const auto minus = gamma_from_moments(z - step, n + 1, ctx);
  PrecisionScope scope(ctx);
  auto G = [&](int k) { return mid.gamma(k); };

  const ExtReal x2 = square(x);
  const auto p = eval(n, x, mid);
  const ExtReal pm = eval(n - 1, x, mid).value;
  const ExtReal dz = (eval(n, x, plus).value - eval(n, x, minus).value) / (2 * step);
  return TermSum()
      .sub(n * p.value)
      .add(x * p.dvalue)
      .add(z * dz)
      .add(4 * G(n) * (G(n + 1) + G(n) + G(n - 1) + x2) * p.value)
      .sub(4 * G(n) * (G(n + 1) + G(n) + x2) * x * pm)
      .result();
}

}  // namespace tfreud
