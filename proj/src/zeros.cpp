#include "tfreud/zeros.hpp"

#include <algorithm>
#include <string>

#include "tfreud/errors.hpp"

namespace tfreud {

JacobiMatrix::JacobiMatrix(int n, const GammaSequence& seq) : n_(n) {
  if (n < 1) throw DomainError("JacobiMatrix: n must be >= 1");
  seq.require(n - 1);
  PrecisionScope scope(seq.ctx());
  off2_.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    ExtReal g = seq.gamma(i);
    if (!(g > 0))
      throw PositivityLossError("JacobiMatrix: gamma_" + std::to_string(i) + " is not positive", i);
    off2_.push_back(std::move(g));
  }
}

int JacobiMatrix::count_below(const ExtReal& x) const {
  // LDLᵀ pivots of T - xI; the number of negative pivots counts eigenvalues below x.
  const ExtReal tiny = ldexp(ExtReal(1), -4 * static_cast<long>(working_precision()));
  int count = 0;
  ExtReal d = -x;
  if (d.is_zero()) d = tiny;
  if (d < 0) ++count;
  for (const auto& g : off2_) {
    d = -x - g / d;
    if (d.is_zero()) d = tiny;
    if (d < 0) ++count;
  }
  return count;
}

ExtReal JacobiMatrix::spectral_bound() const {
  ExtReal r(0);
  for (int i = 0; i < n_; ++i) {
    ExtReal row(0);
    if (i > 0) row += sqrt(off2_[static_cast<std::size_t>(i - 1)]);
    if (i + 1 < n_) row += sqrt(off2_[static_cast<std::size_t>(i)]);
    r = max(r, row);
  }
  return r;
}

ZeroSet zeros(int n, const GammaSequence& seq) {
  const JacobiMatrix J(n, seq);
  PrecisionScope scope(seq.ctx());
  ZeroSet out;
  out.n = n;
  out.z = seq.z();
  out.x.assign(static_cast<std::size_t>(n), ExtReal(0));
  out.max_newton_shift = ExtReal(0);

  const ExtReal bound = J.spectral_bound() + 1;
  const ExtReal width_tol = ldexp(max(bound, ExtReal(1)), -seq.ctx().mantissa_bits() / 2 - 8);

  // k-th smallest eigenvalue (0-based) for the positive half; the rest by symmetry,
  // and the middle zero of odd n stays exactly 0.
  for (int k = n / 2 + n % 2; k < n; ++k) {
    ExtReal lo(0), hi = bound;
    while (hi - lo > width_tol) {
      ExtReal mid = (lo + hi) / 2;
      if (J.count_below(mid) > k)
        hi = std::move(mid);
      else
        lo = std::move(mid);
    }
    ExtReal x = (lo + hi) / 2;
    const auto p = eval(n, x, seq);
    if (!p.dvalue.is_zero()) {
      const ExtReal shift = p.value / p.dvalue;
      x -= shift;
      out.max_newton_shift = max(out.max_newton_shift, abs(shift));
    }
    out.x[static_cast<std::size_t>(n - 1 - k)] = -x;
    out.x[static_cast<std::size_t>(k)] = std::move(x);
  }
  return out;
}

ElectrostaticModel electrostatic_points(int n, const GammaSequence& seq) {
  if (n < 1) throw DomainError("electrostatic_points: n must be >= 1");
  const LadderCoefficients L(n, seq);
  PrecisionScope scope(seq.ctx());
  ElectrostaticModel m;
  m.n = n;
  m.z = seq.z();
  m.b = L.b();
  m.c = L.c();
  const ExtReal disc = square(m.b) - 4 * m.c;
  const std::string where = " (n = " + std::to_string(n) + ", z = " + seq.z().to_string(12) + ")";
  if (!(disc > 0)) throw StructureViolation("A_n has no pair of distinct real x^2 roots" + where);
  const ExtReal root = sqrt(disc);
  const ExtReal eta2 = (root - m.b) / 2;
  const ExtReal zeta2 = (root + m.b) / 2;
  if (!(eta2 > 0)) throw StructureViolation("A_n has no real root pair" + where);
  if (!(zeta2 > 0)) throw StructureViolation("A_n has no purely imaginary root pair" + where);
  m.eta1 = sqrt(eta2);
  m.eta2 = -m.eta1;
  m.zeta_imag = sqrt(zeta2);
  return m;
}

std::vector<Residual> equilibrium_residual(const ZeroSet& zs, const GammaSequence& seq,
                                           EquilibriumForm form) {
  const LadderCoefficients L(zs.n, seq);
  PrecisionScope scope(seq.ctx());
  const ExtReal z2 = square(seq.z());
  std::vector<Residual> out;
  out.reserve(zs.x.size());
  for (std::size_t k = 0; k < zs.x.size(); ++k) {
    const ExtReal& xk = zs.x[k];
    TermSum s;
    for (std::size_t j = 0; j < zs.x.size(); ++j)
      if (j != k) s.add(2 / (xk - zs.x[j]));
    const ExtReal field = 4 * xk * square(xk) + L.dA(xk) / L.A(xk) - 2 * xk / (square(xk) - z2);
    if (form == EquilibriumForm::corrected)
      s.sub(field);
    else
      s.add(field);
    out.push_back(s.result());
  }
  return out;
}

PotentialValue potential_value(const ExtReal& x, int n, const GammaSequence& seq) {
  const LadderCoefficients L(n, seq);
  PrecisionScope scope(seq.ctx());
  const ExtReal phi = square(x) - square(seq.z());
  const ExtReal A = L.A(x);
  if (phi.is_zero()) throw PoleError("potential_value: x = ±z");
  if (A.is_zero()) throw PoleError("potential_value: x is a real root of A_n");
  PotentialValue v;
  v.long_range = square(square(x));
  v.short_range = log(abs(A)) - log(abs(phi));
  v.total = v.long_range + v.short_range;
  return v;
}

SequenceProvider moment_route_provider(int n, const PrecisionContext& ctx) {
  return [n, ctx](const ExtReal& z) { return gamma_from_moments(z, n + 2, ctx); };
}

namespace {

struct Velocity {
  const SequenceProvider& provider;
  int n;
  int sign;  // sign of 𝒜_n(x;z) at the start

  ExtReal operator()(const ExtReal& z, const ExtReal& x) const {
    const auto seq = provider(z);
    const LadderCoefficients L(n, seq);
    const ExtReal a = L.A(x);
    if (a.is_zero() || a.sign() != sign)
      throw PoleError("zero_dynamics_trace: A_n(x;z) crosses zero near z = " + z.to_string(15) +
                      ", x = " + x.to_string(15));
    return x / z * L.A(z) / a;
  }
};

}  // namespace

Trajectory zero_dynamics_trace(int n, int k, const ExtReal& z0, const ExtReal& z1, int steps,
                               const SequenceProvider& provider, const PrecisionContext& ctx) {
  if (n < 1 || k < 1 || k > n) throw DomainError("zero_dynamics_trace: need 1 <= k <= n");
  if (!(z0 > 0) || !(z1 > z0)) throw DomainError("zero_dynamics_trace: need 0 < z0 < z1");
  if (steps < 1) throw DomainError("zero_dynamics_trace: steps must be >= 1");

  const auto seq0 = provider(z0);
  const auto start = zeros(n, seq0);
  PrecisionScope scope(ctx);

  Trajectory tr;
  tr.n = n;
  tr.k = k;
  ExtReal z = ExtReal(0) + z0;
  ExtReal x = ExtReal(0) + start.x[static_cast<std::size_t>(k - 1)];
  tr.z.push_back(z);
  tr.x.push_back(x);
  if (x.is_zero()) {
    // ẋ ∝ x: the middle zero of odd n stays at 0
    for (int i = 1; i <= steps; ++i) {
      tr.z.push_back(z0 + (z1 - z0) * i / steps);
      tr.x.push_back(ExtReal(0));
    }
    return tr;
  }

  const Velocity f{provider, n, LadderCoefficients(n, seq0).A(x).sign()};
  const ExtReal h = (z1 - z0) / steps;
  const ExtReal half = h / 2;
  for (int i = 0; i < steps; ++i) {
    const ExtReal zm = z + half;
    const ExtReal zn = z0 + (z1 - z0) * (i + 1) / steps;
    const ExtReal k1 = f(z, x);
    const ExtReal k2 = f(zm, x + half * k1);
    const ExtReal k3 = f(zm, x + half * k2);
    const ExtReal k4 = f(zn, x + h * k3);
    x += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    z = zn;
    tr.z.push_back(z);
    tr.x.push_back(x);
  }
  return tr;
}

ExtReal chebyshev_limit(int n, int k, const ExtReal& z) {
  if (n < 1 || k < 1 || k > n) throw DomainError("chebyshev_limit: need 1 <= k <= n");
  if (2 * k == n + 1) return ExtReal(0);
  return z * cos(pi() * k / (n + 1));
}

ExtReal chebyshev_deviation(const ZeroSet& zs) {
  std::vector<ExtReal> limits;
  for (int k = 1; k <= zs.n; ++k) limits.push_back(chebyshev_limit(zs.n, k, zs.z));
  std::sort(limits.begin(), limits.end());
  ExtReal worst(0);
  for (std::size_t i = 0; i < limits.size(); ++i) worst = max(worst, abs(zs.x[i] - limits[i]));
  return worst;
}

}  // namespace tfreud
