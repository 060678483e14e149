#include "tfreud/moments.hpp"

#include <string>
#include <utility>

#include "tfreud/errors.hpp"
#include "tfreud/specfun.hpp"

namespace tfreud {

namespace {

void require_positive_z(const ExtReal& z, const char* where) {
  if (!(z > 0)) throw DomainError(std::string(where) + ": z must be positive");
}

ExtReal even_moment(int m, const ExtReal& z4, const PrecisionContext& ctx) {
  return lower_incomplete_gamma(ExtReal::ratio(2 * m + 1, 4), z4, ctx) / 2;
}

}  // namespace

MomentTable MomentTable::from_series(const ExtReal& z, int count, const PrecisionContext& ctx) {
  require_positive_z(z, "MomentTable::from_series");
  if (count < 1) throw LengthError("MomentTable::from_series: count must be >= 1");
  PrecisionScope scope(ctx);
  const ExtReal zz = ExtReal(0) + z;
  const ExtReal z4 = square(square(zz));
  std::vector<ExtReal> u;
  u.reserve(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) u.push_back(even_moment(m, z4, ctx));
  return MomentTable(zz, std::move(u), MomentSource::series, ctx);
}

MomentTable::MomentTable(const ExtReal& z, std::vector<ExtReal> even_moments, MomentSource source,
                         const PrecisionContext& ctx)
    : z_(z), even_(std::move(even_moments)), source_(source), ctx_(ctx) {
  require_positive_z(z_, "MomentTable");
  for (std::size_t m = 0; m < even_.size(); ++m)
    if (!(even_[m] > 0))
      throw PositivityLossError("MomentTable: u_" + std::to_string(2 * m) + " is not positive",
                                static_cast<int>(2 * m));
}

const ExtReal& MomentTable::even(int m) const {
  if (m < 0 || m >= size())
    throw LengthError("MomentTable: u_" + std::to_string(2 * m) + " not in table");
  return even_[static_cast<std::size_t>(m)];
}

ExtReal MomentTable::operator[](int n) const {
  if (n % 2 != 0) {
    PrecisionScope scope(ctx_);
    return ExtReal(0);
  }
  return even(n / 2);
}

ExtReal moment(int n, const ExtReal& z, const PrecisionContext& ctx) {
  require_positive_z(z, "moment");
  if (n < 0) throw DomainError("moment: n must be non-negative");
  PrecisionScope scope(ctx);
  if (n % 2 != 0) return ExtReal(0);
  return even_moment(n / 2, square(square(z)), ctx);
}

std::vector<Residual> check_moment_recurrence(const MomentTable& t) {
  if (t.size() < 4) throw LengthError("check_moment_recurrence: need at least u_0..u_6");
  PrecisionScope scope(t.ctx());
  const ExtReal z2 = square(t.z());
  std::vector<Residual> out;
  for (int n = 0; n + 3 < t.size(); ++n) {
    TermSum s;
    s.add(4 * t.even(n + 3));
    s.sub(4 * z2 * t.even(n + 2));
    s.sub((2 * n + 3) * t.even(n + 1));
    s.add((2 * n + 1) * z2 * t.even(n));
    out.push_back(s.result());
  }
  return out;
}

std::vector<Residual> check_moment_exp_recurrence(const MomentTable& t) {
  if (t.size() < 3) throw LengthError("check_moment_exp_recurrence: need at least u_0..u_4");
  PrecisionScope scope(t.ctx());
  const ExtReal& z = t.z();
  const ExtReal damp = exp(-square(square(z)));
  std::vector<Residual> out;
  for (int n = 0; n + 2 < t.size(); ++n) {
    TermSum s;
    s.add(4 * t.even(n + 2));
    s.sub((2 * n + 1) * t.even(n));
    s.add(2 * pow(z, 2L * n + 1) * damp);
    out.push_back(s.result());
  }
  return out;
}

ExtReal moment_z_derivative(int n, const ExtReal& z, const PrecisionContext& ctx) {
  if (n < 0 || n % 2 != 0) throw DomainError("moment_z_derivative: n must be even and >= 0");
  require_positive_z(z, "moment_z_derivative");
  PrecisionScope scope(ctx);
  return 2 * pow(z, static_cast<long>(n)) * exp(-square(square(z)));
}

ExtReal moment_z_derivative_via_moments(int n, const ExtReal& z, const PrecisionContext& ctx) {
  if (n < 0 || n % 2 != 0)
    throw DomainError("moment_z_derivative_via_moments: n must be even and >= 0");
  require_positive_z(z, "moment_z_derivative_via_moments");
  PrecisionScope scope(ctx);
  return ((n + 1) * moment(n, z, ctx) - 4 * moment(n + 4, z, ctx)) / z;
}

MomentRatioExpansion freud_moment_ratio(int n, const ExtReal& z, int max_order,
                                        const PrecisionContext& ctx) {
  require_positive_z(z, "freud_moment_ratio");
  if (n < 0 || max_order < 0) throw DomainError("freud_moment_ratio: n and K must be >= 0");
  PrecisionScope scope(ctx);

  const ExtReal a = ExtReal::ratio(2 * n + 1, 4);
  auto term = [&](int k) {
    ExtReal g;
    mpfr_gamma(g.get(), (a - k).get(), MPFR_RNDN);  // finite: a - k is never an integer
    return pow(z, 2L * (n - 2 * k) - 3) / g;
  };

  MomentRatioExpansion out;
  ExtReal sum(0);
  ExtReal previous;
  int k = 0;
  for (; k <= max_order; ++k) {
    if (!(a - k > 0)) {
      out.stopped_early = true;
      break;
    }
    ExtReal t = term(k);
    if (k > 0 && abs(t) > abs(previous)) {
      out.stopped_early = true;
      break;
    }
    sum += t;
    previous = t;
  }
  const ExtReal damp = exp(-square(square(z)));
  out.terms_used = k;
  out.value = 1 - damp * sum;
  out.first_omitted = abs(damp * term(k));
  return out;
}

StieltjesTruncation make_stieltjes_truncation(const ExtReal& z, int terms,
                                              const PrecisionContext& ctx) {
  if (terms < 3) throw LengthError("make_stieltjes_truncation: need at least 3 terms");
  return {z, terms, MomentTable::from_series(z, terms + 1, ctx)};
}

namespace {
void require_series_regime(const ExtReal& t, const ExtReal& z, const char* where) {
  if (!(abs(t) >= 2 * z))
    throw DomainError(std::string(where) + ": |t| must be >= 2z for the Stieltjes series");
}
}  // namespace

ExtReal stieltjes_value(const ExtReal& t, const StieltjesTruncation& trunc) {
  require_series_regime(t, trunc.z, "stieltjes_value");
  PrecisionScope scope(trunc.moments.ctx());
  const ExtReal inv_t2 = 1 / square(t);
  ExtReal power = 1 / t;
  ExtReal s(0);
  for (int n = 0; n < trunc.terms; ++n) {
    s += trunc.moments.even(n) * power;
    power *= inv_t2;
  }
  return s;
}

StieltjesResiduals stieltjes_ode_residuals(const ExtReal& t, const ExtReal& z, int terms,
                                           const PrecisionContext& ctx) {
  if (z < 0) throw DomainError("stieltjes_ode_residuals: z must be >= 0");
  require_series_regime(t, z, "stieltjes_ode_residuals");
  PrecisionScope scope(ctx);

  StieltjesResiduals out;
  if (z.is_zero()) {
    out.r_t = out.r_t_corrected = out.r_z = Residual{ExtReal(0), ExtReal(0)};
    out.tail_bound_t = out.tail_bound_z = ExtReal(0);
    return out;
  }

  const auto trunc = make_stieltjes_truncation(z, terms, ctx);
  const MomentTable& u = trunc.moments;
  const ExtReal t2 = square(t);
  const ExtReal z2 = square(z);
  const ExtReal damp = exp(-square(z2));
  const ExtReal phi = t2 - z2;
  const ExtReal phi_prime_plus_psi = 4 * t2 * t * phi;  // 2t + 4t³(t²-z²) - 2t

  ExtReal s(0), ds_dt(0), ds_dz(0);
  ExtReal power = 1 / t;  // t^{-(2n+1)}
  ExtReal zpow(1);        // z^{2n}
  for (int n = 0; n < terms; ++n) {
    s += u.even(n) * power;
    ds_dt -= (2 * n + 1) * u.even(n) * power / t;
    ds_dz += 2 * zpow * damp * power;
    power /= t2;
    zpow *= z2;
  }

  const ExtReal lhs_a = phi * ds_dt;
  const ExtReal lhs_b = phi_prime_plus_psi * s;
  const ExtReal rhs_published = u.even(0) * (4 * square(t2) - 1) + 4 * (u.even(1) * t2 + u.even(2));
  const ExtReal rhs_boundary = -4 * z2 * (u.even(0) * t2 + u.even(1));

  out.r_t = TermSum().add(lhs_a).add(lhs_b).sub(rhs_published).result();
  out.r_t_corrected =
      TermSum().add(lhs_a).add(lhs_b).sub(rhs_published).sub(rhs_boundary).result();
  out.r_z = TermSum().add(phi * ds_dz).sub(2 * t * damp).result();

  // first omitted terms (power now holds t^{-(2N+1)}), geometric ratio q = z²/t² <= 1/4
  const ExtReal q = z2 / t2;
  const ExtReal geometric = 1 / (1 - q * (2 * terms + 3) / (2 * terms + 1));
  const ExtReal s_next = u.even(terms) * abs(power);
  const ExtReal ds_dt_next = (2 * terms + 1) * s_next / abs(t);
  out.tail_bound_t = (abs(phi_prime_plus_psi) * s_next + abs(phi) * ds_dt_next) * geometric;
  out.tail_bound_z = abs(phi) * 2 * zpow * damp * abs(power) / (1 - q);
  return out;
}

}  // namespace tfreud
