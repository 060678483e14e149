#include "tfreud/recurrence.hpp"

#include <utility>

#include "tfreud/errors.hpp"

namespace tfreud {

const char* to_string(GammaRoute route) noexcept {
  switch (route) {
    case GammaRoute::from_moments:
      return "moments";
    case GammaRoute::laguerre_freud:
      return "lf";
  }
  return "?";
}

GammaSequence::GammaSequence(ExtReal z, std::vector<ExtReal> gamma, std::vector<ExtReal> g,
                             std::vector<ExtReal> h, GammaRoute route, PrecisionContext ctx,
                             int requested, std::optional<Truncation> truncation)
    : z_(std::move(z)),
      gamma_(std::move(gamma)),
      g_(std::move(g)),
      h_(std::move(h)),
      route_(route),
      ctx_(std::move(ctx)),
      requested_(requested),
      truncation_(std::move(truncation)) {
  if (gamma_.empty() || h_.size() != gamma_.size() || g_.size() + 1 != gamma_.size())
    throw LengthError("GammaSequence: inconsistent lengths");
}

ExtReal GammaSequence::gamma(int n) const {
  if (n <= 0) {
    PrecisionScope scope(ctx_);
    return ExtReal(0);
  }
  require(n);
  return gamma_[static_cast<std::size_t>(n)];
}

const ExtReal& GammaSequence::g(int n) const {
  if (n < 0 || n >= static_cast<int>(g_.size())) {
    require(n + 1);
    throw LengthError("GammaSequence: g_" + std::to_string(n) + " not available");
  }
  return g_[static_cast<std::size_t>(n)];
}

const ExtReal& GammaSequence::h(int n) const {
  if (n < 0) throw LengthError("GammaSequence: negative index");
  require(n);
  return h_[static_cast<std::size_t>(n)];
}

void GammaSequence::require(int n) const {
  if (n <= max_index()) return;
  if (truncation_ && n >= truncation_->failing_index) {
    if (truncation_->kind == Truncation::Kind::instability)
      throw InstabilityError(truncation_->message, truncation_->failing_index);
    throw PositivityLossError(truncation_->message, truncation_->failing_index);
  }
  throw LengthError("GammaSequence: index " + std::to_string(n) + " beyond N = " +
                    std::to_string(max_index()));
}

GammaSequence GammaSequence::rounded(const PrecisionContext& ctx) const {
  PrecisionScope scope(ctx);
  auto round_all = [](const std::vector<ExtReal>& v) {
    std::vector<ExtReal> r;
    r.reserve(v.size());
    for (const auto& e : v) r.push_back(ExtReal(0) + e);
    return r;
  };
  return GammaSequence(ExtReal(0) + z_, round_all(gamma_), round_all(g_), round_all(h_), route_, ctx,
                       requested_, truncation_);
}

GammaInit gamma_init(const ExtReal& z, const PrecisionContext& ctx) {
  const auto u = MomentTable::from_series(z, 3, ctx);
  PrecisionScope scope(ctx);
  const ExtReal& u0 = u.even(0);
  const ExtReal& u2 = u.even(1);
  const ExtReal& u4 = u.even(2);
  return {u2 / u0, (u4 * u0 - square(u2)) / (u0 * u2)};
}

namespace {

void check_request(const ExtReal& z, int N, int min_n, const char* where) {
  if (!(z > 0)) throw DomainError(std::string(where) + ": z must be positive");
  if (N < min_n)
    throw DomainError(std::string(where) + ": N must be >= " + std::to_string(min_n));
}

// g_n = n/2 - 2γ_n(γ_{n+1} + γ_n + γ_{n-1}) for n = 0 .. gamma.size()-2.
std::vector<ExtReal> g_from_gamma(const std::vector<ExtReal>& gamma) {
  std::vector<ExtReal> g;
  g.reserve(gamma.size() - 1);
  g.emplace_back(0);
  for (std::size_t n = 1; n + 1 < gamma.size(); ++n)
    g.push_back(ExtReal::ratio(static_cast<long>(n), 2) -
                2 * gamma[n] * (gamma[n + 1] + gamma[n] + gamma[n - 1]));
  return g;
}

}  // namespace

GammaSequence gamma_laguerre_freud(const ExtReal& z_in, int N, const PrecisionContext& ctx,
                                   std::optional<ExtReal> divisor_floor) {
  check_request(z_in, N, 3, "gamma_laguerre_freud");
  const auto u = MomentTable::from_series(z_in, 3, ctx);
  PrecisionScope scope(ctx);
  const ExtReal z = ExtReal(0) + z_in;
  const ExtReal z2 = square(z);
  const ExtReal floor = divisor_floor ? *divisor_floor : ldexp(ExtReal(1), -ctx.mantissa_bits() / 2);

  const ExtReal& u0 = u.even(0);
  const ExtReal& u2 = u.even(1);
  const ExtReal& u4 = u.even(2);
  std::vector<ExtReal> gamma{ExtReal(0), u2 / u0, (u4 * u0 - square(u2)) / (u0 * u2)};
  std::vector<ExtReal> g{ExtReal(0), ExtReal::ratio(1, 2) - 2 * gamma[1] * (gamma[2] + gamma[1])};
  std::optional<Truncation> trunc;

  if (!(gamma[2] > 0))
    trunc = Truncation{Truncation::Kind::positivity_loss, 2, "gamma_2 is not positive"};

  for (int k = 1; !trunc && k <= N - 2; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const ExtReal divisor = gamma[ku] * (g[ku] + g[ku - 1]);
    if (abs(divisor) < floor) {
      trunc = Truncation{Truncation::Kind::instability, k + 2,
                         "Laguerre-Freud iteration: divisor gamma_k(g_k + g_{k-1}) below floor at k = " +
                             std::to_string(k)};
      break;
    }
    g.push_back(z2 * square(g[ku]) / divisor - g[ku]);
    ExtReal next = (ExtReal::ratio(k + 1, 2) - g[ku + 1]) / (2 * gamma[ku + 1]) - gamma[ku + 1] -
                   gamma[ku];
    if (!(next > 0)) {
      trunc = Truncation{Truncation::Kind::positivity_loss, k + 2,
                         "Laguerre-Freud iteration: gamma_" + std::to_string(k + 2) +
                             " is not positive (precision exhausted)"};
      g.pop_back();
      break;
    }
    gamma.push_back(std::move(next));
  }

  std::vector<ExtReal> h{u0};
  for (std::size_t n = 1; n < gamma.size(); ++n) h.push_back(gamma[n] * h[n - 1]);
  return GammaSequence(z, std::move(gamma), std::move(g), std::move(h), GammaRoute::laguerre_freud,
                       ctx, N, std::move(trunc));
}

GammaSequence gamma_from_moments(const ExtReal& z, int N, const PrecisionContext& ctx) {
  check_request(z, N, 1, "gamma_from_moments");
  return gamma_from_moments(MomentTable::from_series(z, N + 1, ctx), N);
}

GammaSequence gamma_from_moments(const MomentTable& u, int N) {
  check_request(u.z(), N, 1, "gamma_from_moments");
  if (u.size() < N + 1)
    throw LengthError("gamma_from_moments: moment table must reach u_{2N}");
  PrecisionScope scope(u.ctx());

  // Coefficients of P_{n-1}, P_n in ascending powers; only parity-matching entries are nonzero.
  std::vector<ExtReal> prev{ExtReal(1)};
  std::vector<ExtReal> cur{ExtReal(0), ExtReal(1)};
  std::vector<ExtReal> gamma{ExtReal(0)};
  std::vector<ExtReal> h{u.even(0)};
  std::optional<Truncation> trunc;

  for (int n = 1; n <= N; ++n) {
    // h_n = <u, x^n P_n> = Σ_i p_{n,i} u_{n+i}, n + i even
    ExtReal hn(0);
    for (int i = n % 2; i <= n; i += 2) hn += cur[static_cast<std::size_t>(i)] * u.even((n + i) / 2);
    if (!(hn > 0)) {
      trunc = Truncation{Truncation::Kind::positivity_loss, n,
                         "moment route: h_" + std::to_string(n) +
                             " is not positive (precision exhausted)"};
      break;
    }
    ExtReal gn = hn / h.back();
    std::vector<ExtReal> next(cur.size() + 1, ExtReal(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= gn * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
    gamma.push_back(std::move(gn));
    h.push_back(std::move(hn));
  }

  auto g = g_from_gamma(gamma);
  return GammaSequence(u.z(), std::move(gamma), std::move(g), std::move(h),
                       GammaRoute::from_moments, u.ctx(), N, std::move(trunc));
}

std::vector<std::vector<ExtReal>> monic_coefficients(const GammaSequence& seq, int N) {
  seq.require(N > 0 ? N - 1 : 0);
  PrecisionScope scope(seq.ctx());
  std::vector<std::vector<ExtReal>> p;
  p.push_back({ExtReal(1)});
  if (N >= 1) p.push_back({ExtReal(0), ExtReal(1)});
  for (int n = 1; n < N; ++n) {
    const ExtReal gn = seq.gamma(n);
    const auto& a = p[static_cast<std::size_t>(n)];
    const auto& b = p[static_cast<std::size_t>(n) - 1];
    std::vector<ExtReal> next(a.size() + 1, ExtReal(0));
    for (std::size_t i = 0; i < a.size(); ++i) next[i + 1] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) next[i] -= gn * b[i];
    p.push_back(std::move(next));
  }
  return p;
}

Residual laguerre_freud_residual(const GammaSequence& seq, int n) {
  if (n < 1) throw DomainError("laguerre_freud_residual: n must be >= 1");
  seq.require(n + 3);
  PrecisionScope scope(seq.ctx());
  auto G = [&](int k) { return seq.gamma(k); };
  const ExtReal z2 = square(seq.z());

  TermSum s;
  s.add(z2 / 4);
  s.sub(G(n) * G(n - 1) * (G(n - 2) + G(n - 1) + G(n) - z2));
  s.sub(G(n) * G(n) * (G(n + 1) + G(n) + G(n - 1) - z2));
  s.sub(G(n) * (ExtReal::ratio(1, 4) - ExtReal::ratio(n, 2)));
  s.add(G(n + 1) * G(n + 2) * (G(n + 3) + G(n + 2) + G(n + 1) - z2));
  s.add(G(n + 1) * G(n + 1) * (G(n + 2) + G(n + 1) + G(n) - z2));
  s.add(G(n + 1) * (-ExtReal::ratio(n, 2) - ExtReal::ratio(3, 4)));
  return s.result();
}

std::vector<Residual> check_laguerre_freud(const GammaSequence& seq) {
  std::vector<Residual> out;
  for (int n = 1; n + 3 <= seq.max_index(); ++n) out.push_back(laguerre_freud_residual(seq, n));
  return out;
}

Residual fifth_order_residual(const GammaSequence& seq, int n) {
  if (n < 0) throw DomainError("fifth_order_residual: n must be >= 0");
  seq.require(n + 2);
  PrecisionScope scope(seq.ctx());
  auto G = [&](int k) { return seq.gamma(k); };
  const ExtReal z2 = square(seq.z());

  const ExtReal a = 2 * G(n) * (G(n + 1) + G(n) + G(n - 1));
  const ExtReal b = 2 * G(n + 1) * (G(n + 2) + G(n + 1) + G(n));
  const ExtReal c = 2 * G(n - 1) * (G(n) + G(n - 1) + G(n - 2));
  const ExtReal half = ExtReal::ratio(1, 2);
  TermSum s;
  s.add(z2 * square(ExtReal::ratio(n, 2) - a));
  s.sub(G(n) * ((n + half) - a - b) * ((n - half) - a - c));
  return s.result();
}

std::vector<Residual> check_fifth_order(const GammaSequence& seq) {
  std::vector<Residual> out;
  for (int n = 0; n + 2 <= seq.max_index(); ++n) out.push_back(fifth_order_residual(seq, n));
  return out;
}

ExtReal gamma_asymptotic(int n, const ExtReal& z) {
  if (n < 1) throw DomainError("gamma_asymptotic: n must be >= 1");
  const ExtReal z2 = square(z);
  const ExtReal z4 = square(z2);
  const ExtReal z6 = z4 * z2;
  const ExtReal m(n);
  return z2 / 4 + z2 / 16 / square(m) + 3 * z6 / 32 / pow(m, 3L) +
         z2 * (4 - 8 * z4 + 27 * z6) / 256 / pow(m, 4L);
}

ExtReal g_asymptotic(int n, const ExtReal& z) {
  if (n < 1) throw DomainError("g_asymptotic: n must be >= 1");
  const ExtReal z4 = square(square(z));
  const ExtReal z8 = square(z4);
  const ExtReal m(n);
  return m / 2 - 3 * z4 / 8 - 3 * z4 / 16 / square(m) - 9 * z8 / 32 / pow(m, 3L) -
         3 * z4 * (22 + 27 * z8) / 256 / pow(m, 4L);
}

TodaResiduals toda_check(const ExtReal& z, int n, const ExtReal& step, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("toda_check: n must be >= 1");
  if (!(step > 0) || !(z - step > 0)) throw DomainError("toda_check: need 0 < step < z");
  PrecisionScope scope(ctx);

  const auto plus = gamma_from_moments(z + step, n + 2, ctx);
  const auto minus = gamma_from_moments(z - step, n + 2, ctx);
  const auto mid = gamma_from_moments(z, n + 2, ctx);
  auto G = [&](int k) { return mid.gamma(k); };

  const ExtReal fd_h = z * (log(plus.h(n)) - log(minus.h(n))) / (2 * step);
  const ExtReal fd_gamma = z * (log(plus.gamma(n)) - log(minus.gamma(n))) / (2 * step);

  const ExtReal a_n = G(n) * (G(n + 1) + G(n) + G(n - 1));
  const ExtReal a_next = G(n + 1) * (G(n + 2) + G(n + 1) + G(n));
  const ExtReal a_prev = G(n - 1) * (G(n) + G(n - 1) + G(n - 2));

  TodaResiduals out;
  out.r_h = fd_h - (2 * n + 1 - 4 * (a_n + a_next));
  out.r_gamma = fd_gamma - 4 * (a_prev - a_next + ExtReal::ratio(1, 2));
  out.cancellation_warning = ctx.epsilon() / step > pow(step, 2L);
  return out;
}

}  // namespace tfreud
