#include <doctest.h>

#include <cmath>

#include "support/check.hpp"
#include "tfreud/errors.hpp"
#include "tfreud/moments.hpp"
#include "tfreud/recurrence.hpp"

using namespace tfreud;
using testing::R;

namespace {

const PrecisionContext ctx(256);

double slope(double n1, double e1, double n2, double e2) {
  return std::log(e2 / e1) / std::log(n2 / n1);
}

}  // namespace

TEST_CASE("initial values") {
  PrecisionScope s(ctx);
  for (const char* zs : {"0.1", "1", "3"}) CHECK(gamma_init(R(zs), ctx).gamma1 > 0);
  const auto init = gamma_init(1, ctx);
  const auto seq = gamma_from_moments(1, 5, ctx);
  CHECK_REL(init.gamma1, seq.gamma(1), R("1e-70"));
  CHECK_REL(init.gamma2, seq.gamma(2), R("1e-30"));
  CHECK_THROWS_AS(gamma_init(0, ctx), DomainError);
}

TEST_CASE("moment route matches frozen Gram values at z = 1") {
  PrecisionScope s(ctx);
  const auto seq = gamma_from_moments(1, 22, ctx);
  CHECK(seq.gamma(0) == 0);
  CHECK_REL(seq.gamma(1), R("0.2683305114520657126797357121897947212102"), R("1e-38"));
  CHECK_REL(seq.gamma(2), R("0.2576593737045278730055047543915697543161"), R("1e-38"));
  CHECK_REL(seq.gamma(5), R("0.2539290058388353653389466843346690958746"), R("1e-38"));
  CHECK_REL(seq.gamma(10), R("0.250739642200554803114384191830037948432"), R("1e-38"));
  CHECK_REL(seq.gamma(15), R("0.2503089137614906146444233935285129535895"), R("1e-38"));
  CHECK_REL(seq.gamma(20), R("0.2501689392082329232450334077043025179141"), R("1e-38"));
}

TEST_CASE("sequence invariants") {
  PrecisionScope s(ctx);
  for (const char* zs : {"0.2", "0.5", "1", "2.5"}) {
    const ExtReal z = R(zs);
    CAPTURE(zs);
    const auto seq = gamma_from_moments(z, 25, ctx);
    CHECK(seq.h(0) == moment(0, z, ctx));
    for (int n = 1; n <= 25; ++n) {
      CHECK(seq.gamma(n) > 0);
      CHECK_REL(seq.h(n), seq.gamma(n) * seq.h(n - 1), R("1e-70"));
    }
    for (int n = 0; n < 25; ++n) {
      const ExtReal g = ExtReal::ratio(n, 2) -
                        2 * seq.gamma(n) * (seq.gamma(n + 1) + seq.gamma(n) + seq.gamma(n - 1));
      CHECK_ABS(seq.g(n), g, R("1e-60"));
    }
  }
}

TEST_CASE("g_1 from the first two coefficients") {
  PrecisionScope s(ctx);
  const auto seq = gamma_laguerre_freud(1, 10, ctx);
  const ExtReal g1 = ExtReal::ratio(1, 2) - 2 * seq.gamma(1) * (seq.gamma(2) + seq.gamma(1));
  CHECK_REL(seq.g(1), g1, R("1e-70"));
}

TEST_CASE("Laguerre-Freud route agrees with the moment route") {
  PrecisionScope s(ctx);
  for (const char* zs : {"0.2", "0.5", "1", "1.5", "2.5"}) {
    const ExtReal z = R(zs);
    CAPTURE(zs);
    const auto mom = gamma_from_moments(z, 20, ctx);
    const auto lf = gamma_laguerre_freud(z, 20, ctx);
    CHECK_FALSE(lf.truncation().has_value());
    for (int n = 1; n <= 20; ++n) CHECK_REL(lf.gamma(n), mom.gamma(n), R("1e-25"));
  }
}

TEST_CASE("Laguerre-Freud truncates at low precision") {
  const PrecisionContext low(64);
  PrecisionScope s(low);
  const auto lf = gamma_laguerre_freud(1, 60, low);
  REQUIRE(lf.truncation().has_value());
  const int k = lf.truncation()->failing_index;
  CHECK(k > 3);
  CHECK(k <= 60);
  CHECK(lf.max_index() < 60);
  CHECK(lf.requested() == 60);
  CHECK(lf.gamma(lf.max_index()) > 0);
  CHECK_THROWS_AS(lf.require(60), PrecisionExhaustedError);
  // more bits push the failure further out
  const PrecisionContext mid(128);
  PrecisionScope s2(mid);
  const auto lf2 = gamma_laguerre_freud(1, 60, mid);
  REQUIRE(lf2.truncation().has_value());
  CHECK(lf2.truncation()->failing_index > k);
}

TEST_CASE("requests beyond the sequence") {
  PrecisionScope s(ctx);
  const auto seq = gamma_from_moments(1, 5, ctx);
  CHECK_THROWS_AS(seq.require(6), LengthError);
  CHECK_THROWS_AS((void)seq.gamma(6), LengthError);
  CHECK_THROWS_AS(gamma_laguerre_freud(1, 2, ctx), DomainError);
}

TEST_CASE("fourth- and fifth-order equations") {
  PrecisionScope s(ctx);
  for (const char* zs : {"0.2", "1", "2.5"}) {
    CAPTURE(zs);
    const auto seq = gamma_from_moments(R(zs), 19, ctx);
    const auto lf = check_laguerre_freud(seq);
    CHECK(lf.size() == 16);
    for (const auto& r : lf) CHECK(r.within(ctx.tol_identity()));
    const auto f5 = check_fifth_order(seq);
    CHECK(f5.size() == 18);
    for (const auto& r : f5) CHECK(r.within(ctx.tol_identity()));
  }
  // a perturbed coefficient breaks both
  auto gam = gamma_from_moments(1, 12, ctx).gammas();
  gam[5] += R("1e-12");
  std::vector<ExtReal> g(gam.size() - 1), h(gam.size(), ExtReal(1));
  for (int n = 0; n + 1 < static_cast<int>(gam.size()); ++n)
    g[n] = ExtReal::ratio(n, 2) - 2 * gam[n] * (gam[n + 1] + gam[n] + (n ? gam[n - 1] : ExtReal(0)));
  const GammaSequence bad(1, gam, g, h, GammaRoute::from_moments, ctx, 12, std::nullopt);
  CHECK_FALSE(laguerre_freud_residual(bad, 4).within(ctx.tol_identity()));
  CHECK_FALSE(fifth_order_residual(bad, 5).within(ctx.tol_identity()));
}

TEST_CASE("large z approaches the untruncated Freud string equation") {
  PrecisionScope s(ctx);
  const auto seq = gamma_from_moments(4, 10, ctx);
  for (int n = 1; n <= 8; ++n) {
    const ExtReal r = 4 * seq.gamma(n) * (seq.gamma(n + 1) + seq.gamma(n) + seq.gamma(n - 1)) - n;
    CAPTURE(n);
    CHECK(abs(r) < 1e-8);
  }
}

TEST_CASE("asymptotic expansions") {
  PrecisionScope s(ctx);
  CHECK(gamma_asymptotic(10, 0) == 0);
  const PrecisionContext hi(4000);
  PrecisionScope s2(hi);
  const auto lf = gamma_laguerre_freud(1, 202, hi);
  REQUIRE_FALSE(lf.truncation().has_value());
  double eg[3], eq[3];
  const int ns[3] = {50, 100, 200};
  for (int i = 0; i < 3; ++i) {
    eg[i] = std::abs((lf.g(ns[i]) - g_asymptotic(ns[i], 1)).to_double());
    eq[i] = std::abs((lf.gamma(ns[i]) - gamma_asymptotic(ns[i], 1)).to_double());
  }
  // g: faster than n^-4
  CHECK(slope(50, eg[0], 100, eg[1]) < -4.5);
  CHECK(slope(100, eg[1], 200, eg[2]) < -4.5);
  // gamma with the published n^-4 coefficient: decays, but only like n^-4
  CHECK(slope(50, eq[0], 200, eq[2]) < -3.8);
  CHECK(slope(50, eq[0], 200, eq[2]) > -4.5);
}

TEST_CASE("Toda-type equations") {
  PrecisionScope s(ctx);
  const auto a = toda_check(1, 3, R("1e-6"), ctx);
  const auto b = toda_check(1, 3, R("5e-7"), ctx);
  CHECK(abs(a.r_h) < R("1e-10"));
  CHECK(abs(a.r_gamma) < R("1e-10"));
  const double ratio = (abs(a.r_h) / abs(b.r_h)).to_double();
  CHECK(ratio == doctest::Approx(4).epsilon(0.05));
  CHECK_FALSE(a.cancellation_warning);
  const auto c = toda_check(R("0.5"), 1, R("1e-6"), ctx);
  CHECK(abs(c.r_h) < R("1e-10"));
  CHECK(abs(c.r_gamma) < R("1e-10"));
  CHECK(toda_check(1, 3, R("1e-40"), ctx).cancellation_warning);
  CHECK_THROWS_AS(toda_check(1, 0, R("1e-6"), ctx), DomainError);
}

TEST_CASE("rounding a sequence to fewer bits") {
  const PrecisionContext hi(512);
  PrecisionScope s(hi);
  const auto seq = gamma_from_moments(1, 8, hi);
  const auto low = seq.rounded(ctx);
  PrecisionScope s2(ctx);
  CHECK(low.gamma(3).precision() == 256);
  CHECK_REL(low.gamma(3), seq.gamma(3), R("1e-75"));
}
