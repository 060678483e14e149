#include "tfreud/identity_suite.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "tfreud/errors.hpp"
#include "tfreud/moments.hpp"
#include "tfreud/polyeval.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/zeros.hpp"

namespace tfreud {

int SampleStream::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double SampleStream::uniform(double lo, double hi) {
  const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

namespace {

struct Tally {
  IdentityCheck check;

  void record(const Residual& r, const std::string& where) {
    const ExtReal v = r.normalized();
    if (check.samples == 0 || v > check.worst) {
      check.worst = v;
      check.worst_at = where;
    }
    ++check.samples;
  }
};

std::string at(const ExtReal& z, int n) {
  return "z=" + z.to_string(6) + ", n=" + std::to_string(n);
}

std::string at(const ExtReal& z, int n, double x) {
  std::ostringstream os;
  os.precision(17);
  os << at(z, n) << ", x=" << x;
  return os.str();
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const SuiteConfig& cfg, const PrecisionContext& ctx) {
  if (cfg.nmax < 2) throw ConfigError("identity suite: nmax must be >= 2");
  if (cfg.samples_per_z < 1) throw ConfigError("identity suite: samples_per_z must be >= 1");

  PrecisionScope scope(ctx);
  std::vector<Tally> tallies;
  std::map<std::string, std::size_t> index;
  auto tally = [&](const std::string& name, bool as_printed = true,
                   bool known_misprint = false) -> Tally& {
    auto [it, inserted] = index.try_emplace(name, tallies.size());
    if (inserted) {
      Tally t;
      t.check.name = name;
      t.check.as_printed = as_printed;
      t.check.known_misprint = known_misprint;
      tallies.push_back(std::move(t));
    }
    return tallies[it->second];
  };

  // fixed registration order keeps the report layout independent of the data
  tally("laguerre_freud");
  tally("fifth_order");
  tally("moment_recurrence");
  tally("moment_exp_recurrence");
  tally("structure");
  tally("ladder_lower");
  tally("ladder_compat");
  tally("raising");
  tally("holonomic", true, true);
  tally("holonomic_corrected", false);
  tally("boundary_product");
  tally("boundary_square");
  tally("equilibrium", true, true);
  tally("equilibrium_corrected", false);

  SampleStream rng(cfg.seed);
  const int N = cfg.nmax;

  for (const auto& z : cfg.z_values) {
    const auto seq = gamma_from_moments(z, N + 4, ctx);
    const auto table = MomentTable::from_series(z, N + 4, ctx);
    const auto rec = check_moment_recurrence(table);
    const auto rec_exp = check_moment_exp_recurrence(table);
    const double zd = z.to_double();
    auto draw_x = [&] { return rng.uniform(-zd, zd); };

    for (int s = 0; s < cfg.samples_per_z; ++s) {
      int n = rng.integer(1, N);
      tally("laguerre_freud").record(laguerre_freud_residual(seq, n), at(z, n));
      n = rng.integer(0, N);
      tally("fifth_order").record(fifth_order_residual(seq, n), at(z, n));
      n = rng.integer(0, static_cast<int>(rec.size()) - 1);
      tally("moment_recurrence").record(rec[static_cast<std::size_t>(n)], at(z, n));
      n = rng.integer(0, static_cast<int>(rec_exp.size()) - 1);
      tally("moment_exp_recurrence").record(rec_exp[static_cast<std::size_t>(n)], at(z, n));

      n = rng.integer(0, N);
      double x = draw_x();
      tally("structure").record(check_structure(n, ExtReal(x), seq), at(z, n, x));

      n = rng.integer(1, N);
      x = draw_x();
      const auto lad = ladder_check(n, ExtReal(x), seq);
      tally("ladder_lower").record(lad.r_lower, at(z, n, x));
      tally("ladder_compat").record(lad.r_compat, at(z, n, x));

      n = rng.integer(1, N);
      x = draw_x();
      tally("raising").record(raising_check(n, ExtReal(x), seq), at(z, n, x));

      n = rng.integer(1, N);
      for (;;) {
        x = draw_x();
        try {
          const ExtReal xx(x);
          tally("holonomic").record(holonomic_residual(n, xx, seq, HolonomicForm::published),
                                    at(z, n, x));
          tally("holonomic_corrected")
              .record(holonomic_residual(n, xx, seq, HolonomicForm::corrected), at(z, n, x));
          break;
        } catch (const PoleError&) {
          // resample x away from a root of A_n
        }
      }

      n = rng.integer(1, N);
      const auto bnd = boundary_identities(n, seq);
      tally("boundary_product").record(bnd.r_prod, at(z, n));
      tally("boundary_square").record(bnd.r_square, at(z, n));

      n = rng.integer(1, N);
      const int k = rng.integer(1, n);
      const auto zs = zeros(n, seq);
      const auto eq_pub = equilibrium_residual(zs, seq, EquilibriumForm::published);
      const auto eq_cor = equilibrium_residual(zs, seq, EquilibriumForm::corrected);
      const std::string where = at(z, n) + ", k=" + std::to_string(k);
      tally("equilibrium").record(eq_pub[static_cast<std::size_t>(k - 1)], where);
      tally("equilibrium_corrected").record(eq_cor[static_cast<std::size_t>(k - 1)], where);
    }
  }

  std::vector<IdentityCheck> out;
  for (auto& t : tallies) {
    t.check.pass = t.check.samples > 0 && t.check.worst <= cfg.tolerance;
    out.push_back(std::move(t.check));
  }
  return out;
}

}  // namespace tfreud
