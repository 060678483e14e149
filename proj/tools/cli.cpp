#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tfreud/errors.hpp"
#include "tfreud/identity_suite.hpp"
#include "tfreud/moments.hpp"
#include "tfreud/polyeval.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/tables.hpp"
#include "tfreud/zeros.hpp"

#ifndef TFREUD_VERSION
#define TFREUD_VERSION "0.0.0"
#endif

namespace tfreud::cli {

namespace {

enum class Format { json, csv, gnuplot };

struct RawOptions {
  std::string z;
  std::string z_grid;
  int nmax = 10;
  int prec = PrecisionContext::kDefaultBits;
  std::string format;
  std::string out;
  std::uint64_t seed = 7;
  std::string tol_identity;

  std::string route = "moments";
  int which = 0;
  int degree = 0;
  int k = 0;
  std::string z0 = "0.2";
  std::string z1 = "1.5";
  int steps = 2048;
  int samples = 50;
};

struct RunConfig {
  std::vector<std::string> z_labels;
  std::vector<ExtReal> z;
  bool z_given = false;
  int nmax = 10;
  PrecisionContext ctx;
  ExtReal tol_identity;
  int digits = 25;
  Format format = Format::csv;
  std::uint64_t seed = 7;
};

// ---------------------------------------------------------------- reports

struct Cell {
  enum class Kind { integer, real, text };
  std::string text;
  Kind kind = Kind::text;
};

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Cell integer(long v) { return {std::to_string(v), Cell::Kind::integer}; }
Cell text(std::string s) { return {std::move(s), Cell::Kind::text}; }

class Formatter {
 public:
  explicit Formatter(int digits) : digits_(digits) {}
  Cell operator()(const ExtReal& v) const { return {v.to_string(digits_), Cell::Kind::real}; }
  Cell short_real(const ExtReal& v) const { return {v.to_string(3), Cell::Kind::real}; }

 private:
  int digits_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string gnuplot_field(const std::string& s) {
  if (s.find_first_of(" \t\"") == std::string::npos && !s.empty()) return s;
  return "\"" + s + "\"";
}

void write_report(const Report& r, const RunConfig& cfg, std::ostream& os) {
  switch (cfg.format) {
    case Format::csv: {
      for (std::size_t i = 0; i < r.columns.size(); ++i)
        os << (i ? "," : "") << csv_field(r.columns[i]);
      os << "\r\n";
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i].text);
        os << "\r\n";
      }
      break;
    }
    case Format::gnuplot: {
      os << "#";
      for (const auto& c : r.columns) os << ' ' << c;
      os << '\n';
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << gnuplot_field(row[i].text);
        os << '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::ordered_json doc;
      auto& meta = doc["meta"];
      if (cfg.z_labels.size() == 1)
        meta["z"] = cfg.z_labels.front();
      else
        meta["z"] = cfg.z_labels;
      meta["nmax"] = cfg.nmax;
      meta["precision_bits"] = cfg.ctx.mantissa_bits();
      meta["version"] = TFREUD_VERSION;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : r.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (row[i].kind == Cell::Kind::integer)
            obj[r.columns[i]] = std::stol(row[i].text);
          else
            obj[r.columns[i]] = row[i].text;
        }
        doc["rows"].push_back(std::move(obj));
      }
      os << doc.dump(2) << '\n';
      break;
    }
  }
}

// ---------------------------------------------------------------- config

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "gnuplot") return Format::gnuplot;
  throw ConfigError("--format must be json, csv or gnuplot");
}

ExtReal parse_real(const std::string& s, const char* what) {
  try {
    return ExtReal(std::string_view(s));
  } catch (const std::invalid_argument&) {
    throw ConfigError(std::string(what) + ": not a number: '" + s + "'");
  }
}

RunConfig validate(const RawOptions& raw, Format default_format) {
  if (raw.prec < PrecisionContext::kMinBits || raw.prec > 1 << 16)
    throw ConfigError("--prec must be between 64 and 65536 bits");
  RunConfig cfg;
  cfg.ctx = PrecisionContext(raw.prec);
  PrecisionScope scope(cfg.ctx);

  if (!raw.z.empty() && !raw.z_grid.empty()) throw ConfigError("give either --z or --z-grid");
  if (!raw.z_grid.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(raw.z_grid);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw ConfigError("--z-grid must be a:b:n");
    const ExtReal a = parse_real(parts[0], "--z-grid");
    const ExtReal b = parse_real(parts[1], "--z-grid");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError("--z-grid: point count must be an integer");
    }
    if (n < 1 || n > 10000) throw ConfigError("--z-grid: point count must be in 1..10000");
    if (!(a > 0)) throw ConfigError("--z-grid: z must be positive");
    if (b < a) throw ConfigError("--z-grid: need a <= b");
    for (int i = 0; i < n; ++i) {
      ExtReal z = n == 1 ? a : a + (b - a) * i / (n - 1);
      cfg.z_labels.push_back(z.to_string(17));
      cfg.z.push_back(std::move(z));
    }
    cfg.z_given = true;
  } else if (!raw.z.empty()) {
    ExtReal z = parse_real(raw.z, "--z");
    if (!(z > 0)) throw ConfigError("--z: z must be positive");
    cfg.z_labels.push_back(raw.z);
    cfg.z.push_back(std::move(z));
    cfg.z_given = true;
  } else {
    cfg.z_labels.push_back("1");
    cfg.z.emplace_back(1);
  }

  if (raw.nmax < 1 || raw.nmax > 400) throw ConfigError("--nmax must be in 1..400");
  cfg.nmax = raw.nmax;
  cfg.seed = raw.seed;
  cfg.format = raw.format.empty() ? default_format : parse_format(raw.format);

  cfg.tol_identity = cfg.ctx.tol_identity();
  if (!raw.tol_identity.empty()) {
    cfg.tol_identity = parse_real(raw.tol_identity, "--tol-identity");
    if (!(cfg.tol_identity > 0)) throw ConfigError("--tol-identity must be positive");
  }
  // significant digits the identity tolerance justifies, capped at 30
  const double d = std::floor(-std::log10(std::max(cfg.tol_identity.to_double(), 1e-300)));
  cfg.digits = static_cast<int>(std::clamp(d, 6.0, 30.0));
  return cfg;
}

// ---------------------------------------------------------------- commands

int cmd_moments(const RunConfig& cfg, std::ostream& os) {
  PrecisionScope scope(cfg.ctx);
  const Formatter f(cfg.digits);
  Report r{{"z", "n", "u_2n", "recurrence_residual"}, {}};
  for (std::size_t i = 0; i < cfg.z.size(); ++i) {
    const auto table = MomentTable::from_series(cfg.z[i], cfg.nmax + 4, cfg.ctx);
    const auto res = check_moment_recurrence(table);
    for (int n = 0; n <= cfg.nmax; ++n)
      r.rows.push_back({text(cfg.z_labels[i]), integer(n), f(table.even(n)),
                        f.short_real(res[static_cast<std::size_t>(n)].normalized())});
  }
  write_report(r, cfg, os);
  return kSuccess;
}

int cmd_gamma(const RunConfig& cfg, const std::string& route, std::ostream& os, std::ostream& err) {
  if (route != "moments" && route != "lf" && route != "both")
    throw ConfigError("--route must be moments, lf or both");
  PrecisionScope scope(cfg.ctx);
  const Formatter f(cfg.digits);
  const bool both = route == "both";
  Report r{{"z", "n", "gamma", "g", "h"}, {}};
  if (both) {
    r.columns.push_back("gamma_lf");
    r.columns.push_back("rel_delta");
  }

  int status = kSuccess;
  const int N = std::max(cfg.nmax + 1, 3);
  for (std::size_t i = 0; i < cfg.z.size(); ++i) {
    std::optional<GammaSequence> mom, lf;
    if (route != "lf") mom = gamma_from_moments(cfg.z[i], N, cfg.ctx);
    if (route != "moments") lf = gamma_laguerre_freud(cfg.z[i], N, cfg.ctx);
    const GammaSequence& primary = mom ? *mom : *lf;

    int last = std::min(cfg.nmax, primary.max_index() - 1);
    if (both) last = std::min(last, lf->max_index() - 1);
    for (int n = 0; n <= last; ++n) {
      std::vector<Cell> row{text(cfg.z_labels[i]), integer(n), f(primary.gamma(n)), f(primary.g(n)),
                            f(primary.h(n))};
      if (both) {
        row.push_back(f(lf->gamma(n)));
        const ExtReal delta = n == 0 ? ExtReal(0) : abs(lf->gamma(n) - mom->gamma(n)) / mom->gamma(n);
        row.push_back(f.short_real(delta));
      }
      r.rows.push_back(std::move(row));
    }
    for (const auto* s : {mom ? &*mom : nullptr, lf ? &*lf : nullptr}) {
      if (s == nullptr || !s->truncation() || s->truncation()->failing_index > cfg.nmax + 1) continue;
      const auto& t = *s->truncation();
      err << "z=" << cfg.z_labels[i] << ": "
          << (t.kind == Truncation::Kind::instability ? "instability" : "positivity loss")
          << " at index " << t.failing_index << " (" << to_string(s->route()) << " route): " << t.message
          << '\n';
      status = kNumericalError;
    }
  }
  write_report(r, cfg, os);
  return status;
}

int cmd_zeros(const RunConfig& cfg, int degree, std::ostream& os) {
  const int n = degree > 0 ? degree : cfg.nmax;
  PrecisionScope scope(cfg.ctx);
  const Formatter f(cfg.digits);
  Report r{{"z", "n", "k", "x"}, {}};
  for (std::size_t i = 0; i < cfg.z.size(); ++i) {
    const auto zs = zeros(n, gamma_from_moments(cfg.z[i], n + 2, cfg.ctx));
    for (int k = 1; k <= n; ++k)
      r.rows.push_back(
          {text(cfg.z_labels[i]), integer(n), integer(k), f(zs.x[static_cast<std::size_t>(k - 1)])});
  }
  write_report(r, cfg, os);
  return kSuccess;
}

int cmd_table(const RunConfig& cfg, int which, std::ostream& os) {
  if (which < 1 || which > 3) throw ConfigError("--which must be 1, 2 or 3");
  PrecisionScope scope(cfg.ctx);
  const Formatter f(10);
  Report r;
  if (which == 3) {
    const ExtReal tol("5e-4");
    r.columns = {"n", "eta", "zeta", "published_eta", "published_zeta", "abs_diff_eta",
                 "abs_diff_zeta", "status"};
    const auto published = published_charges_z1();
    const auto rows = compute_charge_table(cfg.ctx);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const ExtReal de = abs(row.eta - row.published_eta);
      const ExtReal dz = abs(row.zeta - row.published_zeta);
      const bool ok = de <= tol && dz <= tol;
      const char* status = ok ? "OK" : (row.n <= kChargeTablePinnedMaxN ? "MISMATCH" : "DISCREPANT");
      r.rows.push_back({integer(row.n), f(row.eta), f(row.zeta), text(published[i].eta),
                        text(published[i].zeta), f.short_real(de), f.short_real(dz), text(status)});
    }
  } else {
    const int degree = which == 1 ? 5 : 6;
    const ExtReal tol(which == 1 ? "2e-6" : "5e-7");
    const ExtReal tol_inf("1e-4");
    const auto published = degree == 5 ? published_zeros_p5() : published_zeros_p6();
    r.columns = {"z", "z_used", "x_second", "x_largest", "published_second", "published_largest",
                 "abs_diff_second", "abs_diff_largest", "status"};
    const auto rows = compute_zero_table(degree, cfg.ctx);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      const ExtReal d1 = abs(row.second_largest - row.published_second_largest);
      const ExtReal d2 = abs(row.largest - row.published_largest);
      const ExtReal& t = row.infinity_proxy ? tol_inf : tol;
      r.rows.push_back({text(row.z_label), text(row.infinity_proxy ? kInfinityProxy : row.z_label),
                        f(row.second_largest), f(row.largest), text(published[i].second_largest),
                        text(published[i].largest), f.short_real(d1), f.short_real(d2),
                        text(d1 <= t && d2 <= t ? "OK" : "MISMATCH")});
    }
  }
  write_report(r, cfg, os);
  return kSuccess;
}

int cmd_dynamics(const RunConfig& cfg, const RawOptions& raw, std::ostream& os) {
  PrecisionScope scope(cfg.ctx);
  const int n = raw.degree > 0 ? raw.degree : 5;
  const int k = raw.k > 0 ? raw.k : n;
  if (k > n) throw ConfigError("--k must be in 1..n");
  if (raw.steps < 1 || raw.steps > 1000000) throw ConfigError("--steps must be in 1..1000000");
  const ExtReal z0 = parse_real(raw.z0, "--z0");
  const ExtReal z1 = parse_real(raw.z1, "--z1");
  if (!(z0 > 0) || !(z1 > z0)) throw ConfigError("need 0 < --z0 < --z1");

  const auto tr = zero_dynamics_trace(n, k, z0, z1, raw.steps, moment_route_provider(n, cfg.ctx),
                                      cfg.ctx);
  const Formatter f(cfg.digits);
  Report r{{"z", "x"}, {}};
  for (std::size_t i = 0; i < tr.z.size(); ++i) r.rows.push_back({f(tr.z[i]), f(tr.x[i])});
  write_report(r, cfg, os);
  return kSuccess;
}

struct VerifyLine {
  std::string check;
  std::string form;
  int samples = 0;
  ExtReal worst;
  ExtReal tolerance;
  std::string status;
  std::string detail;
};

int cmd_verify(const RunConfig& cfg_in, int samples, std::ostream& os) {
  RunConfig cfg = cfg_in;
  PrecisionScope scope(cfg.ctx);
  if (!cfg.z_given) {
    cfg.z_labels = {"0.5", "1", "2"};
    cfg.z = {ExtReal("0.5"), ExtReal(1), ExtReal(2)};
  }
  if (cfg.nmax < 2) throw ConfigError("verify: --nmax must be >= 2");
  if (samples < 1) throw ConfigError("--samples must be >= 1");
  const ExtReal& tol = cfg.tol_identity;
  std::vector<VerifyLine> lines;

  SuiteConfig sc{cfg.z, cfg.nmax, cfg.seed, samples, tol};
  for (auto& c : run_identity_suite(sc, cfg.ctx)) {
    VerifyLine l{c.name, c.as_printed ? "printed" : "corrected", c.samples, c.worst, tol, "", c.worst_at};
    l.status = c.pass ? "PASS" : (c.known_misprint ? "NOTE" : "FAIL");
    if (c.known_misprint) l.detail = "printed form does not hold; see the corrected row";
    lines.push_back(std::move(l));
  }

  auto add = [&](std::string name, std::string form, int count, ExtReal worst, ExtReal limit,
                 bool pass, std::string detail, bool note = false) {
    lines.push_back({std::move(name), std::move(form), count, std::move(worst), std::move(limit),
                     pass ? "PASS" : (note ? "NOTE" : "FAIL"), std::move(detail)});
  };

  for (std::size_t i = 0; i < cfg.z.size(); ++i) {
    const ExtReal& z = cfg.z[i];
    const std::string zl = "z=" + cfg.z_labels[i];

    // cross-route agreement
    const int nc = std::min(cfg.nmax, 20);
    const auto mom = gamma_from_moments(z, std::max(nc, 3), cfg.ctx);
    const auto lf = gamma_laguerre_freud(z, std::max(nc, 3), cfg.ctx);
    ExtReal cross(0);
    for (int n = 1; n <= nc; ++n)
      cross = max(cross, abs(lf.gamma(n) - mom.gamma(n)) / mom.gamma(n));
    add("cross_route_gamma", "printed", nc, cross, tol, cross <= tol, zl);

    // moment flow
    ExtReal flow(0), flow2(0);
    for (int m = 0; m <= cfg.nmax; ++m) {
      const ExtReal a = moment_z_derivative(2 * m, z, cfg.ctx);
      const ExtReal b = moment_z_derivative_via_moments(2 * m, z, cfg.ctx);
      flow = max(flow, abs(a - b) / abs(a));
      const ExtReal c = moment_z_derivative_via_moments(2 * m + 2, z, cfg.ctx);
      flow2 = max(flow2, abs(c - square(z) * b) / abs(c));
    }
    add("moment_z_derivative", "printed", cfg.nmax + 1, flow, tol, flow <= tol, zl);
    add("moment_z_derivative_ratio", "printed", cfg.nmax + 1, flow2, tol, flow2 <= tol, zl);

    // Toda-type flow: second-order differences, ratio under step halving
    const ExtReal step("1e-6");
    ExtReal worst_ratio(1000);
    const int nt = std::min(cfg.nmax, 8);
    if (z > 2 * step) {
      for (int n = 1; n <= nt; ++n) {
        const auto a = toda_check(z, n, step, cfg.ctx);
        const auto b = toda_check(z, n, step / 2, cfg.ctx);
        worst_ratio = min(worst_ratio, abs(a.r_h) / abs(b.r_h));
        worst_ratio = min(worst_ratio, abs(a.r_gamma) / abs(b.r_gamma));
      }
      add("toda_halving_ratio", "printed", 2 * nt, worst_ratio, ExtReal("3.5"), worst_ratio >= 3.5,
          zl + " (worst is the smallest ratio; must be >= tolerance)");
    }

    // Stieltjes function
    const ExtReal t = max(ExtReal(3), 2 * z);
    const auto st = stieltjes_ode_residuals(t, z, 60, cfg.ctx);
    const ExtReal lim_t = 100 * st.tail_bound_t + tol * st.r_t_corrected.scale;
    const ExtReal lim_z = 100 * st.tail_bound_z + tol * st.r_z.scale;
    add("stieltjes_t", "printed", 1, abs(st.r_t.value), lim_t, abs(st.r_t.value) <= lim_t,
        zl + ", t=" + t.to_string(6) + "; printed right side omits -4z^2(u_0t^2+u_2)", true);
    add("stieltjes_t_corrected", "corrected", 1, abs(st.r_t_corrected.value), lim_t,
        abs(st.r_t_corrected.value) <= lim_t, zl + ", t=" + t.to_string(6));
    add("stieltjes_z", "printed", 1, abs(st.r_z.value), lim_z, abs(st.r_z.value) <= lim_z,
        zl + ", t=" + t.to_string(6));

    // zeros: inside (-z, z), interlacing, Newton consistency
    const auto seq = gamma_from_moments(z, cfg.nmax + 3, cfg.ctx);
    bool inside = true, interlace = true;
    ExtReal shift(0);
    std::optional<ZeroSet> prev;
    for (int n = 1; n <= cfg.nmax; ++n) {
      auto zs = zeros(n, seq);
      shift = max(shift, zs.max_newton_shift);
      inside = inside && zs.x.front() > -z && zs.x.back() < z;
      if (prev)
        for (int k = 0; k + 1 < n; ++k)
          interlace = interlace && zs.x[static_cast<std::size_t>(k)] < prev->x[static_cast<std::size_t>(k)] &&
                      prev->x[static_cast<std::size_t>(k)] < zs.x[static_cast<std::size_t>(k + 1)];
      prev = std::move(zs);
    }
    add("zeros_inside_interval", "printed", cfg.nmax, ExtReal(inside ? 0 : 1), ExtReal(0), inside, zl);
    add("zeros_interlacing", "printed", cfg.nmax - 1, ExtReal(interlace ? 0 : 1), ExtReal(0), interlace,
        zl);
    add("zeros_newton_shift", "printed", cfg.nmax, shift, ExtReal("1e-15"), shift < 1e-15, zl);

    // 𝒜_n: two real and two imaginary roots
    int violations = 0;
    std::string first;
    for (int n = 1; n <= cfg.nmax; ++n) {
      try {
        (void)electrostatic_points(n, seq);
      } catch (const StructureViolation& e) {
        if (violations++ == 0) first = e.what();
      }
    }
    add("quartic_root_structure", "printed", cfg.nmax, ExtReal(violations), ExtReal(0), violations == 0,
        violations ? first : zl);
  }

  bool ok = true;
  const Formatter f(cfg.digits);
  Report r{{"check", "form", "samples", "worst", "tolerance", "status", "detail"}, {}};
  for (const auto& l : lines) {
    ok = ok && l.status != "FAIL";
    r.rows.push_back({text(l.check), text(l.form), integer(l.samples), f.short_real(l.worst),
                      f.short_real(l.tolerance), text(l.status), text(l.detail)});
  }
  write_report(r, cfg, os);
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated quartic Freud orthogonal polynomials: moments, recurrence "
               "coefficients, zeros and identity checks",
               "tfreud"};
  app.set_version_flag("--version", TFREUD_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  RawOptions raw;
  app.add_option("--z", raw.z, "truncation parameter z > 0 (default 1)");
  app.add_option("--z-grid", raw.z_grid, "evenly spaced z values a:b:n");
  app.add_option("--nmax", raw.nmax, "largest index n")->capture_default_str();
  app.add_option("--prec", raw.prec, "mantissa bits")->capture_default_str();
  app.add_option("--format", raw.format, "json, csv or gnuplot");
  app.add_option("--out", raw.out, "write results to this file instead of stdout");
  app.add_option("--seed", raw.seed, "seed for randomized identity samples")->capture_default_str();
  app.add_option("--tol-identity", raw.tol_identity,
                 "normalized residual tolerance (default 1e-25 at 256 bits)");

  auto* moments = app.add_subcommand("moments", "even moments u_2n(z) with recurrence residuals");
  auto* gamma = app.add_subcommand("gamma", "recurrence coefficients gamma_n, g_n, h_n");
  gamma->add_option("--route", raw.route, "moments, lf or both")->capture_default_str();
  auto* zeros_cmd = app.add_subcommand("zeros", "zeros of P_n(x;z)");
  zeros_cmd->add_option("--n", raw.degree, "degree (default nmax)");
  auto* table = app.add_subcommand("table", "recompute a published table with differences");
  table->add_option("--which", raw.which, "1 (P_5 zeros), 2 (P_6 zeros) or 3 (A_n roots)")
      ->required();
  auto* dynamics = app.add_subcommand("dynamics", "trace a zero x_{n,k}(z) in z with RK4");
  dynamics->add_option("--n", raw.degree, "degree (default 5)");
  dynamics->add_option("--k", raw.k, "zero index, ascending (default n)");
  dynamics->add_option("--z0", raw.z0, "start of the z interval")->capture_default_str();
  dynamics->add_option("--z1", raw.z1, "end of the z interval")->capture_default_str();
  dynamics->add_option("--steps", raw.steps, "RK4 steps")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run the identity and invariant suite");
  verify->add_option("--samples", raw.samples, "random samples per identity and z")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << TFREUD_VERSION << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    const Format default_format = dynamics->parsed() ? Format::gnuplot : Format::csv;
    const RunConfig cfg = validate(raw, default_format);

    std::ofstream file;
    if (!raw.out.empty()) {
      file.open(raw.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open --out file '" + raw.out + "'");
    }
    std::ostream& os = raw.out.empty() ? out : file;

    int code = kSuccess;
    if (moments->parsed()) code = cmd_moments(cfg, os);
    if (gamma->parsed()) code = cmd_gamma(cfg, raw.route, os, err);
    if (zeros_cmd->parsed()) code = cmd_zeros(cfg, raw.degree, os);
    if (table->parsed()) code = cmd_table(cfg, raw.which, os);
    if (dynamics->parsed()) code = cmd_dynamics(cfg, raw, os);
    if (verify->parsed()) code = cmd_verify(cfg, raw.samples, os);
    os.flush();
    return code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (last term " << e.last_term_magnitude() << ")\n";
    return kNumericalError;
  } catch (const PrecisionExhaustedError& e) {
    err << "numerical error: " << e.what() << " (index " << e.index() << ")\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace tfreud::cli
