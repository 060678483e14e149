#pragma once

// Seeded randomized evaluation of every recurrence, structure, ladder,
// holonomic, boundary and equilibrium identity on a set of z values.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tfreud/ext_real.hpp"
#include "tfreud/precision.hpp"

namespace tfreud {

struct IdentityCheck {
  std::string name;
  /// False for the corrected form of a relation whose printed form is wrong.
  bool as_printed = true;
  /// True for the printed form of such a relation; expected to fail.
  bool known_misprint = false;
  int samples = 0;
  ExtReal worst;     // largest normalized residual
  std::string worst_at;  // "z=…, n=…, x=…" of the worst sample
  bool pass = false;
};

struct SuiteConfig {
  std::vector<ExtReal> z_values;
  int nmax = 15;                 // largest degree sampled
  std::uint64_t seed = 7;
  int samples_per_z = 50;        // per identity and z value
  ExtReal tolerance;             // normalized residual threshold
};

/// Runs all identities. Misprinted relations appear twice: once as printed
/// (known_misprint) and once corrected (as_printed = false).
std::vector<IdentityCheck> run_identity_suite(const SuiteConfig& cfg, const PrecisionContext& ctx);

/// Uniform draws from std::mt19937_64, mapped by hand so the sequence is the
/// same with every standard library.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);
  /// Uniform in the open interval (lo, hi).
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tfreud
