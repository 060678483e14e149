#pragma once

// Published reference values for the largest zeros of P_5 and P_6 and for the
// roots of 𝒜_n at z = 1, and routines that recompute the same quantities.

#include <span>
#include <string>
#include <vector>

#include "tfreud/ext_real.hpp"
#include "tfreud/precision.hpp"

namespace tfreud {

/// One printed row of a zero table. `z` is "inf" for the untruncated limit.
struct PublishedZeroRow {
  const char* z;
  const char* second_largest;
  const char* largest;
};

/// One printed row of the η/ζ table (z = 1, positive representatives).
struct PublishedChargeRow {
  int n;
  const char* eta;
  const char* zeta;
};

/// Rows as printed (source: published tables; digits copied verbatim).
std::span<const PublishedZeroRow> published_zeros_p5();
std::span<const PublishedZeroRow> published_zeros_p6();
std::span<const PublishedChargeRow> published_charges_z1();

/// Finite z standing in for the untruncated row.
inline constexpr const char* kInfinityProxy = "4";

struct ZeroTableRow {
  std::string z_label;  // as printed
  ExtReal z;            // value used (kInfinityProxy for "inf")
  bool infinity_proxy = false;
  ExtReal second_largest;
  ExtReal largest;
  ExtReal published_second_largest;
  ExtReal published_largest;
};

/// Two largest zeros of P_degree(x;z) for every printed row. degree is 5 or 6.
std::vector<ZeroTableRow> compute_zero_table(int degree, const PrecisionContext& ctx);

struct ChargeTableRow {
  int n = 0;
  ExtReal eta;
  ExtReal zeta;
  ExtReal published_eta;
  ExtReal published_zeta;
};

/// η_1(n,1) and ζ_1(n,1)/i for every printed n.
std::vector<ChargeTableRow> compute_charge_table(const PrecisionContext& ctx);

/// Rows above this n are compared but not pinned: their printed ζ breaks the
/// increasing trend of the rows before them.
inline constexpr int kChargeTablePinnedMaxN = 15;

}  // namespace tfreud
