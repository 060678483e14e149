#include "tfreud/tables.hpp"

#include <array>
#include <string_view>

#include "tfreud/errors.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/zeros.hpp"

namespace tfreud {

namespace {

constexpr std::array<PublishedZeroRow, 8> kZerosP5{{
    {"0.2", "0.107685", "0.181230"},
    {"0.4", "0.215105", "0.362271"},
    {"0.6", "0.320950", "0.542169"},
    {"0.9", "0.468896", "0.803263"},
    {"1.2", "0.584567", "1.029070"},
    {"1.4", "0.631505", "1.130200"},
    {"1.5", "0.644491", "1.158470"},
    {"inf", "0.655248", "1.180460"},
}};

constexpr std::array<PublishedZeroRow, 8> kZerosP6{{
    {"0.3", "0.1982974", "0.2797096"},
    {"0.4", "0.2642083", "0.3728558"},
    {"0.65", "0.4266802", "0.6045856"},
    {"0.9", "0.5795190", "0.8310874"},
    {"1.2", "0.7308850", "1.0794365"},
    {"1.4", "0.7984810", "1.2066653"},
    {"1.5", "0.8196970", "1.2490734"},
    {"inf", "0.8415723", "1.2914650"},
}};

constexpr std::array<PublishedChargeRow, 17> kChargesZ1{{
    {1, "1.10947", "0.870003"},  {2, "1.19659", "0.975701"}, {3, "1.27583", "1.07093"},
    {4, "1.34277", "1.14612"},   {5, "1.3997", "1.2106"},    {6, "1.44951", "1.26696"},
    {7, "1.49408", "1.31726"},   {8, "1.53462", "1.3628"},   {9, "1.57192", "1.40449"},
    {10, "1.60653", "1.44302"},  {11, "1.6389", "1.47888"},  {12, "1.66932", "1.51246"},
    {13, "1.69806", "1.54408"},  {14, "1.72533", "1.57404"}, {15, "1.75127", "1.60162"},
    {16, "1.77603", "1.63848"},  {17, "1.79819", "1.55118"},
}};

}  // namespace

std::span<const PublishedZeroRow> published_zeros_p5() { return kZerosP5; }
std::span<const PublishedZeroRow> published_zeros_p6() { return kZerosP6; }
std::span<const PublishedChargeRow> published_charges_z1() { return kChargesZ1; }

std::vector<ZeroTableRow> compute_zero_table(int degree, const PrecisionContext& ctx) {
  if (degree != 5 && degree != 6) throw DomainError("compute_zero_table: degree must be 5 or 6");
  const auto rows = degree == 5 ? published_zeros_p5() : published_zeros_p6();
  PrecisionScope scope(ctx);
  std::vector<ZeroTableRow> out;
  for (const auto& r : rows) {
    ZeroTableRow row;
    row.z_label = r.z;
    row.infinity_proxy = std::string_view(r.z) == "inf";
    row.z = ExtReal(row.infinity_proxy ? std::string_view(kInfinityProxy) : std::string_view(r.z));
    const auto zs = zeros(degree, gamma_from_moments(row.z, degree + 2, ctx));
    row.second_largest = zs.x[static_cast<std::size_t>(degree - 2)];
    row.largest = zs.x[static_cast<std::size_t>(degree - 1)];
    row.published_second_largest = ExtReal(std::string_view(r.second_largest));
    row.published_largest = ExtReal(std::string_view(r.largest));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<ChargeTableRow> compute_charge_table(const PrecisionContext& ctx) {
  const auto rows = published_charges_z1();
  PrecisionScope scope(ctx);
  const auto seq = gamma_from_moments(ExtReal(1), rows.back().n + 2, ctx);
  std::vector<ChargeTableRow> out;
  for (const auto& r : rows) {
    const auto m = electrostatic_points(r.n, seq);
    out.push_back({r.n, m.eta1, m.zeta_imag, ExtReal(std::string_view(r.eta)),
                   ExtReal(std::string_view(r.zeta))});
  }
  return out;
}

}  // namespace tfreud
