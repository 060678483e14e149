#pragma once

// Extended-precision real number backed by GNU MPFR.
//
// Every ExtReal created by arithmetic or by the converting constructors takes
// the calling thread's working precision (see PrecisionScope in
// precision.hpp). Copies keep the precision of their source. Rounding is
// MPFR round-to-nearest for every operation, so +, -, *, /, sqrt, exp, log
// and cos are correctly rounded at the working precision.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace tfreud {

/// Mantissa bits used for new values on the calling thread.
mpfr_prec_t working_precision() noexcept;

namespace detail {
void set_working_precision(mpfr_prec_t bits) noexcept;
}

class ExtReal {
 public:
  ExtReal();
  ExtReal(int v);            // NOLINT(google-explicit-constructor)
  ExtReal(long v);           // NOLINT(google-explicit-constructor)
  ExtReal(long long v);      // NOLINT(google-explicit-constructor)
  ExtReal(unsigned long v);  // NOLINT(google-explicit-constructor)
  ExtReal(double v);         // NOLINT(google-explicit-constructor)
  /// Parses a decimal literal such as "1.2914650" or "-3e-7" at working precision.
  explicit ExtReal(std::string_view decimal);

  ExtReal(const ExtReal& other);
  ExtReal(ExtReal&& other) noexcept;
  ExtReal& operator=(const ExtReal& other);
  ExtReal& operator=(ExtReal&& other) noexcept;
  ~ExtReal();

  /// Exact ratio num/den rounded once.
  static ExtReal ratio(long num, long den);

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  ExtReal& operator+=(const ExtReal& rhs);
  ExtReal& operator-=(const ExtReal& rhs);
  ExtReal& operator*=(const ExtReal& rhs);
  ExtReal& operator/=(const ExtReal& rhs);
  ExtReal operator-() const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with the given number of significant digits,
  /// exponent printed as e±dd (at least two exponent digits).
  std::string to_string(int significant_digits = 30) const;

 private:
  bool moved_from() const noexcept { return value_->_mpfr_d == nullptr; }

  mpfr_t value_;
};

ExtReal operator+(const ExtReal& a, const ExtReal& b);
ExtReal operator-(const ExtReal& a, const ExtReal& b);
ExtReal operator*(const ExtReal& a, const ExtReal& b);
ExtReal operator/(const ExtReal& a, const ExtReal& b);

ExtReal add_si(const ExtReal& a, long b);
ExtReal sub_si(const ExtReal& a, long b);
ExtReal si_sub(long a, const ExtReal& b);
ExtReal mul_si(const ExtReal& a, long b);
ExtReal div_si(const ExtReal& a, long b);
ExtReal si_div(long a, const ExtReal& b);

template <std::integral I>
ExtReal operator+(const ExtReal& a, I b) { return add_si(a, static_cast<long>(b)); }
template <std::integral I>
ExtReal operator+(I a, const ExtReal& b) { return add_si(b, static_cast<long>(a)); }
template <std::integral I>
ExtReal operator-(const ExtReal& a, I b) { return sub_si(a, static_cast<long>(b)); }
template <std::integral I>
ExtReal operator-(I a, const ExtReal& b) { return si_sub(static_cast<long>(a), b); }
template <std::integral I>
ExtReal operator*(const ExtReal& a, I b) { return mul_si(a, static_cast<long>(b)); }
template <std::integral I>
ExtReal operator*(I a, const ExtReal& b) { return mul_si(b, static_cast<long>(a)); }
template <std::integral I>
ExtReal operator/(const ExtReal& a, I b) { return div_si(a, static_cast<long>(b)); }
template <std::integral I>
ExtReal operator/(I a, const ExtReal& b) { return si_div(static_cast<long>(a), b); }

template <std::floating_point F>
ExtReal operator+(const ExtReal& a, F b) { return a + ExtReal(static_cast<double>(b)); }
template <std::floating_point F>
ExtReal operator+(F a, const ExtReal& b) { return ExtReal(static_cast<double>(a)) + b; }
template <std::floating_point F>
ExtReal operator-(const ExtReal& a, F b) { return a - ExtReal(static_cast<double>(b)); }
template <std::floating_point F>
ExtReal operator-(F a, const ExtReal& b) { return ExtReal(static_cast<double>(a)) - b; }
template <std::floating_point F>
ExtReal operator*(const ExtReal& a, F b) { return a * ExtReal(static_cast<double>(b)); }
template <std::floating_point F>
ExtReal operator*(F a, const ExtReal& b) { return ExtReal(static_cast<double>(a)) * b; }
template <std::floating_point F>
ExtReal operator/(const ExtReal& a, F b) { return a / ExtReal(static_cast<double>(b)); }
template <std::floating_point F>
ExtReal operator/(F a, const ExtReal& b) { return ExtReal(static_cast<double>(a)) / b; }

bool operator==(const ExtReal& a, const ExtReal& b) noexcept;
std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) noexcept;

template <typename T>
  requires std::integral<T> || std::floating_point<T>
bool operator==(const ExtReal& a, T b) noexcept {
  return mpfr_cmp_d(a.get(), static_cast<double>(b)) == 0;
}
template <typename T>
  requires std::integral<T> || std::floating_point<T>
std::partial_ordering operator<=>(const ExtReal& a, T b) noexcept {
  if (a.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.get(), static_cast<double>(b));
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

ExtReal abs(const ExtReal& x);
ExtReal sqrt(const ExtReal& x);
ExtReal exp(const ExtReal& x);
ExtReal log(const ExtReal& x);
ExtReal cos(const ExtReal& x);
ExtReal sin(const ExtReal& x);
ExtReal sinh(const ExtReal& x);
ExtReal cosh(const ExtReal& x);
ExtReal tanh(const ExtReal& x);
ExtReal pow(const ExtReal& x, const ExtReal& y);
ExtReal pow(const ExtReal& x, long k);
ExtReal square(const ExtReal& x);
ExtReal ldexp(const ExtReal& x, long e);
ExtReal pi();
ExtReal max(const ExtReal& a, const ExtReal& b);
ExtReal min(const ExtReal& a, const ExtReal& b);

}  // namespace tfreud
