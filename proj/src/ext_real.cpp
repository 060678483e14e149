#include "tfreud/ext_real.hpp"

#include <stdexcept>

namespace tfreud {

namespace {
thread_local mpfr_prec_t t_working_bits = 256;
}

mpfr_prec_t working_precision() noexcept { return t_working_bits; }

namespace detail {
void set_working_precision(mpfr_prec_t bits) noexcept { t_working_bits = bits; }
}  // namespace detail

ExtReal::ExtReal() {
  mpfr_init2(value_, t_working_bits);
  mpfr_set_zero(value_, 1);
}

ExtReal::ExtReal(int v) : ExtReal(static_cast<long>(v)) {}

ExtReal::ExtReal(long v) {
  mpfr_init2(value_, t_working_bits);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

ExtReal::ExtReal(long long v) {
  mpfr_init2(value_, t_working_bits);
  static_assert(sizeof(long long) == sizeof(long));
  mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
}

ExtReal::ExtReal(unsigned long v) {
  mpfr_init2(value_, t_working_bits);
  mpfr_set_ui(value_, v, MPFR_RNDN);
}

ExtReal::ExtReal(double v) {
  mpfr_init2(value_, t_working_bits);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

ExtReal::ExtReal(std::string_view decimal) {
  mpfr_init2(value_, t_working_bits);
  const std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
}

ExtReal::ExtReal(const ExtReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ExtReal::ExtReal(ExtReal&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
}

ExtReal& ExtReal::operator=(const ExtReal& other) {
  if (this == &other) return *this;
  if (moved_from())
    mpfr_init2(value_, other.precision());
  else
    mpfr_set_prec(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator=(ExtReal&& other) noexcept {
  if (this == &other) return *this;
  if (!moved_from()) mpfr_clear(value_);
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
  return *this;
}

ExtReal::~ExtReal() {
  if (!moved_from()) mpfr_clear(value_);
}

ExtReal ExtReal::ratio(long num, long den) {
  ExtReal r(num);
  mpfr_div_si(r.value_, r.value_, den, MPFR_RNDN);
  return r;
}

ExtReal& ExtReal::operator+=(const ExtReal& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
ExtReal& ExtReal::operator-=(const ExtReal& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
ExtReal& ExtReal::operator*=(const ExtReal& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
ExtReal& ExtReal::operator/=(const ExtReal& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal ExtReal::operator-() const {
  ExtReal r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string ExtReal::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  char* buffer = nullptr;
  const int n = mpfr_asprintf(&buffer, "%.*Re", significant_digits - 1, value_);
  if (n < 0 || buffer == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buffer, static_cast<std::size_t>(n));
  mpfr_free_str(buffer);
  return out;
}

namespace {
template <typename Op>
ExtReal binary(const ExtReal& a, const ExtReal& b, Op op) {
  ExtReal r;
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
template <typename Op>
ExtReal unary(const ExtReal& a, Op op) {
  ExtReal r;
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}
}  // namespace

ExtReal operator+(const ExtReal& a, const ExtReal& b) { return binary(a, b, mpfr_add); }
ExtReal operator-(const ExtReal& a, const ExtReal& b) { return binary(a, b, mpfr_sub); }
ExtReal operator*(const ExtReal& a, const ExtReal& b) { return binary(a, b, mpfr_mul); }
ExtReal operator/(const ExtReal& a, const ExtReal& b) { return binary(a, b, mpfr_div); }

ExtReal add_si(const ExtReal& a, long b) {
  ExtReal r;
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
ExtReal sub_si(const ExtReal& a, long b) {
  ExtReal r;
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
ExtReal si_sub(long a, const ExtReal& b) {
  ExtReal r;
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
ExtReal mul_si(const ExtReal& a, long b) {
  ExtReal r;
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
ExtReal div_si(const ExtReal& a, long b) {
  ExtReal r;
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
ExtReal si_div(long a, const ExtReal& b) {
  ExtReal r;
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const ExtReal& a, const ExtReal& b) noexcept {
  return mpfr_equal_p(a.get(), b.get()) != 0;
}

std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) noexcept {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ExtReal abs(const ExtReal& x) { return unary(x, mpfr_abs); }
ExtReal sqrt(const ExtReal& x) { return unary(x, mpfr_sqrt); }
ExtReal exp(const ExtReal& x) { return unary(x, mpfr_exp); }
ExtReal log(const ExtReal& x) { return unary(x, mpfr_log); }
ExtReal cos(const ExtReal& x) { return unary(x, mpfr_cos); }
ExtReal sin(const ExtReal& x) { return unary(x, mpfr_sin); }
ExtReal sinh(const ExtReal& x) { return unary(x, mpfr_sinh); }
ExtReal cosh(const ExtReal& x) { return unary(x, mpfr_cosh); }
ExtReal tanh(const ExtReal& x) { return unary(x, mpfr_tanh); }
ExtReal square(const ExtReal& x) { return unary(x, mpfr_sqr); }
ExtReal pow(const ExtReal& x, const ExtReal& y) { return binary(x, y, mpfr_pow); }

ExtReal pow(const ExtReal& x, long k) {
  ExtReal r;
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

ExtReal ldexp(const ExtReal& x, long e) {
  ExtReal r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

ExtReal pi() {
  ExtReal r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

}  // namespace tfreud
