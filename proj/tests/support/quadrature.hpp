#pragma once

// Tanh-sinh (double exponential) quadrature on ExtReal, used as an
// independent oracle for moments and Stieltjes values.

#include <stdexcept>

#include "tfreud/ext_real.hpp"

namespace tfreud::testing {

/// ∫_a^b f(x) dx for f analytic on (a, b). Halves the step until two
/// successive levels agree to `tol` relative.
template <class F>
ExtReal tanh_sinh(F&& f, const ExtReal& a, const ExtReal& b, const ExtReal& tol, int max_level = 12) {
  const ExtReal half_pi = pi() / 2;
  const ExtReal mid = (a + b) / 2;
  const ExtReal rad = (b - a) / 2;
  const ExtReal tiny = ldexp(ExtReal(1), -static_cast<long>(working_precision()) - 8);

  // sum over nodes t = k·h for k odd (or all k at level 0)
  auto level_sum = [&](const ExtReal& h, bool odd_only) {
    ExtReal s(0);
    const int step = odd_only ? 2 : 1;
    for (int k = odd_only ? 1 : 0;; k += step) {
      const ExtReal t = h * k;
      const ExtReal u = half_pi * sinh(t);
      const ExtReal ch = cosh(u);
      const ExtReal w = half_pi * cosh(t) / square(ch);
      if (w < tiny) break;
      const ExtReal y = tanh(u);
      ExtReal term = f(mid + rad * y);
      if (k != 0) term += f(mid - rad * y);
      s += w * term;
      if (k > 100000) throw std::runtime_error("tanh_sinh: node budget exceeded");
    }
    return s;
  };

  ExtReal h(1);
  ExtReal sum = level_sum(h, false);
  ExtReal prev = rad * h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    sum += level_sum(h, true);
    const ExtReal cur = rad * h * sum;
    if (abs(cur - prev) <= tol * abs(cur)) return cur;
    prev = cur;
  }
  throw std::runtime_error("tanh_sinh: no convergence");
}

}  // namespace tfreud::testing
