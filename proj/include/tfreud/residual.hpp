#pragma once

#include "tfreud/ext_real.hpp"

namespace tfreud {

/// An identity residual together with the magnitude of its largest additive
/// term, so tolerances can be stated relative to the size of the terms.
struct Residual {
  ExtReal value;
  ExtReal scale;

  ExtReal normalized() const { return scale.is_zero() ? abs(value) : abs(value) / scale; }
  bool within(const ExtReal& tol) const { return normalized() <= tol; }
};

/// Accumulates signed terms of an identity and tracks the largest one.
class TermSum {
 public:
  TermSum& add(const ExtReal& term) {
    sum_ += term;
    const ExtReal mag = abs(term);
    if (mag > scale_) scale_ = mag;
    return *this;
  }
  TermSum& sub(const ExtReal& term) { return add(-term); }

  Residual result() const { return {sum_, scale_}; }

 private:
  ExtReal sum_{0};
  ExtReal scale_{0};
};

}  // namespace tfreud
