#pragma once

#include <cmath>
#include <limits>

namespace spinitc {

// Nonnegative extended real: a finite double or +infinity. ITC distances use
// this so that p_max = 0 has an explicit representation instead of a sentinel.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr explicit ExtReal(double v) : v_(v) {}

  static constexpr ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }

  bool finite() const { return std::isfinite(v_); }
  constexpr double value() const { return v_; }

  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }
  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend constexpr bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend constexpr bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

 private:
  double v_ = 0.0;
};

inline ExtReal pow(ExtReal x, double a) { return ExtReal(std::pow(x.value(), a)); }
inline ExtReal scale(ExtReal x, double c) { return ExtReal(c * x.value()); }

}  // namespace spinitc
