#pragma once

#include <array>
#include <string>

#include "flagclass/rational.hpp"

namespace flagclass {

// Element of Q(sqrt2, sqrt3), stored over the basis {1, sqrt2, sqrt3, sqrt6}.
class ExtScalar {
 public:
  using Components = std::array<Rational, 4>;

  ExtScalar() = default;
  ExtScalar(Rational r) : c_{r, 0, 0, 0} {}  // NOLINT: implicit embedding of Q
  ExtScalar(std::int64_t n) : c_{Rational(n), 0, 0, 0} {}  // NOLINT
  explicit ExtScalar(const Components& c) : c_(c) {}

  static ExtScalar sqrt2() { return ExtScalar(Components{0, 1, 0, 0}); }
  static ExtScalar sqrt3() { return ExtScalar(Components{0, 0, 1, 0}); }
  static ExtScalar sqrt6() { return ExtScalar(Components{0, 0, 0, 1}); }

  /// Exact square root of a nonnegative rational whose square-free part
  /// divides 6; anything else is outside the field and throws.
  static ExtScalar sqrt_of(const Rational& r);

  const Components& components() const { return c_; }
  bool is_zero() const;
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  ExtScalar operator-() const;
  friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
  friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) = default;

  /// Square of the value, which is rational whenever only one irrational
  /// component is populated (the only case the structure constants produce).
  ExtScalar squared() const { return *this * *this; }
  ExtScalar scaled(const Rational& r) const {
    return ExtScalar(Components{c_[0] * r, c_[1] * r, c_[2] * r, c_[3] * r});
  }

  std::string str() const;

 private:
  Components c_{};
};

}  // namespace flagclass
