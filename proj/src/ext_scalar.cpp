#include "flagclass/ext_scalar.hpp"

#include <cstdlib>

namespace flagclass {

namespace {

// Returns (m, d) with n = m^2 * d and d square-free.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t m = 1;
  std::int64_t d = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      m *= p;
    }
    if (n % p == 0) {
      n /= p;
      d *= p;
    }
  }
  return {m, d * n};
}

}  // namespace

ExtScalar ExtScalar::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::InvalidArgument, "square root of negative rational " + r.str());
  if (r.is_zero()) return ExtScalar();
  // sqrt(p/q) = sqrt(p*q)/q
  std::int64_t pq = detail::checked_mul(r.num(), r.den());
  auto [m, d] = split_square(pq);
  Rational coeff(m, r.den());
  Components c{};
  switch (d) {
    case 1: c[0] = coeff; break;
    case 2: c[1] = coeff; break;
    case 3: c[2] = coeff; break;
    case 6: c[3] = coeff; break;
    default:
      throw Error(ErrorKind::InvalidArgument, "sqrt(" + r.str() + ") is not in Q(sqrt2, sqrt3)");
  }
  return ExtScalar(c);
}

bool ExtScalar::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

ExtScalar ExtScalar::operator-() const {
  return ExtScalar(Components{-c_[0], -c_[1], -c_[2], -c_[3]});
}

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
  ExtScalar::Components c;
  for (int i = 0; i < 4; ++i) c[i] = a.c_[i] + b.c_[i];
  return ExtScalar(c);
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
  // basis e0=1, e1=√2, e2=√3, e3=√6
  // e1e1=2, e2e2=3, e3e3=6, e1e2=e3, e1e3=2e2, e2e3=3e1
  const auto& x = a.c_;
  const auto& y = b.c_;
  ExtScalar::Components c;
  c[0] = x[0] * y[0] + Rational(2) * x[1] * y[1] + Rational(3) * x[2] * y[2] + Rational(6) * x[3] * y[3];
  c[1] = x[0] * y[1] + x[1] * y[0] + Rational(3) * (x[2] * y[3] + x[3] * y[2]);
  c[2] = x[0] * y[2] + x[2] * y[0] + Rational(2) * (x[1] * y[3] + x[3] * y[1]);
  c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  return ExtScalar(c);
}

std::string ExtScalar::str() const {
  static const char* const names[4] = {"", "sqrt2", "sqrt3", "sqrt6"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    std::string term = c_[i].str();
    if (i > 0) term = (c_[i] == Rational(1) ? "" : (c_[i] == Rational(-1) ? "-" : term + "*")) + names[i];
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace flagclass
