#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "loopreps/rational.hpp"

namespace loopreps {

/// Univariate polynomial over Q, coefficients in ascending degree. The zero
/// polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs) : PolyQ(std::vector<Rational>(coeffs)) {}

  static PolyQ constant(const Rational& c) { return PolyQ({c}); }
  static PolyQ monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool isZero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  PolyQ monic() const;
  PolyQ derivative() const;
  Rational operator()(const Rational& x) const;

  PolyQ operator-() const;
  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const Rational& s, const PolyQ& p);
  friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

  /// Human-readable, e.g. "u^2 + 1" (variable name configurable).
  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws ZeroDivisor when b is zero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Monic gcd; gcd(0, 0) = 0.
PolyQ polyGcd(const PolyQ& a, const PolyQ& b);

struct ExtendedGcd {
  PolyQ gcd;  // monic (or zero)
  PolyQ s;
  PolyQ t;    // s*a + t*b = gcd
};

ExtendedGcd extendedGcd(const PolyQ& a, const PolyQ& b);

bool isSquareFree(const PolyQ& p);

}  // namespace loopreps
