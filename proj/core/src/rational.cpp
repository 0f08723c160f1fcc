#include "loopreps/rational.hpp"

#include <limits>
#include <ostream>

#include "loopreps/error.hpp"

namespace loopreps {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDivisor, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  const auto slash = s.find('/');
  auto checkDigits = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
      }
    }
  };
  auto strip = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };
  if (slash == std::string::npos) {
    checkDigits(s);
    return Rational(mpz_class(strip(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  checkDigits(num);
  checkDigits(den);
  mpz_class d(strip(den));
  if (d == 0) throw Error(ErrorCode::ZeroDivisor, "rational with zero denominator");
  return Rational(mpq_class(mpz_class(strip(num)), d));
}

std::int64_t Rational::toInt64() const {
  if (!isInteger() || !v_.get_num().fits_slong_p()) {
    throw Error(ErrorCode::Overflow, "rational " + str() + " is not a machine integer");
  }
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (isInteger()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error(ErrorCode::ZeroDivisor, "division of rational by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (isZero()) throw Error(ErrorCode::ZeroDivisor, "inverse of zero rational");
  return Rational(mpq_class(1 / v_));
}

std::size_t Rational::hash() const {
  // Not collision-free; equality is structural so this only feeds buckets.
  std::size_t h = std::hash<std::string>{}(v_.get_num().get_str(16));
  h ^= std::hash<std::string>{}(v_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace loopreps
