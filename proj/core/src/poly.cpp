#include "loopreps/poly.hpp"

#include <sstream>

#include "loopreps/error.hpp"

namespace loopreps {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

PolyQ PolyQ::monic() const {
  if (isZero()) return *this;
  const Rational inv = leading().inverse();
  return inv * *this;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return PolyQ(std::move(d));
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return PolyQ(std::move(v));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(v));
}

PolyQ operator*(const Rational& s, const PolyQ& p) {
  std::vector<Rational> v(p.c_);
  for (auto& x : v) x *= s;
  return PolyQ(std::move(v));
}

std::string PolyQ::str(const std::string& var) const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.isZero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || !mag.isOne()) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.isZero()) throw Error(ErrorCode::ZeroDivisor, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  if (a.degree() < b.degree()) return {PolyQ{}, a};
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db);
  const Rational lcInv = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].isZero()) continue;
    const Rational q = rem[k] * lcInv;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ polyGcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a;
  PolyQ y = b;
  while (!y.isZero()) {
    PolyQ r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extendedGcd(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a, r1 = b;
  PolyQ s0 = PolyQ::constant(1), s1;
  PolyQ t0, t1 = PolyQ::constant(1);
  while (!r1.isZero()) {
    auto [q, r] = divmod(r0, r1);
    PolyQ s2 = s0 - q * s1;
    PolyQ t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.isZero()) return {r0, s0, t0};
  const Rational inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

bool isSquareFree(const PolyQ& p) {
  if (p.degree() <= 0) return true;
  return polyGcd(p, p.derivative()).degree() == 0;
}

}  // namespace loopreps
