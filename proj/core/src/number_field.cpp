#include "loopreps/number_field.hpp"

#include <atomic>
#include <sstream>

#include "loopreps/error.hpp"

namespace loopreps {

namespace {
std::atomic<std::uint64_t> nextFieldId{1};
}

NumberField::NumberField(PolyQ modulus) : modulus_(std::move(modulus)), id_(nextFieldId++) {
  const std::size_t n = degree();
  // t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
  std::vector<Rational> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = -modulus_.coeff(i);
  for (std::size_t k = n; k + 1 < 2 * n || k == n; ++k) {
    powers_.push_back(cur);
    // multiply by t
    std::vector<Rational> next(n);
    const Rational top = cur[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = Rational(0);
    if (!top.isZero()) {
      for (std::size_t i = 0; i < n; ++i) next[i] -= top * modulus_.coeff(i);
    }
    cur = std::move(next);
  }
}

std::shared_ptr<const NumberField> NumberField::create(const PolyQ& modulus) {
  if (modulus.degree() < 1 || !modulus.leading().isOne()) {
    throw Error(ErrorCode::InvalidArgument, "field modulus must be monic of degree >= 1");
  }
  return std::shared_ptr<const NumberField>(new NumberField(modulus));
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "field element without a field");
  *this = fromPoly(field_, PolyQ(std::move(coords)));
}

FieldElem FieldElem::zero(const FieldPtr& field) {
  FieldElem e;
  e.field_ = field;
  e.coords_.assign(field->degree(), Rational(0));
  return e;
}

FieldElem FieldElem::one(const FieldPtr& field) { return scalar(field, Rational(1)); }

FieldElem FieldElem::scalar(const FieldPtr& field, const Rational& r) {
  FieldElem e = zero(field);
  e.coords_[0] = r;
  return e;
}

FieldElem FieldElem::generator(const FieldPtr& field) { return fromPoly(field, PolyQ::monomial(1, 1)); }

FieldElem FieldElem::fromPoly(const FieldPtr& field, const PolyQ& p) {
  FieldElem e = zero(field);
  const std::size_t n = field->degree();
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].isZero()) continue;
    if (k < n) {
      e.coords_[k] += c[k];
    } else if (k <= 2 * n - 2 && k >= n) {
      const auto& red = field->reducedPower(k);
      for (std::size_t i = 0; i < n; ++i) e.coords_[i] += c[k] * red[i];
    }
  }
  if (p.degree() > static_cast<int>(2 * n - 2)) {
    // Rare path: reduce long polynomials by division.
    e = zero(field);
    PolyQ r = divmod(p, field->modulus()).second;
    for (std::size_t k = 0; k < r.coeffs().size(); ++k) e.coords_[k] = r.coeffs()[k];
  }
  return e;
}

bool FieldElem::isZero() const {
  for (const auto& c : coords_) {
    if (!c.isZero()) return false;
  }
  return true;
}

bool FieldElem::isOne() const {
  if (coords_.empty() || !coords_[0].isOne()) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!coords_[i].isZero()) return false;
  }
  return true;
}

bool FieldElem::isRational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!coords_[i].isZero()) return false;
  }
  return true;
}

void FieldElem::checkSame(const FieldElem& o) const {
  if (field_ != o.field_) {
    if (!field_ || !o.field_ || field_->id() != o.field_->id()) {
      throw Error(ErrorCode::ContextMismatch, "field elements from different fields");
    }
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  checkSame(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  checkSame(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem& FieldElem::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  a.checkSame(b);
  const std::size_t n = a.coords_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i].isZero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords_[j].isZero()) continue;
      prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  FieldElem r = FieldElem::zero(a.field_);
  for (std::size_t i = 0; i < n; ++i) r.coords_[i] = prod[i];
  for (std::size_t k = n; k < 2 * n - 1; ++k) {
    if (prod[k].isZero()) continue;
    const auto& red = a.field_->reducedPower(k);
    for (std::size_t i = 0; i < n; ++i) r.coords_[i] += prod[k] * red[i];
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (isZero()) throw Error(ErrorCode::ZeroDivisor, "inverse of zero field element");
  const ExtendedGcd eg = extendedGcd(toPoly(), field_->modulus());
  if (eg.gcd.degree() != 0) {
    throw Error(ErrorCode::ZeroDivisor,
                "element " + str() + " shares factor " + eg.gcd.str("t") + " with the modulus");
  }
  return fromPoly(field_, eg.s);
}

FieldElem FieldElem::pow(unsigned exponent) const {
  FieldElem result = one(field_);
  FieldElem b = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                b.coords_.end());
}

std::string FieldElem::str() const {
  if (coords_.empty()) return "<null>";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c.isZero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (!mag.isOne()) os << mag << "*";
      os << "t";
      if (i >= 2) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

std::size_t FieldElem::hash() const {
  std::size_t h = 0;
  for (const auto& c : coords_) h = h * 1000003ULL ^ c.hash();
  return h;
}

PolyL polyMul(const PolyL& a, const PolyL& b) {
  if (a.empty() || b.empty()) return {};
  PolyL r(a.size() + b.size() - 1, FieldElem::zero(a.front().field()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trimPoly(r);
  return r;
}

void trimPoly(PolyL& p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
}

}  // namespace loopreps
