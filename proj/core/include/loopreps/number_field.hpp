#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "loopreps/poly.hpp"
#include "loopreps/rational.hpp"

namespace loopreps {

/// L = Q[t]/(m(t)) for a monic modulus m of degree n >= 1. Elements are
/// stored in the power basis 1, t, ..., t^{n-1}.
class NumberField {
 public:
  /// Throws InvalidArgument if the modulus is not monic of degree >= 1.
  static std::shared_ptr<const NumberField> create(const PolyQ& modulus);

  const PolyQ& modulus() const { return modulus_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  std::uint64_t id() const { return id_; }

  /// Coordinates of t^k for n <= k <= 2n-2, reduced mod the modulus.
  const std::vector<Rational>& reducedPower(std::size_t k) const { return powers_[k - degree()]; }

 private:
  explicit NumberField(PolyQ modulus);
  PolyQ modulus_;
  std::vector<std::vector<Rational>> powers_;
  std::uint64_t id_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a NumberField, always fully reduced.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::vector<Rational> coords);

  static FieldElem zero(const FieldPtr& field);
  static FieldElem one(const FieldPtr& field);
  static FieldElem scalar(const FieldPtr& field, const Rational& r);
  static FieldElem generator(const FieldPtr& field);
  /// Reduces an arbitrary polynomial in t modulo the field modulus.
  static FieldElem fromPoly(const FieldPtr& field, const PolyQ& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  PolyQ toPoly() const { return PolyQ(coords_); }

  bool isZero() const;
  bool isOne() const;
  /// True when the element lies in Q (all coordinates above degree 0 vanish).
  bool isRational() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator*=(const Rational& s);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(FieldElem a, const Rational& s) { return a *= s; }
  friend FieldElem operator*(const Rational& s, FieldElem a) { return a *= s; }

  /// Multiplicative inverse via extended Euclid against the modulus. Throws
  /// ZeroDivisor for zero, or when the modulus turns out to be reducible.
  FieldElem inverse() const;
  FieldElem pow(unsigned exponent) const;

  // Equality and ordering look at coordinates only; callers keep elements of
  // one field together. Ordering is lexicographic on the coordinate list.
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

  /// E.g. "1/2 - 3*t^2"; "0" for zero.
  std::string str() const;
  std::size_t hash() const;

 private:
  void checkSame(const FieldElem& o) const;
  FieldPtr field_;
  std::vector<Rational> coords_;
};

inline bool isZero(const FieldElem& a) { return a.isZero(); }

/// fieldInv of the exact-core contract.
inline FieldElem fieldInv(const FieldElem& a) { return a.inverse(); }

/// Polynomial with coefficients in L, ascending degree.
using PolyL = std::vector<FieldElem>;

PolyL polyMul(const PolyL& a, const PolyL& b);
/// Trims trailing zeros (a zero polynomial becomes empty).
void trimPoly(PolyL& p);

}  // namespace loopreps

template <>
struct std::hash<loopreps::FieldElem> {
  std::size_t operator()(const loopreps::FieldElem& a) const noexcept { return a.hash(); }
};
