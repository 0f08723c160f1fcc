#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "loopreps/error.hpp"
#include "loopreps/number_field.hpp"
#include "loopreps/rational.hpp"
#include "loopreps/rootsystem.hpp"

namespace loopreps {

/// Commuting symbol of the loop Cartan algebra: h[α,s] (s >= 1), the evaluated
/// h[α], the Garland coefficient L[α,r], or a free point symbol.
struct Symbol {
  enum class Kind { H, HEval, Lambda, Point };
  Kind kind = Kind::H;
  std::string root;
  int index = 0;

  static Symbol h(std::string root, int s) { return {Kind::H, std::move(root), s}; }
  static Symbol hEval(std::string root) { return {Kind::HEval, std::move(root), 0}; }
  static Symbol lambda(std::string root, int r) { return {Kind::Lambda, std::move(root), r}; }
  static Symbol point(std::string name) { return {Kind::Point, std::move(name), 0}; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.root <=> b.root; c != 0) return c;
    if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
    return a.index <=> b.index;
  }

  std::string str() const;
};

/// Sorted (symbol, exponent > 0) list.
using Monomial = std::vector<std::pair<Symbol, int>>;

int monomialDegree(const Monomial& m);
Monomial monomialProduct(const Monomial& a, const Monomial& b);
std::string monomialStr(const Monomial& m);

inline bool isOne(const Rational& r) { return r.isOne(); }
inline bool isOne(const FieldElem& a) { return a.isOne(); }
inline std::string coeffStr(const Rational& r) { return r.isInteger() ? r.str() : "(" + r.str() + ")"; }
inline std::string coeffStr(const FieldElem& a) { return "(" + a.str() + ")"; }
inline bool isMinusOne(const Rational& r) { return r == Rational(-1); }
inline bool isMinusOne(const FieldElem& a) { return (-a).isOne(); }

/// Sparse commutative polynomial in Symbols with coefficients in C (Rational
/// or FieldElem). No zero coefficients are stored.
template <class C>
class SymPolyT {
 public:
  using Terms = std::map<Monomial, C>;

  SymPolyT() = default;
  static SymPolyT constant(const C& c) {
    SymPolyT p;
    p.addTerm({}, c);
    return p;
  }
  static SymPolyT symbol(const Symbol& s, const C& one) {
    SymPolyT p;
    p.addTerm({{s, 1}}, one);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isOneConstant() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && isOne(terms_.begin()->second);
  }
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomialDegree(m));
    return d;
  }

  void addTerm(const Monomial& m, const C& c) {
    if (loopreps::isZero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (loopreps::isZero(it->second)) terms_.erase(it);
    }
  }

  SymPolyT& operator+=(const SymPolyT& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
  }
  SymPolyT& operator-=(const SymPolyT& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
  }
  friend SymPolyT operator+(SymPolyT a, const SymPolyT& b) { return a += b; }
  friend SymPolyT operator-(SymPolyT a, const SymPolyT& b) { return a -= b; }
  friend SymPolyT operator*(const SymPolyT& a, const SymPolyT& b) {
    SymPolyT r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.addTerm(monomialProduct(ma, mb), ca * cb);
    }
    return r;
  }
  SymPolyT scaled(const Rational& s) const {
    SymPolyT r;
    for (const auto& [m, c] : terms_) r.addTerm(m, c * s);
    return r;
  }
  SymPolyT scaledBy(const C& s) const {
    SymPolyT r;
    for (const auto& [m, c] : terms_) r.addTerm(m, c * s);
    return r;
  }
  friend bool operator==(const SymPolyT&, const SymPolyT&) = default;

  /// Replaces symbols by polynomials; unmapped symbols stay.
  SymPolyT substitute(const std::map<Symbol, SymPolyT>& images, const C& one) const {
    SymPolyT r;
    for (const auto& [m, c] : terms_) {
      SymPolyT term = constant(c);
      for (const auto& [s, e] : m) {
        auto it = images.find(s);
        const SymPolyT base = it != images.end() ? it->second : symbol(s, one);
        for (int k = 0; k < e; ++k) term = term * base;
      }
      r += term;
    }
    return r;
  }

  /// Higher total degree first; ties in symbol order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, C>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      return monomialDegree(x.first) > monomialDegree(y.first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      std::string cs;
      bool negative = false;
      if constexpr (std::is_same_v<C, Rational>) {
        negative = c.sign() < 0;
        const Rational mag = c.abs();
        cs = (mag.isOne() && !m.empty()) ? "" : coeffStr(mag);
      } else {
        cs = (isOne(c) && !m.empty()) ? "" : coeffStr(c);
      }
      if (first) {
        os << (negative ? "-" : "");
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      os << cs << monomialStr(m);
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using SymPoly = SymPolyT<Rational>;

/// Power series in u truncated after degree `order`; coefficients are SymPolys.
template <class C>
struct TruncSeriesT {
  int order = 0;
  std::vector<SymPolyT<C>> coeffs;  // order + 1 entries

  TruncSeriesT() = default;
  explicit TruncSeriesT(int n) : order(n), coeffs(static_cast<std::size_t>(n) + 1) {}

  friend bool operator==(const TruncSeriesT&, const TruncSeriesT&) = default;

  friend TruncSeriesT operator+(const TruncSeriesT& a, const TruncSeriesT& b) {
    TruncSeriesT r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k) r.coeffs[k] = a.coeffs[k] + b.coeffs[k];
    return r;
  }
  friend TruncSeriesT operator*(const TruncSeriesT& a, const TruncSeriesT& b) {
    TruncSeriesT r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) {
      if (a.coeffs[i].isZero()) continue;
      for (int j = 0; i + j <= r.order; ++j) {
        if (!b.coeffs[j].isZero()) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
      }
    }
    return r;
  }
  TruncSeriesT scaled(const Rational& s) const {
    TruncSeriesT r(order);
    for (int k = 0; k <= order; ++k) r.coeffs[k] = coeffs[k].scaled(s);
    return r;
  }

  /// "1 + (-h[a,1])·u + ((1/2)h[a,1]^2 - (1/2)h[a,2])·u^2"
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order; ++k) {
      if (coeffs[k].isZero()) continue;
      if (!first) os << " + ";
      first = false;
      if (k == 0) {
        os << coeffs[k].str();
        continue;
      }
      os << "(" << coeffs[k].str() << ")·u";
      if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
  }
};

using TruncSeries = TruncSeriesT<Rational>;

/// Multiplicative inverse (the antipode on Λ-series). Throws BadConstantTerm
/// unless the constant term is exactly 1.
template <class C>
TruncSeriesT<C> seriesInverse(const TruncSeriesT<C>& s) {
  if (!s.coeffs[0].isOneConstant()) throw Error(ErrorCode::BadConstantTerm, "series constant term is not 1");
  TruncSeriesT<C> r(s.order);
  r.coeffs[0] = s.coeffs[0];
  for (int n = 1; n <= s.order; ++n) {
    SymPolyT<C> acc;
    for (int k = 1; k <= n; ++k) acc += s.coeffs[k] * r.coeffs[n - k];
    r.coeffs[n] = SymPolyT<C>() - acc;
  }
  return r;
}

/// exp of a series with zero constant term.
TruncSeries seriesExp(const TruncSeries& f);
/// log of a series with constant term 1. Throws BadConstantTerm.
TruncSeries seriesLog(const TruncSeries& s);
/// s^e for e >= 0.
TruncSeries seriesPow(const TruncSeries& s, int e);

/// Λ_α(u) = exp(-Σ_{s>=1} h[α,s] u^s / s).
TruncSeries lambdaFromH(const std::string& root, int order);
/// 1 + Σ_r L[α,r] u^r with free Garland symbols.
TruncSeries lambdaSymbolic(const std::string& root, int order);
/// h_s = -s [u^s] log(series), s = 1..order (entry s-1). Throws BadConstantTerm.
std::vector<SymPoly> hFromLambda(const TruncSeries& series);
/// Substitutes L[α,r] -> coefficients of lambdaFromH into hFromLambda(lambdaSymbolic)
/// and compares with h[α,s].
bool roundTripIdentity(const std::string& root, int order);

/// Symbol tag of a positive root: "a1", "a1+a2", "3a1+2a2".
std::string rootTag(const std::vector<int>& alpha);
/// Π_i Λ_{α_i}(u)^{m_i^∨}. Throws NotARoot.
TruncSeries lambdaAlphaFromSimples(const RootSystem& rs, const std::vector<int>& alpha, int order);
/// lambdaFromH(α) with h[α,s] -> Σ m_i^∨ h[α_i,s] equals lambdaAlphaFromSimples.
bool lambdaAlphaIdentity(const RootSystem& rs, const std::vector<int>& alpha, int order);

/// τ_k: h[α,s] -> h[α,ks].
TruncSeries twist(const TruncSeries& series, int k);

/// ev_a: h[α,s] -> a^s h[α]. Throws ZeroPoint.
TruncSeries evalAt(const TruncSeries& series, const Rational& a);
TruncSeriesT<FieldElem> evalAt(const TruncSeries& series, const FieldElem& a);
/// ev_a with a kept as the free symbol `point`.
TruncSeries evalAtSymbol(const TruncSeries& series, const std::string& point);

/// binom(h, k) = h(h-1)...(h-k+1)/k! expanded.
SymPoly binomialPoly(const Symbol& h, int k);

/// [u^r] ev_a(Λ_α) = (-a)^r binom(h_α, r).
bool evLambdaCheck(const std::string& root, int r, const Rational& a);
bool evLambdaCheck(const std::string& root, int r, const FieldElem& a);
bool evLambdaCheckSymbolic(const std::string& root, int r);

/// H_α(u) = ev_{-1}(Λ_α(u)).
TruncSeries hSeries(const std::string& root, int order);
/// Every u^k coefficient of hSeries is binom(h_α, k).
bool hSeriesCheck(const std::string& root, int order);

struct SeriesCheck {
  std::string name;
  bool passed = false;
};

/// The full identity suite at the given order for one Lie type.
std::vector<SeriesCheck> runSeriesChecks(const RootSystem& rs, int order);

}  // namespace loopreps
