#include "loopreps/series.hpp"

#include <algorithm>
#include <functional>

namespace loopreps {

std::string Symbol::str() const {
  switch (kind) {
    case Kind::H:
      return "h[" + root + "," + std::to_string(index) + "]";
    case Kind::HEval:
      return "h[" + root + "]";
    case Kind::Lambda:
      return "L[" + root + "," + std::to_string(index) + "]";
    case Kind::Point:
      return root;
  }
  return "?";
}

int monomialDegree(const Monomial& m) {
  int d = 0;
  for (const auto& [s, e] : m) d += e;
  return d;
}

Monomial monomialProduct(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string monomialStr(const Monomial& m) {
  std::string out;
  for (const auto& [s, e] : m) {
    if (!out.empty()) out += "*";
    out += s.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

void requireOrder(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "series order must be >= 1");
}

SymPoly one() { return SymPoly::constant(Rational(1)); }

SymPoly hSym(const std::string& root, int s) { return SymPoly::symbol(Symbol::h(root, s), Rational(1)); }

// Applies a per-symbol rewrite to every coefficient of a series.
TruncSeries mapSeries(const TruncSeries& series, const std::map<Symbol, SymPoly>& images) {
  TruncSeries r(series.order);
  for (int k = 0; k <= series.order; ++k) r.coeffs[k] = series.coeffs[k].substitute(images, Rational(1));
  return r;
}

std::map<Symbol, SymPoly> evalImages(const TruncSeries& series, const std::function<SymPoly(const Symbol&)>& img) {
  std::map<Symbol, SymPoly> images;
  for (const auto& c : series.coeffs) {
    for (const auto& [m, coeff] : c.terms()) {
      for (const auto& [s, e] : m) {
        if (s.kind == Symbol::Kind::H && !images.count(s)) images.emplace(s, img(s));
      }
    }
  }
  return images;
}

}  // namespace

TruncSeries seriesPow(const TruncSeries& s, int e) {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative series power");
  TruncSeries r(s.order);
  r.coeffs[0] = one();
  for (int k = 0; k < e; ++k) r = r * s;
  return r;
}

TruncSeries seriesExp(const TruncSeries& f) {
  if (!f.coeffs[0].isZero()) throw Error(ErrorCode::BadConstantTerm, "exp needs a zero constant term");
  TruncSeries r(f.order);
  r.coeffs[0] = one();
  TruncSeries power = r;
  Rational factorial(1);
  for (int k = 1; k <= f.order; ++k) {
    power = power * f;
    factorial *= Rational(k);
    r = r + power.scaled(factorial.inverse());
  }
  return r;
}

TruncSeries seriesLog(const TruncSeries& s) {
  if (!s.coeffs[0].isOneConstant()) throw Error(ErrorCode::BadConstantTerm, "log needs constant term 1");
  TruncSeries f = s;
  f.coeffs[0] = SymPoly();
  TruncSeries r(s.order);
  TruncSeries power(s.order);
  power.coeffs[0] = one();
  for (int k = 1; k <= s.order; ++k) {
    power = power * f;
    r = r + power.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
  }
  return r;
}

TruncSeries lambdaFromH(const std::string& root, int order) {
  requireOrder(order);
  TruncSeries f(order);
  for (int s = 1; s <= order; ++s) f.coeffs[s] = hSym(root, s).scaled(Rational(-1, s));
  return seriesExp(f);
}

TruncSeries lambdaSymbolic(const std::string& root, int order) {
  requireOrder(order);
  TruncSeries r(order);
  r.coeffs[0] = one();
  for (int k = 1; k <= order; ++k) r.coeffs[k] = SymPoly::symbol(Symbol::lambda(root, k), Rational(1));
  return r;
}

std::vector<SymPoly> hFromLambda(const TruncSeries& series) {
  const TruncSeries lg = seriesLog(series);
  std::vector<SymPoly> out;
  for (int s = 1; s <= series.order; ++s) out.push_back(lg.coeffs[s].scaled(Rational(-s)));
  return out;
}

bool roundTripIdentity(const std::string& root, int order) {
  const TruncSeries lam = lambdaFromH(root, order);
  std::map<Symbol, SymPoly> images;
  for (int r = 1; r <= order; ++r) images.emplace(Symbol::lambda(root, r), lam.coeffs[r]);
  const auto hs = hFromLambda(lambdaSymbolic(root, order));
  for (int s = 1; s <= order; ++s) {
    if (hs[s - 1].substitute(images, Rational(1)) != hSym(root, s)) return false;
  }
  // and the other direction: Λ built from the recovered h's is Λ again
  return hFromLambda(lam) == [&] {
    std::vector<SymPoly> v;
    for (int s = 1; s <= order; ++s) v.push_back(hSym(root, s));
    return v;
  }();
}

std::string rootTag(const std::vector<int>& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (alpha[i] != 1) out += std::to_string(alpha[i]);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {
std::string simpleTag(std::size_t rank, std::size_t i) {
  std::vector<int> e(rank, 0);
  e[i] = 1;
  return rootTag(e);
}
}  // namespace

TruncSeries lambdaAlphaFromSimples(const RootSystem& rs, const std::vector<int>& alpha, int order) {
  requireOrder(order);
  const auto m = rs.corootCoeffs(alpha);
  TruncSeries r(order);
  r.coeffs[0] = one();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) r = r * seriesPow(lambdaFromH(simpleTag(rs.rank(), i), order), m[i]);
  }
  return r;
}

bool lambdaAlphaIdentity(const RootSystem& rs, const std::vector<int>& alpha, int order) {
  const auto m = rs.corootCoeffs(alpha);
  const std::string tag = rootTag(alpha);
  std::map<Symbol, SymPoly> images;
  for (int s = 1; s <= order; ++s) {
    SymPoly img;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) img += hSym(simpleTag(rs.rank(), i), s).scaled(Rational(m[i]));
    }
    images.emplace(Symbol::h(tag, s), img);
  }
  return mapSeries(lambdaFromH(tag, order), images) == lambdaAlphaFromSimples(rs, alpha, order);
}

TruncSeries twist(const TruncSeries& series, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "twist index must be >= 1");
  return mapSeries(series, evalImages(series, [k](const Symbol& s) { return hSym(s.root, s.index * k); }));
}

TruncSeries evalAt(const TruncSeries& series, const Rational& a) {
  if (a.isZero()) throw Error(ErrorCode::ZeroPoint, "evaluation at zero");
  return mapSeries(series, evalImages(series, [&a](const Symbol& s) {
                     return SymPoly::symbol(Symbol::hEval(s.root), pow(a, static_cast<unsigned>(s.index)));
                   }));
}

TruncSeriesT<FieldElem> evalAt(const TruncSeries& series, const FieldElem& a) {
  if (a.isZero()) throw Error(ErrorCode::ZeroPoint, "evaluation at zero");
  const auto& field = a.field();
  TruncSeriesT<FieldElem> r(series.order);
  for (int k = 0; k <= series.order; ++k) {
    for (const auto& [m, c] : series.coeffs[k].terms()) {
      FieldElem coeff = FieldElem::scalar(field, c);
      Monomial out;
      for (const auto& [s, e] : m) {
        if (s.kind == Symbol::Kind::H) {
          coeff *= a.pow(static_cast<unsigned>(s.index * e));
          out = monomialProduct(out, {{Symbol::hEval(s.root), e}});
        } else {
          out = monomialProduct(out, {{s, e}});
        }
      }
      r.coeffs[k].addTerm(out, coeff);
    }
  }
  return r;
}

TruncSeries evalAtSymbol(const TruncSeries& series, const std::string& point) {
  return mapSeries(series, evalImages(series, [&point](const Symbol& s) {
                     SymPoly img = SymPoly::symbol(Symbol::hEval(s.root), Rational(1));
                     const SymPoly p = SymPoly::symbol(Symbol::point(point), Rational(1));
                     for (int k = 0; k < s.index; ++k) img = img * p;
                     return img;
                   }));
}

SymPoly binomialPoly(const Symbol& h, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative binomial index");
  SymPoly r = one();
  const SymPoly x = SymPoly::symbol(h, Rational(1));
  for (int j = 0; j < k; ++j) r = r * (x - SymPoly::constant(Rational(j))).scaled(Rational(1, j + 1));
  return r;
}

bool evLambdaCheck(const std::string& root, int r, const Rational& a) {
  const TruncSeries ev = evalAt(lambdaFromH(root, r), a);
  const SymPoly expected = binomialPoly(Symbol::hEval(root), r).scaled(pow(-a, static_cast<unsigned>(r)));
  return ev.coeffs[r] == expected;
}

bool evLambdaCheck(const std::string& root, int r, const FieldElem& a) {
  const auto ev = evalAt(lambdaFromH(root, r), a);
  const SymPoly b = binomialPoly(Symbol::hEval(root), r);
  SymPolyT<FieldElem> expected;
  const FieldElem scale = (-a).pow(static_cast<unsigned>(r));
  for (const auto& [m, c] : b.terms()) expected.addTerm(m, scale * c);
  return ev.coeffs[r] == expected;
}

bool evLambdaCheckSymbolic(const std::string& root, int r) {
  const TruncSeries ev = evalAtSymbol(lambdaFromH(root, r), "a");
  SymPoly expected = binomialPoly(Symbol::hEval(root), r).scaled(Rational(r % 2 == 0 ? 1 : -1));
  const SymPoly p = SymPoly::symbol(Symbol::point("a"), Rational(1));
  for (int k = 0; k < r; ++k) expected = expected * p;
  return ev.coeffs[r] == expected;
}

TruncSeries hSeries(const std::string& root, int order) { return evalAt(lambdaFromH(root, order), Rational(-1)); }

bool hSeriesCheck(const std::string& root, int order) {
  const TruncSeries h = hSeries(root, order);
  for (int k = 0; k <= order; ++k) {
    if (h.coeffs[k] != binomialPoly(Symbol::hEval(root), k)) return false;
  }
  return true;
}

std::vector<SeriesCheck> runSeriesChecks(const RootSystem& rs, int order) {
  requireOrder(order);
  std::vector<SeriesCheck> out;
  const std::string a1 = simpleTag(rs.rank(), 0);
  out.push_back({"lambda/h round trip", roundTripIdentity(a1, order)});
  for (const auto& alpha : rs.positiveRoots()) {
    out.push_back({"lambda_" + rootTag(alpha) + " from simples", lambdaAlphaIdentity(rs, alpha, order)});
  }
  bool evRat = true, evSym = true;
  for (int r = 1; r <= order; ++r) {
    evRat = evRat && evLambdaCheck(a1, r, Rational(2)) && evLambdaCheck(a1, r, Rational(-3, 2));
    evSym = evSym && evLambdaCheckSymbolic(a1, r);
  }
  out.push_back({"ev_a lambda coefficients (rational a)", evRat});
  out.push_back({"ev_a lambda coefficients (symbolic a)", evSym});
  out.push_back({"H(u) coefficients are binomials", hSeriesCheck(a1, order)});

  const TruncSeries lam = lambdaFromH(a1, order);
  TruncSeries unit(order);
  unit.coeffs[0] = one();
  out.push_back({"antipode inverts lambda", lam * seriesInverse(lam) == unit && seriesInverse(seriesInverse(lam)) == lam});

  bool twistOk = true;
  for (int k = 2; k <= 3; ++k) {
    const Rational a(2);
    twistOk = twistOk && evalAt(twist(lam, k), a) == evalAt(lam, pow(a, static_cast<unsigned>(k)));
  }
  twistOk = twistOk && twist(twist(lam, 2), 3) == twist(lam, 6);
  out.push_back({"twist composes with evaluation", twistOk});
  return out;
}

}  // namespace loopreps
