#include "doctest.h"
#include "loopreps/series.hpp"
#include "support/fixtures.hpp"

using namespace loopreps;
using namespace loopreps::testing;

namespace {

SymPoly sym(const Symbol& s) { return SymPoly::symbol(s, Rational(1)); }
SymPoly c(Rational r) { return SymPoly::constant(r); }

}  // namespace

TEST_CASE("print format") {
  CHECK(lambdaFromH("a", 2).str() == "1 + (-h[a,1])·u + ((1/2)h[a,1]^2 - (1/2)h[a,2])·u^2");
  CHECK(binomialPoly(Symbol::hEval("a1"), 2).str() == "(1/2)h[a1]^2 - (1/2)h[a1]");
  CHECK(SymPoly().str() == "0");
  CHECK((sym(Symbol::h("a", 1)) * sym(Symbol::h("a", 2))).scaled(Rational(3)).str() == "3h[a,1]*h[a,2]");
}

TEST_CASE("Garland coefficients") {
  const auto h1 = sym(Symbol::h("a", 1)), h2 = sym(Symbol::h("a", 2)), h3 = sym(Symbol::h("a", 3));
  const TruncSeries lam = lambdaFromH("a", 3);
  // exp(-h1 u - h2 u^2/2 - h3 u^3/3), expanded by hand
  CHECK(lam.coeffs[3] == (h1 * h1 * h1).scaled(Rational(-1, 6)) + (h1 * h2).scaled(Rational(1, 2)) +
                             h3.scaled(Rational(-1, 3)));
  // Newton identities: h_1 = -L1, h_2 = L1^2 - 2 L2
  const auto L1 = sym(Symbol::lambda("a", 1)), L2 = sym(Symbol::lambda("a", 2)), L3 = sym(Symbol::lambda("a", 3));
  const auto hs = hFromLambda(lambdaSymbolic("a", 3));
  CHECK(hs[0] == c(0) - L1);
  CHECK(hs[1] == L1 * L1 - L2.scaled(Rational(2)));
  CHECK(hs[2] == L3.scaled(Rational(-3)) + (L1 * L2).scaled(Rational(3)) - L1 * L1 * L1);
  for (int n = 1; n <= 8; ++n) CHECK(roundTripIdentity("a", n));
}

TEST_CASE("exp, log and the antipode") {
  const TruncSeries s = lambdaSymbolic("b", 6);
  CHECK(seriesExp(seriesLog(s)) == s);
  TruncSeries unit(6);
  unit.coeffs[0] = c(1);
  CHECK(s * seriesInverse(s) == unit);
  TruncSeries bad(3);
  bad.coeffs[0] = c(2);
  CHECK_THROWS_AS(seriesInverse(bad), Error);
  CHECK_THROWS_AS(seriesLog(bad), Error);
  CHECK_THROWS_AS(hFromLambda(TruncSeries(3)), Error);
  try {
    seriesInverse(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadConstantTerm);
  }
  CHECK(seriesPow(s, 0) == unit);
  CHECK(seriesInverse(seriesInverse(s)) == s);
  CHECK(seriesInverse(unit) == unit);
  const TruncSeries lam = lambdaFromH("a", 8);
  CHECK(seriesInverse(seriesInverse(lam)) == lam);
  CHECK(seriesPow(s, 2) == s * s);
}

TEST_CASE("evaluation maps") {
  const TruncSeries lam = lambdaFromH("a", 5);
  try {
    evalAt(lam, Rational(0));
    FAIL("expected ZeroPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPoint);
  }
  // ev_a(Λ)(u) = (1 - a u)^{h}: check against the binomial series directly
  const TruncSeries ev = evalAt(lam, Rational(1, 2));
  for (int r = 0; r <= 5; ++r) {
    CHECK(ev.coeffs[r] == binomialPoly(Symbol::hEval("a"), r).scaled(pow(Rational(-1, 2), static_cast<unsigned>(r))));
  }
  CHECK(evalAt(lambdaFromH("a", 3), Rational(1)).coeffs[3] == binomialPoly(Symbol::hEval("a"), 3).scaled(Rational(-1)));
  for (int r = 1; r <= 6; ++r) {
    CHECK(evLambdaCheck("a", r, Rational(-2)));
    CHECK(evLambdaCheckSymbolic("a", r));
    CHECK(evLambdaCheck("a", r, FieldElem::generator(cyclotomic5()->field())));
  }
  // field-valued series still invert
  auto ctx = gaussian();
  const auto evi = evalAt(lam, imagUnit(ctx));
  TruncSeriesT<FieldElem> unit(5);
  unit.coeffs[0] = SymPolyT<FieldElem>::constant(rat(ctx, 1));
  CHECK(evi * seriesInverse(evi) == unit);
  CHECK(hSeriesCheck("a", 8));
}

TEST_CASE("twists") {
  const TruncSeries lam = lambdaFromH("a", 4);
  const TruncSeries t = twist(lam, 2);
  CHECK(t.coeffs[1] == c(0) - sym(Symbol::h("a", 2)));
  CHECK(twist(t, 3) == twist(lam, 6));
  CHECK(twist(lam, 1) == lam);
  const auto h2 = sym(Symbol::h("a", 2)), h4 = sym(Symbol::h("a", 4));
  CHECK(t.coeffs[2] == (h2 * h2 - h4).scaled(Rational(1, 2)));
  CHECK(evalAt(twist(lam, 3), Rational(2)) == evalAt(lam, Rational(8)));
  CHECK_THROWS_AS(twist(lam, 0), Error);
}

TEST_CASE("root series from simple ones") {
  auto a2 = RootSystem::build("A2");
  CHECK(lambdaAlphaFromSimples(*a2, {1, 1}, 4) == lambdaFromH("a1", 4) * lambdaFromH("a2", 4));
  auto b2 = RootSystem::build("B2");
  // α1 + 2α2 is long in B2 (α1 long): coroot coefficients (1, 1)
  CHECK(lambdaAlphaFromSimples(*b2, {1, 2}, 3) == lambdaFromH("a1", 3) * lambdaFromH("a2", 3));
  // α1 + α2 is short: coroot coefficients (2, 1)
  CHECK(lambdaAlphaFromSimples(*b2, {1, 1}, 3) ==
        lambdaFromH("a1", 3) * lambdaFromH("a1", 3) * lambdaFromH("a2", 3));
  CHECK_THROWS_AS(lambdaAlphaFromSimples(*b2, {2, 1}, 3), Error);
  CHECK(lambdaAlphaFromSimples(*b2, {0, 1}, 3) == lambdaFromH("a2", 3));
  auto g2 = RootSystem::build("G2");
  CHECK(lambdaAlphaFromSimples(*g2, {3, 2}, 3) == lambdaFromH("a1", 3) * lambdaFromH("a2", 3) * lambdaFromH("a2", 3));
  CHECK(rootTag({3, 2}) == "3a1+2a2");
  for (const char* t : {"A1", "A3", "B3", "C3", "D4", "F4", "G2"}) {
    auto rs = RootSystem::build(t);
    const auto checks = runSeriesChecks(*rs, 4);
    CHECK(checks.size() == rs->positiveRoots().size() + 6);
    for (const auto& chk : checks) {
      CAPTURE(chk.name);
      CHECK(chk.passed);
    }
  }
}
