#pragma once

#include <random>
#include <vector>

#include "loopreps/error.hpp"
#include "loopreps/lweight.hpp"

namespace loopreps::testing {

inline PolyQ P(std::initializer_list<Rational> c) { return PolyQ(c); }

/// Q(i): t^2 + 1, automorphisms t and -t.
inline ContextPtr gaussian(std::vector<int> h = {0, 1}) {
  return GaloisContext::build(P({1, 0, 1}), {P({0, 1}), P({0, -1})}, std::move(h));
}

/// Q(i, √2) with θ = i + √2: t^4 - 2t^2 + 9. Order of automorphisms:
/// id, i -> -i, √2 -> -√2, θ -> -θ.
inline ContextPtr gaussianSqrt2(std::vector<int> h = {0, 1, 2, 3}) {
  return GaloisContext::build(P({9, 0, -2, 0, 1}),
                              {P({0, 1}), P({0, Rational(2, 3), 0, Rational(-1, 3)}),
                               P({0, Rational(-2, 3), 0, Rational(1, 3)}), P({0, -1})},
                              std::move(h));
}

/// Q(ζ5): t^4 + t^3 + t^2 + t + 1, automorphisms t -> t^k for k = 1, 2, 3, 4.
inline ContextPtr cyclotomic5(std::vector<int> h = {0, 1, 2, 3}) {
  return GaloisContext::build(P({1, 1, 1, 1, 1}),
                              {P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1}), P({-1, -1, -1, -1})}, std::move(h));
}

inline FieldElem elem(const ContextPtr& ctx, std::vector<Rational> coords) {
  coords.resize(ctx->degree(), Rational(0));
  return ctx->element(coords);
}

/// i inside Q(i) or Q(i, √2).
inline FieldElem imagUnit(const ContextPtr& ctx) {
  if (ctx->degree() == 2) return elem(ctx, {0, 1});
  return elem(ctx, {0, Rational(1, 6), 0, Rational(1, 6)});
}

inline FieldElem sqrt2(const ContextPtr& ctx) { return elem(ctx, {0, Rational(5, 6), 0, Rational(-1, 6)}); }

inline FieldElem rat(const ContextPtr& ctx, Rational r) { return FieldElem::scalar(ctx->field(), r); }

/// Π (1 - a u)^e on node 0.
inline LWeight lw(const ContextPtr& ctx, const RootSystemPtr& rs, std::vector<std::pair<FieldElem, int>> factors) {
  std::vector<LFactor> fs;
  for (auto& [a, e] : factors) fs.push_back({0, a, e});
  return LWeight::fromFactors(ctx, rs, fs);
}

/// Random nonzero element with small integer coordinates.
inline FieldElem randomPoint(const ContextPtr& ctx, std::mt19937& rng, int span = 2) {
  std::uniform_int_distribution<int> d(-span, span);
  for (;;) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < ctx->degree(); ++k) c.emplace_back(d(rng));
    FieldElem a = ctx->element(c);
    if (!a.isZero()) return a;
  }
}

/// Random dominant ℓ-weight: 0-3 factors, exponents 1-2, nodes anywhere.
inline LWeight randomDominant(const ContextPtr& ctx, const RootSystemPtr& rs, std::mt19937& rng, int maxFactors = 3,
                              int maxExp = 2) {
  std::uniform_int_distribution<int> nf(0, maxFactors), ex(1, maxExp);
  std::uniform_int_distribution<int> node(0, static_cast<int>(rs->rank()) - 1);
  std::vector<LFactor> fs;
  const int n = nf(rng);
  for (int k = 0; k < n; ++k) fs.push_back({node(rng), randomPoint(ctx, rng), ex(rng)});
  return LWeight::fromFactors(ctx, rs, fs);
}

}  // namespace loopreps::testing
