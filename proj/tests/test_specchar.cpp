#include <random>
#include <set>

#include "doctest.h"
#include "loopreps/repclass.hpp"
#include "loopreps/specchar.hpp"
#include "support/fixtures.hpp"

using namespace loopreps;
using namespace loopreps::testing;

TEST_CASE("character values") {
  auto ctx = gaussian();
  auto a1 = RootSystem::build("A1");
  const FieldElem i = imagUnit(ctx);
  const SpectralCharacter om = spectralCharacter(lw(ctx, a1, {{i, 1}, {-i, 1}}));
  CHECK(om.entries == std::map<FieldElem, PQClass>{{i, {1}}, {-i, {1}}});
  CHECK(spectralCharacter(lw(ctx, a1, {{i, 2}})).entries.empty());
  CHECK(spectralCharacter(LWeight(ctx, a1)).entries.empty());
  // non-dominant input: -ω1 ≡ ω1 mod 2
  CHECK(spectralCharacter(lw(ctx, a1, {{i, -1}})).entries == std::map<FieldElem, PQClass>{{i, {1}}});
  auto a2 = RootSystem::build("A2");
  CHECK(spectralCharacter(LWeight::evaluation(ctx, a2, Weight({0, 1}), i)).entries ==
        std::map<FieldElem, PQClass>{{i, {2}}});
}

TEST_CASE("equivalence of characters") {
  auto ctx = gaussian();
  auto a1 = RootSystem::build("A1");
  const FieldElem i = imagUnit(ctx);
  const LWeight w = lw(ctx, a1, {{i, 1}}), p = lw(ctx, a1, {{i * Rational(2), 1}});
  CHECK(sameBlock(lwMul(w, p), lwMul(w.conjugate(1), p.conjugate(1))));
  CHECK(sameBlock(lw(ctx, a1, {{i, 2}}), LWeight(ctx, a1)));
  CHECK_FALSE(sameBlock(lw(ctx, a1, {{i, 1}, {-i, 1}}), LWeight(ctx, a1)));
  // with H trivial the conjugate is no longer reachable
  auto ctx0 = gaussian({0});
  const LWeight w0 = lw(ctx0, a1, {{imagUnit(ctx0), 1}});
  CHECK_FALSE(sameBlock(w0, w0.conjugate(1)));
  CHECK_THROWS_AS(sameBlock(w, w0), Error);
}

TEST_CASE("block partitions") {
  auto ctx = gaussian();
  auto a1 = RootSystem::build("A1");
  const FieldElem i = imagUnit(ctx);
  const LWeight w = lw(ctx, a1, {{i, 1}}), p = lw(ctx, a1, {{i * Rational(2), 1}});
  const LWeight wc = w.conjugate(1), pc = p.conjugate(1);
  // the two K-summands of V(w) ⊗ V(p) sit in different blocks; only
  // H-translates share a character
  const auto four = partitionBlocks({lwMul(w, p), lwMul(wc, p), lwMul(w, pc), lwMul(wc, pc)});
  REQUIRE(four.size() == 2);
  std::set<std::vector<LWeight>> got(four.begin(), four.end());
  CHECK(got == std::set<std::vector<LWeight>>{{lwMul(w, p), lwMul(wc, pc)}, {lwMul(wc, p), lwMul(w, pc)}});
  CHECK_FALSE(sameBlock(lwMul(w, p), lwMul(wc, p)));
  CHECK(partitionBlocks({w}).size() == 1);
  const auto g = partitionBlocks({w, wc, lw(ctx, a1, {{i, 2}}), LWeight(ctx, a1)});
  REQUIRE(g.size() == 2);
  // least class key first: the identity's group
  CHECK(g[0] == std::vector<LWeight>{lw(ctx, a1, {{i, 2}}), LWeight(ctx, a1)});
  CHECK(g[1] == std::vector<LWeight>{w, wc});
  CHECK_THROWS_AS(partitionBlocks({lwInv(w)}), Error);
}

TEST_CASE("character properties on random samples") {
  std::mt19937 rng(51);
  const std::vector<std::pair<ContextPtr, RootSystemPtr>> setups = {
      {gaussian(), RootSystem::build("A3")},
      {cyclotomic5(), RootSystem::build("D4")},
      {gaussianSqrt2({0, 1}), RootSystem::build("E6")},
      {cyclotomic5({0, 3}), RootSystem::build("B2")}};
  for (int n = 0; n < 60; ++n) {
    const auto& [ctx, rs] = setups[n % setups.size()];
    const LWeight a = randomDominant(ctx, rs, rng), b = randomDominant(ctx, rs, rng);
    // homomorphism: pointwise sum in P/Q
    const SpectralCharacter ca = spectralCharacter(a), cb = spectralCharacter(b), cab = spectralCharacter(lwMul(a, b));
    std::map<FieldElem, PQClass> sum = ca.entries;
    for (const auto& [pt, cls] : cb.entries) {
      auto [it, fresh] = sum.try_emplace(pt, cls);
      if (!fresh) {
        for (std::size_t k = 0; k < cls.size(); ++k) {
          it->second[k] = (it->second[k] + cls[k]) % rs->pqFactors()[k];
        }
        if (std::all_of(it->second.begin(), it->second.end(), [](std::int64_t v) { return v == 0; })) sum.erase(it);
      }
    }
    CHECK(cab.entries == sum);
    for (int h : ctx->subgroupH().elements) CHECK(sameBlock(a, a.conjugate(h)));
    // every F-constituent of a tensor product shares the product's character
    if (rs->rank() <= 2) {
      for (const auto& [c, m] : tensorDecomposeF(a, b)) CHECK(spectralCharacter(c) == cab);
    }
  }
}
