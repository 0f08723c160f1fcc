#include <functional>

#include "doctest.h"
#include "loopreps/error.hpp"
#include "loopreps/rootsystem.hpp"

using namespace loopreps;

namespace {

Weight W(std::vector<int> c) { return Weight(std::move(c)); }

Weight fundamental(std::size_t rank, std::size_t i) {
  std::vector<int> c(rank, 0);
  c[i] = 1;
  return W(c);
}

std::vector<Weight> dominantUpTo(std::size_t rank, int total) {
  std::vector<Weight> out;
  std::vector<int> c(rank, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == rank) {
      out.push_back(W(c));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

ErrorCode errorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;  // sentinel: nothing thrown
}

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4",
                                         "D5", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("positive root counts") {
  const std::map<std::string, std::size_t> expected = {
      {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},   {"B3", 9},  {"B4", 16}, {"C3", 9},
      {"C4", 16}, {"D4", 12}, {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& t : kTypes) {
    auto rs = RootSystem::build(t);
    CHECK(rs->positiveRoots().size() == expected.at(t));
    // the highest root is dominant and the adjoint representation has dim |Φ| + rank
    const Weight theta = rs->highestRootWeight();
    CHECK(theta.isDominant());
    CHECK(rs->weylDim(theta) == static_cast<std::int64_t>(2 * expected.at(t) + rs->rank()));
  }
  CHECK(errorOf([] { RootSystem::build("H3"); }) == ErrorCode::UnknownType);
  CHECK(errorOf([] { RootSystem::build("D3"); }) == ErrorCode::UnknownType);
}

TEST_CASE("Weyl dimensions of fundamental representations") {
  struct Row {
    std::string type;
    std::size_t node;
    std::int64_t dim;
  };
  const std::vector<Row> rows = {{"A2", 0, 3},  {"A3", 1, 6},   {"B2", 0, 5},  {"B2", 1, 4},   {"B3", 0, 7},
                                 {"B3", 2, 8},  {"C3", 0, 6},   {"C3", 1, 14}, {"C3", 2, 14},  {"D4", 0, 8},
                                 {"D4", 1, 28}, {"D4", 3, 8},   {"E6", 0, 27}, {"E6", 1, 78},  {"E7", 6, 56},
                                 {"E7", 0, 133}, {"E8", 7, 248}, {"E8", 0, 3875}, {"F4", 3, 26}, {"F4", 0, 52},
                                 {"G2", 0, 7},  {"G2", 1, 14}};
  for (const auto& r : rows) {
    auto rs = RootSystem::build(r.type);
    CAPTURE(r.type);
    CAPTURE(r.node);
    CHECK(rs->weylDim(fundamental(rs->rank(), r.node)) == r.dim);
  }
  auto a2 = RootSystem::build("A2");
  CHECK(a2->weylDim(W({1, 1})) == 8);
  CHECK(a2->weylDim(W({2, 0})) == 6);
  CHECK(errorOf([&] { a2->weylDim(W({-1, 0})); }) == ErrorCode::NotDominant);
}

TEST_CASE("Freudenthal multiplicities") {
  auto a2 = RootSystem::build("A2");
  const WeightMults adj = a2->weightMults(W({1, 1}));
  CHECK(adj.size() == 7);
  CHECK(adj.at(W({0, 0})) == 2);
  CHECK(adj.at(W({2, -1})) == 1);
  auto b2 = RootSystem::build("B2");
  CHECK(b2->weightMults(W({0, 1})).size() == 4);
  auto g2 = RootSystem::build("G2");
  CHECK(g2->weightMults(W({1, 0})).at(W({0, 0})) == 1);
  CHECK(g2->weightMults(W({0, 1})).at(W({0, 0})) == 2);

  // Σ mult = Weyl dimension, and the multiplicities are Weyl-invariant
  for (const auto& t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(t);
    for (const auto& lam : dominantUpTo(rs->rank(), rs->rank() <= 2 ? 4 : 2)) {
      const WeightMults m = rs->weightMults(lam);
      std::int64_t total = 0;
      for (const auto& [mu, k] : m) {
        total += k;
        for (std::size_t i = 0; i < rs->rank(); ++i) {
          const auto it = m.find(rs->reflect(i, mu));
          REQUIRE(it != m.end());
          CHECK(it->second == k);
        }
      }
      CAPTURE(t);
      CAPTURE(lam.str());
      CHECK(total == rs->weylDim(lam));
    }
  }
}

TEST_CASE("tensor products of simple-algebra modules") {
  auto a1 = RootSystem::build("A1");
  CHECK(a1->tensorDecomposeG(W({1}), W({1})) == std::map<Weight, std::int64_t>{{W({0}), 1}, {W({2}), 1}});
  CHECK(a1->tensorDecomposeG(W({3}), W({2})) ==
        std::map<Weight, std::int64_t>{{W({1}), 1}, {W({3}), 1}, {W({5}), 1}});
  auto a2 = RootSystem::build("A2");
  CHECK(a2->tensorDecomposeG(W({1, 0}), W({0, 1})) == std::map<Weight, std::int64_t>{{W({0, 0}), 1}, {W({1, 1}), 1}});
  CHECK(a2->tensorDecomposeG(W({1, 0}), W({1, 0})) == std::map<Weight, std::int64_t>{{W({0, 1}), 1}, {W({2, 0}), 1}});
  // adjoint ⊗ adjoint = 27 + 10 + 10bar + 8 + 8 + 1
  CHECK(a2->tensorDecomposeG(W({1, 1}), W({1, 1})) ==
        std::map<Weight, std::int64_t>{
            {W({2, 2}), 1}, {W({3, 0}), 1}, {W({0, 3}), 1}, {W({1, 1}), 2}, {W({0, 0}), 1}});
  auto g2 = RootSystem::build("G2");
  CHECK(g2->tensorDecomposeG(W({1, 0}), W({1, 0})) ==
        std::map<Weight, std::int64_t>{{W({2, 0}), 1}, {W({0, 1}), 1}, {W({1, 0}), 1}, {W({0, 0}), 1}});
  // dimension count on every pair for B3
  auto b3 = RootSystem::build("B3");
  for (const auto& x : dominantUpTo(3, 1)) {
    for (const auto& y : dominantUpTo(3, 1)) {
      std::int64_t sum = 0;
      for (const auto& [nu, m] : b3->tensorDecomposeG(x, y)) sum += m * b3->weylDim(nu);
      CHECK(sum == b3->weylDim(x) * b3->weylDim(y));
    }
  }
}

TEST_CASE("duality and the form") {
  CHECK(RootSystem::build("A2")->w0Negate(W({1, 0})) == W({0, 1}));
  CHECK(RootSystem::build("A3")->w0Negate(W({1, 2, 0})) == W({0, 2, 1}));
  CHECK(RootSystem::build("B2")->w0Negate(W({1, 3})) == W({1, 3}));
  CHECK(RootSystem::build("D4")->w0Negate(W({0, 0, 1, 0})) == W({0, 0, 1, 0}));
  CHECK(RootSystem::build("D5")->w0Negate(W({0, 0, 0, 1, 0})) == W({0, 0, 0, 0, 1}));
  CHECK(RootSystem::build("E6")->w0Negate(W({1, 0, 0, 0, 0, 0})) == W({0, 0, 0, 0, 0, 1}));
  CHECK(RootSystem::build("E7")->w0Negate(W({0, 0, 0, 0, 0, 0, 1})) == W({0, 0, 0, 0, 0, 0, 1}));
  CHECK(errorOf([] { RootSystem::build("A2")->w0Negate(W({-1, 0})); }) == ErrorCode::NotDominant);

  auto g2 = RootSystem::build("G2");
  CHECK(g2->innerProduct(g2->simpleRootWeight(0), g2->simpleRootWeight(0)) == Rational(2));
  CHECK(g2->innerProduct(g2->simpleRootWeight(1), g2->simpleRootWeight(1)) == Rational(6));
  CHECK(g2->rootLength({3, 2}) == 3);
  CHECK(g2->corootCoeffs({3, 2}) == std::vector<int>{1, 2});
  CHECK(g2->corootCoeffs({2, 1}) == std::vector<int>{2, 3});
  CHECK(errorOf([&] { g2->corootCoeffs({1, 2}); }) == ErrorCode::NotARoot);

  auto a2 = RootSystem::build("A2");
  CHECK(a2->height(W({1, 1})) == Rational(2));
  CHECK(a2->height(W({1, 0})) == Rational(1));
}

TEST_CASE("P/Q classes") {
  const std::map<std::string, std::vector<std::int64_t>> expected = {
      {"A1", {2}}, {"A2", {3}}, {"A4", {5}}, {"B3", {2}}, {"C4", {2}}, {"D4", {2, 2}}, {"D5", {4}},
      {"E6", {3}}, {"E7", {2}}, {"E8", {}},  {"F4", {}},  {"G2", {}}};
  for (const auto& [t, f] : expected) CHECK(RootSystem::build(t)->pqFactors() == f);
  auto a2 = RootSystem::build("A2");
  CHECK(a2->pqClass(W({1, 0})) == PQClass{1});
  CHECK(a2->pqClass(W({0, 1})) == PQClass{2});
  CHECK(a2->pqClass(W({1, 1})) == PQClass{0});
  // the class is additive and kills the root lattice
  auto d4 = RootSystem::build("D4");
  for (const auto& x : dominantUpTo(4, 2)) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(d4->pqClass(x + d4->simpleRootWeight(i)) == d4->pqClass(x));
  }
  CHECK(RootSystem::build("G2")->pqClass(W({3, 1})).empty());
}

TEST_CASE("linkage") {
  auto a1 = RootSystem::build("A1");
  CHECK(a1->directlyLinked(W({0}), W({2})));
  CHECK(a1->directlyLinked(W({2}), W({2})));
  CHECK_FALSE(a1->directlyLinked(W({0}), W({0})));
  CHECK_FALSE(a1->directlyLinked(W({0}), W({4})));
  auto a2 = RootSystem::build("A2");
  const auto chain = a2->linkChain(W({3, 0}), W({0, 0}), 10);
  CHECK(chain.front() == W({0, 0}));
  CHECK(chain.back() == W({3, 0}));
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) CHECK(a2->directlyLinked(chain[k], chain[k + 1]));
  CHECK(errorOf([&] { a2->linkChain(W({1, 0}), W({0, 1}), 10); }) == ErrorCode::NotSameClass);
  CHECK(errorOf([&] { a1->linkChain(W({20}), W({0}), 2); }) == ErrorCode::SearchExhausted);
  CHECK(a1->linkChain(W({2}), W({2}), 0) == std::vector<Weight>{W({2})});
}
