#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "loopreps/rational.hpp"
#include "loopreps/smith.hpp"

namespace loopreps {

/// Integral weight in the fundamental-weight basis: coords[i] = λ(h_i).
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return coords.size(); }
  bool isDominant() const;
  bool isZero() const;
  int operator[](std::size_t i) const { return coords[i]; }

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(int k, const Weight& w);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "(1,0,2)"
  std::string str() const;
};

/// Residues of a weight in P/Q, one per nontrivial invariant factor.
using PQClass = std::vector<std::int64_t>;

using WeightMults = std::map<Weight, std::int64_t>;

/// Simple Lie algebra combinatorics for types A_n..G_2 in Bourbaki labelling.
/// Root lengths are normalised so short roots have d = <α,α>/2 = 1.
class RootSystem {
 public:
  /// Accepts "A1".."A<n>", "B2"+, "C2"+, "D4"+, "E6", "E7", "E8", "F4", "G2".
  /// Throws UnknownType.
  static std::shared_ptr<const RootSystem> build(std::string_view type);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return lengths_.size(); }
  /// cartan()[i][j] = α_j(h_i).
  const IntMatrix& cartan() const { return cartan_; }
  /// d_{α_i}; short simple roots have 1.
  const std::vector<std::int64_t>& simpleLengths() const { return lengths_; }
  /// Positive roots in simple-root coordinates, by height then lexicographically.
  const std::vector<std::vector<int>>& positiveRoots() const { return roots_; }
  const std::vector<int>& highestRoot() const { return roots_.back(); }
  const SmithForm& pqDiagonal() const { return smith_; }
  /// Invariant factors of P/Q greater than 1.
  const std::vector<std::int64_t>& pqFactors() const { return pqFactors_; }

  bool isPositiveRoot(const std::vector<int>& alpha) const;
  /// d_α = <α,α>/2. Throws NotARoot.
  std::int64_t rootLength(const std::vector<int>& alpha) const;
  /// m_i^∨ = (d_{α_i}/d_α) m_i. Throws NotARoot.
  std::vector<int> corootCoeffs(const std::vector<int>& alpha) const;
  /// Expresses a root-lattice element (simple-root coordinates) as a weight.
  Weight rootToWeight(const std::vector<int>& alpha) const;
  Weight simpleRootWeight(std::size_t i) const;
  Weight highestRootWeight() const { return rootToWeight(highestRoot()); }
  /// Sum of simple-root coordinates (rational for general weights).
  Rational height(const Weight& w) const;
  /// (λ, μ) for the invariant form with short roots of squared length 2.
  Rational innerProduct(const Weight& a, const Weight& b) const;

  Weight reflect(std::size_t i, const Weight& w) const;
  /// -w0(μ) for dominant μ. Throws NotDominant.
  Weight w0Negate(const Weight& mu) const;

  /// Weyl dimension formula. Throws NotDominant, Overflow.
  std::int64_t weylDim(const Weight& lambda) const;
  /// Freudenthal multiplicities of every weight of V(λ). Throws NotDominant.
  WeightMults weightMults(const Weight& lambda) const;
  /// V(λ)⊗V(μ) by highest-weight peeling of the character product.
  std::map<Weight, std::int64_t> tensorDecomposeG(const Weight& lambda, const Weight& mu) const;

  PQClass pqClass(const Weight& mu) const;

  /// V(μ) occurs in g ⊗ V(λ).
  bool directlyLinked(const Weight& lambda, const Weight& mu) const;
  /// Chain μ = μ_0, ..., μ_m = λ of directly linked dominant weights.
  /// Throws NotSameClass or SearchExhausted.
  std::vector<Weight> linkChain(const Weight& lambda, const Weight& mu, int maxSteps) const;

  void requireDominant(const Weight& w) const;

 private:
  RootSystem() = default;
  void checkRank(const Weight& w) const;
  std::shared_ptr<const WeightMults> cachedMults(const Weight& lambda) const;
  WeightMults freudenthal(const Weight& lambda) const;

  std::string name_;
  IntMatrix cartan_;
  IntMatrix form_;  // form_[i][j] = (α_i, α_j)
  std::vector<std::int64_t> lengths_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<Rational>> inverseCartan_;
  SmithForm smith_;
  std::vector<std::int64_t> pqFactors_;
  std::vector<std::size_t> pqRows_;
  std::vector<std::int64_t> pqScale_;

  struct Cache {
    std::mutex mutex;
    std::map<Weight, std::shared_ptr<const WeightMults>> mults;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace loopreps
