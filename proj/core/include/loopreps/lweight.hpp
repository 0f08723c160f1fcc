#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loopreps/galois.hpp"
#include "loopreps/rootsystem.hpp"

namespace loopreps {

/// One factor (1 - a u)^exp of the i-th Drinfeld polynomial.
struct LFactor {
  int node = 0;  // 0-based; the JSON surface is 1-based
  FieldElem point;
  int exp = 0;
};

/// ℓ-weight in factored form: a finitely supported map (node, nonzero point
/// of L) -> nonzero integer exponent. Dominant iff every exponent is positive.
class LWeight {
 public:
  struct Key {
    int node;
    FieldElem point;
    friend bool operator==(const Key&, const Key&) = default;
    friend std::strong_ordering operator<=>(const Key& a, const Key& b) {
      if (auto c = a.node <=> b.node; c != 0) return c;
      return a.point <=> b.point;
    }
  };
  using FactorMap = std::map<Key, int>;

  /// The identity ℓ-weight.
  LWeight(ContextPtr ctx, RootSystemPtr rs);

  /// Throws ZeroPoint, InvalidArgument (node out of range) or ContextMismatch.
  static LWeight fromFactors(ContextPtr ctx, RootSystemPtr rs, const std::vector<LFactor>& factors);
  /// ω_{λ,a}: (1 - a u)^{λ(h_i)} at node i.
  static LWeight evaluation(ContextPtr ctx, RootSystemPtr rs, const Weight& lambda, const FieldElem& a);

  const ContextPtr& context() const { return ctx_; }
  const RootSystemPtr& rootSystem() const { return rs_; }
  const FactorMap& factors() const { return factors_; }
  std::vector<LFactor> factorList() const;

  bool isIdentity() const { return factors_.empty(); }
  bool isDominant() const;
  /// Spectral points carrying a nonzero exponent at some node.
  std::set<FieldElem> points() const;
  /// λ_a = (e(i, a))_i.
  Weight pointWeight(const FieldElem& a) const;
  std::map<FieldElem, Weight> pointWeights() const;

  /// g·ω: moves every spectral point by the automorphism g.
  LWeight conjugate(int g) const;

  void requireDominant() const;
  void requireCompatible(const LWeight& other) const;

  friend bool operator==(const LWeight& a, const LWeight& b) { return a.factors_ == b.factors_; }
  friend std::strong_ordering operator<=>(const LWeight& a, const LWeight& b);

  /// E.g. "(1 - (t)u)^2" for rank one, "(1 - (t)u)_2^3" with node subscripts otherwise.
  std::string str() const;

 private:
  void multiplyFactor(int node, const FieldElem& point, int exp);
  friend LWeight lwMul(const LWeight&, const LWeight&);
  friend LWeight lwInv(const LWeight&);

  ContextPtr ctx_;
  RootSystemPtr rs_;
  FactorMap factors_;
};

LWeight lwMul(const LWeight& a, const LWeight& b);
LWeight lwInv(const LWeight& a);

/// Σ_a λ_a; throws NotDominant.
Weight wt(const LWeight& w);

/// The global point sets of a and b are disjoint.
bool relativelyPrime(const LWeight& a, const LWeight& b);

/// {h ∈ H : h·ω = ω}.
Subgroup lweightStabilizer(const LWeight& w);

struct ConjugacyClass {
  std::vector<LWeight> orbit;  // sorted
  std::size_t degree = 0;
};

/// H-orbit of ω; degree = orbit size (characteristic zero).
ConjugacyClass conjClass(const LWeight& w);

struct IrrClassKey {
  LWeight canonicalRep;
  friend bool operator==(const IrrClassKey&, const IrrClassKey&) = default;
  friend auto operator<=>(const IrrClassKey& a, const IrrClassKey& b) { return a.canonicalRep <=> b.canonicalRep; }
};

IrrClassKey classKey(const LWeight& w);

/// ω = ω^K · ω̃ where ω^K collects the H-orbits of points on which every
/// node's exponent is constant.
std::pair<LWeight, LWeight> rationalSplit(const LWeight& w);

/// ω*: λ_a -> -w0 λ_a at each point.
LWeight dualLWeight(const LWeight& w);

/// Coefficients of ω_i(u) = Π (1 - a u)^{e(i,a)}, ascending; entry 0 is 1.
std::vector<FieldElem> expandCoeffs(const LWeight& w, int node);

}  // namespace loopreps
