#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "loopreps/lweight.hpp"

namespace loopreps {

/// Isomorphism class of an irreducible module over K, keyed by the conjugacy
/// class of its highest ℓ-weight.
struct IrrClass {
  IrrClassKey key;
  std::vector<LWeight> orbit;
  std::size_t degree = 0;
  Weight weight;
  std::int64_t dimF = 0;  // dimension of each conjugate irreducible over F
  std::int64_t dimK = 0;  // degree * dimF
};

struct Decomposition {
  std::vector<std::pair<IrrClass, std::int64_t>> parts;  // sorted by key, multiplicity >= 1

  std::int64_t totalDimK() const;
};

IrrClass classify(const LWeight& w);

/// Weyl module dimensions, type A1 only: 2^{wt(ω)} over F and deg(ω) times that over K.
std::int64_t dimWeylF(const LWeight& w);
std::int64_t dimWeylK(const LWeight& w);

/// V_F(a) ⊗ V_F(b) over the algebraic closure: map from dominant ℓ-weight to
/// multiplicity. Points shared by a and b are decomposed with the simple-algebra
/// tensor product; distinct points multiply freely.
std::map<LWeight, std::int64_t> tensorDecomposeF(const LWeight& a, const LWeight& b);

/// V_K(a) ⊗ V_K(b) by Galois descent of the F-level decomposition over all
/// conjugate pairs. Throws NotDominant or DescentInconsistency.
Decomposition tensorDecomposeK(const LWeight& a, const LWeight& b);

/// relativelyPrime(a, b) and deg(ab) = deg(a) deg(b).
bool tpIrreducibleCriterion(const LWeight& a, const LWeight& b);
/// Same predicate, for W_K(ab) ≅ W_K(a) ⊗ W_K(b).
bool wtpCriterion(const LWeight& a, const LWeight& b);

struct CompositumDegree {
  std::size_t degree = 0;  // |H| / |Stab_H(a) ∩ Stab_H(b)|
  bool chainHolds = false; // deg(ab) <= degree <= deg(a) deg(b)
};

CompositumDegree compositumDegree(const LWeight& a, const LWeight& b);

}  // namespace loopreps
