#pragma once

#include <map>
#include <utility>
#include <vector>

#include "loopreps/lweight.hpp"
#include "loopreps/matrix.hpp"

namespace loopreps {

/// The irreducible K[X]-module attached to a dominant ℓ-weight, realised as
/// the field K(ω) with power basis 1, t, ..., t^{d-1} of a primitive element t.
/// Generator matrices act on that basis: column k holds the coordinates of
/// (generator value) * t^k. Entries are elements of L certified fixed by H.
struct KXModule {
  LWeight lweight;
  Subgroup stabilizer;           // Stab_H of the full coefficient tuple
  FieldElem primitive;
  std::size_t dim = 0;           // [H : stabilizer]
  std::vector<int> cosetReps;    // σ_0 = id, ..., σ_{d-1}
  /// (node, power-series index r >= 1) -> coefficient of u^r in ω_node(u).
  std::map<std::pair<int, int>, FieldElem> generatorValues;
  std::map<std::pair<int, int>, MatrixL> generatorMatrices;
  MatrixL primitiveMatrix;
};

/// Throws NotDominant, PrimitiveSearchFailed, or CertificateFailed.
KXModule buildKXModule(const LWeight& w);

/// Multiplication-by-s matrix on the module's power basis.
MatrixL multiplicationMatrix(const KXModule& m, const FieldElem& s);

/// Every entry is fixed by every element of H.
bool isFixedByH(const GaloisContext& ctx, const MatrixL& m);

/// charpoly of the (node, index) generator equals Π_j (u - σ_j(s)).
bool charPolySplitCheck(const KXModule& m, int node, int index);

/// K(a) ≅ K(b): class keys agree; cross-checked against a direct search for
/// h ∈ H conjugating the coefficient tuples.
bool isoTest(const LWeight& a, const LWeight& b);

struct EmbeddingRank {
  std::size_t rank = 0;
  bool injective = false;
};

/// Rank over K of K(a) ⊗_K K(b) -> L, a⊗b -> ab.
EmbeddingRank tensorEmbeddingRank(const LWeight& a, const LWeight& b);

}  // namespace loopreps
