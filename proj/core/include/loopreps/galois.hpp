#pragma once

#include <memory>
#include <vector>

#include "loopreps/matrix.hpp"
#include "loopreps/number_field.hpp"
#include "loopreps/poly.hpp"

namespace loopreps {

/// Set of group-element indices, sorted ascending, containing 0 (identity).
struct Subgroup {
  std::vector<int> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(int g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// A Galois number field L/Q with its declared automorphism group G and a
/// subgroup H; K = L^H is the base field. The caller declares G and H, the
/// constructor verifies them.
class GaloisContext {
 public:
  /// Validates every context invariant. Errors: NotARoot, NotClosed,
  /// WrongOrder, FixedFieldTooBig, BadSubgroup, InvalidArgument.
  static std::shared_ptr<const GaloisContext> build(const PolyQ& modulus, const std::vector<PolyQ>& autImages,
                                                    std::vector<int> subgroup);

  const FieldPtr& field() const { return field_; }
  std::size_t degree() const { return field_->degree(); }
  std::size_t groupOrder() const { return images_.size(); }
  const FieldElem& image(int g) const { return images_[static_cast<std::size_t>(g)]; }
  const std::vector<PolyQ>& imagePolys() const { return imagePolys_; }

  /// Index of g∘h.
  int compose(int g, int h) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inverse(int g) const;

  const Subgroup& subgroupH() const { return subgroupH_; }
  Subgroup fullGroup() const;
  /// [K:Q] = |G| / |H|.
  std::size_t baseDegree() const { return groupOrder() / subgroupH_.size(); }

  FieldElem applyAut(int g, const FieldElem& a) const;
  /// {g(a) : g in S}, sorted and deduplicated.
  std::vector<FieldElem> orbit(const Subgroup& s, const FieldElem& a) const;
  Subgroup stabilizer(const Subgroup& s, const FieldElem& a) const;
  std::size_t fixedSpaceDim(const Subgroup& s) const;
  /// Q-basis of the subfield fixed by S.
  std::vector<FieldElem> fixedSpaceBasis(const Subgroup& s) const;
  /// One representative g of each left coset g*T inside S, smallest index
  /// first (T must be a subgroup of S).
  std::vector<int> leftCosetReps(const Subgroup& s, const Subgroup& t) const;
  bool isSubgroup(const std::vector<int>& elements) const;

  FieldElem element(const std::vector<Rational>& coords) const { return FieldElem(field_, coords); }

 private:
  GaloisContext() = default;
  MatrixQ fixedSystem(const Subgroup& s) const;

  FieldPtr field_;
  std::vector<PolyQ> imagePolys_;
  std::vector<FieldElem> images_;
  std::vector<MatrixQ> actions_;  // actions_[g][i][k]: coordinate i of g(t^k)
  std::vector<std::vector<int>> table_;
  Subgroup subgroupH_;
};

using ContextPtr = std::shared_ptr<const GaloisContext>;

}  // namespace loopreps
