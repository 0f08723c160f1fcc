#pragma once

#include <map>
#include <vector>

#include "loopreps/lweight.hpp"

namespace loopreps {

/// Image of an ℓ-weight in P_F/Q_F, stored pointwise: spectral point -> nonzero
/// class in P/Q.
struct SpectralCharacter {
  std::map<FieldElem, PQClass> entries;

  friend bool operator==(const SpectralCharacter&, const SpectralCharacter&) = default;
};

/// Accepts non-dominant ℓ-weights.
SpectralCharacter spectralCharacter(const LWeight& w);

/// Some h ∈ H carries χ1 onto χ2: χ2(h(a)) = χ1(a) for every point a.
bool equivalentChars(const GaloisContext& ctx, const SpectralCharacter& chi1, const SpectralCharacter& chi2);

bool sameBlock(const LWeight& a, const LWeight& b);

/// Groups dominant ℓ-weights by block. Members keep input order; groups are
/// ordered by their least class key.
std::vector<std::vector<LWeight>> partitionBlocks(const std::vector<LWeight>& weights);

}  // namespace loopreps
