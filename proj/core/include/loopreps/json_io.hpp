#pragma once

#include <nlohmann/json.hpp>

#include "loopreps/error.hpp"
#include "loopreps/galois.hpp"
#include "loopreps/lweight.hpp"
#include "loopreps/matrix.hpp"
#include "loopreps/repclass.hpp"
#include "loopreps/specchar.hpp"

namespace loopreps::json {

using nlohmann::json;

// Readers throw Error(ParseError) on shape problems; value problems surface as
// the owning module's errors.

/// "p/q", or "p" when q = 1. Readers also take plain integers.
json toJson(const Rational& r);
Rational rationalFromJson(const json& j);

/// Ascending coefficient array of rational strings.
json toJson(const PolyQ& p);
PolyQ polyFromJson(const json& j);

/// {"modulus": [...], "automorphisms": [[...], ...], "subgroup": [...]}
json toJson(const GaloisContext& ctx);
ContextPtr contextFromJson(const json& j);

/// Full-length coordinate array in the power basis of the generator.
json toJson(const FieldElem& a);
FieldElem fieldElemFromJson(const ContextPtr& ctx, const json& j);

json toJson(const Weight& w);
Weight weightFromJson(const json& j);

/// [{"node": i (1-based), "point": [...], "exp": e}, ...] in factor order.
json toJson(const LWeight& w);
LWeight lweightFromJson(const ContextPtr& ctx, const RootSystemPtr& rs, const json& j);

/// [{"class": ..., "degree": d, "dimK": n, "mult": m}, ...]
json toJson(const Decomposition& d);

/// [{"point": [...], "class": [...]}, ...]
json toJson(const SpectralCharacter& chi);

/// Rows of entries, each entry a coordinate array.
json toJson(const MatrixL& m);

}  // namespace loopreps::json
