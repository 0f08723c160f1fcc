#include "loopreps/kxmod.hpp"

#include "loopreps/error.hpp"
#include "loopreps/repclass.hpp"

namespace loopreps {

namespace {

// All weight vectors of length m with entry sum `total`, lexicographically descending.
void compositions(std::size_t m, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == m) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int c = total; c >= 0; --c) {
    cur.push_back(c);
    compositions(m, total - c, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<FieldElem>> coefficientTuple(const LWeight& w) {
  std::vector<std::vector<FieldElem>> out;
  for (std::size_t i = 0; i < w.rootSystem()->rank(); ++i) out.push_back(expandCoeffs(w, static_cast<int>(i)));
  return out;
}

}  // namespace

bool isFixedByH(const GaloisContext& ctx, const MatrixL& m) {
  for (const auto& e : m.entries()) {
    for (int h : ctx.subgroupH().elements) {
      if (ctx.applyAut(h, e) != e) return false;
    }
  }
  return true;
}

MatrixL multiplicationMatrix(const KXModule& m, const FieldElem& s) {
  const auto& ctx = *m.lweight.context();
  const std::size_t d = m.dim;
  MatrixL vander(ctx.field(), d, d);
  MatrixL diag(ctx.field(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const FieldElem tj = ctx.applyAut(m.cosetReps[j], m.primitive);
    FieldElem pw = FieldElem::one(ctx.field());
    for (std::size_t k = 0; k < d; ++k) {
      vander(j, k) = pw;
      pw = pw * tj;
    }
    diag(j, j) = ctx.applyAut(m.cosetReps[j], s);
  }
  // σ_j(s) σ_j(t^k) = Σ_l M_{lk} σ_j(t^l)  =>  M = V^{-1} D V
  return matInverseL(vander) * diag * vander;
}

KXModule buildKXModule(const LWeight& w) {
  w.requireDominant();
  const auto& ctx = *w.context();
  const auto& h = ctx.subgroupH();
  KXModule mod{w, {}, {}, 0, {}, {}, {}, {}};

  std::vector<FieldElem> values;
  const auto tuple = coefficientTuple(w);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t r = 1; r < tuple[i].size(); ++r) {
      mod.generatorValues.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(r)), tuple[i][r]);
      values.push_back(tuple[i][r]);
    }
  }
  for (int g : h.elements) {
    bool fixesAll = true;
    for (const auto& s : values) {
      if (ctx.applyAut(g, s) != s) {
        fixesAll = false;
        break;
      }
    }
    if (fixesAll) mod.stabilizer.elements.push_back(g);
  }
  mod.dim = h.size() / mod.stabilizer.size();
  mod.cosetReps = ctx.leftCosetReps(h, mod.stabilizer);

  // Primitive element: small nonnegative integer combinations of the
  // coefficient values, by increasing total weight.
  const std::size_t bound = 10 * mod.dim * mod.dim;
  bool found = false;
  if (values.empty()) {
    mod.primitive = FieldElem::one(ctx.field());
    found = true;
  }
  std::size_t tried = 0;
  for (int total = 1; !found && tried < bound; ++total) {
    std::vector<std::vector<int>> weights;
    std::vector<int> cur;
    compositions(values.size(), total, cur, weights);
    for (const auto& c : weights) {
      if (tried++ >= bound) break;
      FieldElem t = FieldElem::zero(ctx.field());
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (c[k] != 0) t += values[k] * Rational(c[k]);
      }
      if (ctx.orbit(h, t).size() == mod.dim) {
        mod.primitive = t;
        found = true;
        break;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::PrimitiveSearchFailed,
                "no primitive element among " + std::to_string(bound) + " candidates for " + w.str());
  }

  for (const auto& [idx, s] : mod.generatorValues) {
    MatrixL m = multiplicationMatrix(mod, s);
    if (!isFixedByH(ctx, m)) throw Error(ErrorCode::CertificateFailed, "generator matrix has entries outside K");
    mod.generatorMatrices.emplace(idx, std::move(m));
  }
  mod.primitiveMatrix = multiplicationMatrix(mod, mod.primitive);
  if (!isFixedByH(ctx, mod.primitiveMatrix)) {
    throw Error(ErrorCode::CertificateFailed, "primitive matrix has entries outside K");
  }
  return mod;
}

bool charPolySplitCheck(const KXModule& m, int node, int index) {
  auto it = m.generatorMatrices.find({node, index});
  if (it == m.generatorMatrices.end()) {
    throw Error(ErrorCode::InvalidArgument, "no generator (" + std::to_string(node + 1) + ", " +
                                                std::to_string(index) + ") in this module");
  }
  const auto& ctx = *m.lweight.context();
  const FieldElem& s = m.generatorValues.at({node, index});
  PolyL expected{FieldElem::one(ctx.field())};
  for (int g : m.cosetReps) expected = polyMul(expected, PolyL{-ctx.applyAut(g, s), FieldElem::one(ctx.field())});
  PolyL actual = charPoly(it->second);
  trimPoly(actual);
  trimPoly(expected);
  return actual == expected;
}

bool isoTest(const LWeight& a, const LWeight& b) {
  a.requireCompatible(b);
  a.requireDominant();
  b.requireDominant();
  const bool byKey = classKey(a) == classKey(b);
  const auto ta = coefficientTuple(a);
  const auto tb = coefficientTuple(b);
  const auto& ctx = *a.context();
  bool structural = false;
  for (int h : ctx.subgroupH().elements) {
    bool match = true;
    for (std::size_t i = 0; i < ta.size() && match; ++i) {
      if (ta[i].size() != tb[i].size()) {
        match = false;
        break;
      }
      for (std::size_t r = 0; r < ta[i].size(); ++r) {
        if (ctx.applyAut(h, ta[i][r]) != tb[i][r]) {
          match = false;
          break;
        }
      }
    }
    if (match) {
      structural = true;
      break;
    }
  }
  if (byKey != structural) {
    throw Error(ErrorCode::CertificateFailed, "class keys and coefficient conjugacy disagree");
  }
  return byKey;
}

EmbeddingRank tensorEmbeddingRank(const LWeight& a, const LWeight& b) {
  const KXModule ma = buildKXModule(a);
  const KXModule mb = buildKXModule(b);
  const auto& ctx = *a.context();
  const auto kBasis = ctx.fixedSpaceBasis(ctx.subgroupH());

  MatrixQ rows;
  FieldElem pa = FieldElem::one(ctx.field());
  for (std::size_t j = 0; j < ma.dim; ++j) {
    FieldElem pb = FieldElem::one(ctx.field());
    for (std::size_t k = 0; k < mb.dim; ++k) {
      const FieldElem prod = pa * pb;
      for (const auto& kappa : kBasis) rows.push_back((kappa * prod).coords());
      pb = pb * mb.primitive;
    }
    pa = pa * ma.primitive;
  }
  EmbeddingRank out;
  out.rank = rankQ(std::move(rows)) / kBasis.size();
  out.injective = out.rank == ma.dim * mb.dim;
  if (out.rank != compositumDegree(a, b).degree) {
    throw Error(ErrorCode::CertificateFailed, "image dimension differs from the compositum degree");
  }
  return out;
}

}  // namespace loopreps
