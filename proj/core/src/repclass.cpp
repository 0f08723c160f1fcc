#include "loopreps/repclass.hpp"

#include <set>

#include "loopreps/error.hpp"

namespace loopreps {

namespace {

std::int64_t mulChecked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "dimension exceeds 64 bits");
  return r;
}

std::int64_t addChecked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "dimension exceeds 64 bits");
  return r;
}

std::int64_t dimOverF(const LWeight& w) {
  std::int64_t dim = 1;
  for (const auto& [a, lam] : w.pointWeights()) dim = mulChecked(dim, w.rootSystem()->weylDim(lam));
  return dim;
}

}  // namespace

std::int64_t Decomposition::totalDimK() const {
  std::int64_t total = 0;
  for (const auto& [cls, mult] : parts) total = addChecked(total, mulChecked(mult, cls.dimK));
  return total;
}

IrrClass classify(const LWeight& w) {
  w.requireDominant();
  ConjugacyClass cc = conjClass(w);
  const std::int64_t dimF = dimOverF(w);
  IrrClass cls{classKey(w), std::move(cc.orbit), cc.degree, wt(w), dimF, 0};
  cls.dimK = mulChecked(static_cast<std::int64_t>(cls.degree), cls.dimF);
  return cls;
}

std::int64_t dimWeylF(const LWeight& w) {
  if (w.rootSystem()->name() != "A1") {
    throw Error(ErrorCode::UnsupportedType, "Weyl module dimensions are only available for A1");
  }
  const int lambda = wt(w)[0];
  if (lambda >= 62) throw Error(ErrorCode::Overflow, "Weyl module dimension exceeds 64 bits");
  return std::int64_t{1} << lambda;
}

std::int64_t dimWeylK(const LWeight& w) {
  const std::int64_t f = dimWeylF(w);
  return mulChecked(static_cast<std::int64_t>(conjClass(w).degree), f);
}

std::map<LWeight, std::int64_t> tensorDecomposeF(const LWeight& a, const LWeight& b) {
  a.requireCompatible(b);
  a.requireDominant();
  b.requireDominant();
  const auto& rs = a.rootSystem();
  std::set<FieldElem> points = a.points();
  for (const auto& p : b.points()) points.insert(p);

  std::vector<std::pair<LWeight, std::int64_t>> partial{{LWeight(a.context(), rs), 1}};
  for (const auto& p : points) {
    const Weight la = a.pointWeight(p);
    const Weight lb = b.pointWeight(p);
    std::map<Weight, std::int64_t> options;
    if (la.isZero() || lb.isZero()) {
      options[la + lb] = 1;
    } else {
      options = rs->tensorDecomposeG(la, lb);
    }
    std::vector<std::pair<LWeight, std::int64_t>> next;
    for (const auto& [w, m] : partial) {
      for (const auto& [nu, c] : options) {
        next.emplace_back(lwMul(w, LWeight::evaluation(a.context(), rs, nu, p)), mulChecked(m, c));
      }
    }
    partial = std::move(next);
  }
  std::map<LWeight, std::int64_t> out;
  for (auto& [w, m] : partial) out[w] = addChecked(out[w], m);
  return out;
}

Decomposition tensorDecomposeK(const LWeight& a, const LWeight& b) {
  a.requireCompatible(b);
  a.requireDominant();
  b.requireDominant();
  const ConjugacyClass ca = conjClass(a);
  const ConjugacyClass cb = conjClass(b);

  // Over F, V_K(a) splits into the conjugates of a, each with multiplicity one.
  std::map<LWeight, std::int64_t> overF;
  for (const auto& x : ca.orbit) {
    for (const auto& y : cb.orbit) {
      for (const auto& [w, m] : tensorDecomposeF(x, y)) overF[w] = addChecked(overF[w], m);
    }
  }

  std::map<IrrClassKey, std::int64_t> descended;
  std::set<LWeight> consumed;
  for (const auto& [w, m] : overF) {
    if (consumed.count(w)) continue;
    const ConjugacyClass cw = conjClass(w);
    for (const auto& member : cw.orbit) {
      auto it = overF.find(member);
      if (it == overF.end() || it->second != m) {
        throw Error(ErrorCode::DescentInconsistency,
                    "multiplicity over F is not constant on the orbit of " + w.str());
      }
      consumed.insert(member);
    }
    descended.emplace(classKey(w), m);
  }

  Decomposition dec;
  for (const auto& [key, m] : descended) dec.parts.emplace_back(classify(key.canonicalRep), m);

  const std::int64_t expected = mulChecked(classify(a).dimK, classify(b).dimK);
  if (dec.totalDimK() != expected) {
    throw Error(ErrorCode::DescentInconsistency, "total dimension " + std::to_string(dec.totalDimK()) +
                                                     " differs from " + std::to_string(expected));
  }
  return dec;
}

bool tpIrreducibleCriterion(const LWeight& a, const LWeight& b) {
  if (!relativelyPrime(a, b)) return false;
  return conjClass(lwMul(a, b)).degree == conjClass(a).degree * conjClass(b).degree;
}

bool wtpCriterion(const LWeight& a, const LWeight& b) { return tpIrreducibleCriterion(a, b); }

CompositumDegree compositumDegree(const LWeight& a, const LWeight& b) {
  a.requireCompatible(b);
  const Subgroup joint = intersect(lweightStabilizer(a), lweightStabilizer(b));
  CompositumDegree out;
  out.degree = a.context()->subgroupH().size() / joint.size();
  const std::size_t degProduct = conjClass(lwMul(a, b)).degree;
  out.chainHolds = degProduct <= out.degree && out.degree <= conjClass(a).degree * conjClass(b).degree;
  return out;
}

}  // namespace loopreps
