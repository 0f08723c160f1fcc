#include "loopreps/lweight.hpp"

#include <algorithm>
#include <sstream>

#include "loopreps/error.hpp"

namespace loopreps {

LWeight::LWeight(ContextPtr ctx, RootSystemPtr rs) : ctx_(std::move(ctx)), rs_(std::move(rs)) {
  if (!ctx_ || !rs_) throw Error(ErrorCode::InvalidArgument, "ℓ-weight needs a context and a root system");
}

void LWeight::multiplyFactor(int node, const FieldElem& point, int exp) {
  if (exp == 0) return;
  if (node < 0 || static_cast<std::size_t>(node) >= rs_->rank()) {
    throw Error(ErrorCode::InvalidArgument, "node " + std::to_string(node + 1) + " outside the Dynkin diagram of " +
                                                rs_->name());
  }
  if (point.field() != ctx_->field()) throw Error(ErrorCode::ContextMismatch, "spectral point from another field");
  if (point.isZero()) throw Error(ErrorCode::ZeroPoint, "spectral points must be nonzero");
  auto [it, inserted] = factors_.try_emplace(Key{node, point}, exp);
  if (!inserted) {
    it->second += exp;
    if (it->second == 0) factors_.erase(it);
  }
}

LWeight LWeight::fromFactors(ContextPtr ctx, RootSystemPtr rs, const std::vector<LFactor>& factors) {
  LWeight w(std::move(ctx), std::move(rs));
  for (const auto& f : factors) w.multiplyFactor(f.node, f.point, f.exp);
  return w;
}

LWeight LWeight::evaluation(ContextPtr ctx, RootSystemPtr rs, const Weight& lambda, const FieldElem& a) {
  LWeight w(std::move(ctx), std::move(rs));
  if (lambda.rank() != w.rs_->rank()) throw Error(ErrorCode::InvalidArgument, "weight rank mismatch");
  for (std::size_t i = 0; i < lambda.rank(); ++i) w.multiplyFactor(static_cast<int>(i), a, lambda[i]);
  return w;
}

std::vector<LFactor> LWeight::factorList() const {
  std::vector<LFactor> out;
  for (const auto& [k, e] : factors_) out.push_back({k.node, k.point, e});
  return out;
}

bool LWeight::isDominant() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::set<FieldElem> LWeight::points() const {
  std::set<FieldElem> pts;
  for (const auto& [k, e] : factors_) pts.insert(k.point);
  return pts;
}

Weight LWeight::pointWeight(const FieldElem& a) const {
  Weight w = Weight::zero(rs_->rank());
  for (std::size_t i = 0; i < rs_->rank(); ++i) {
    auto it = factors_.find(Key{static_cast<int>(i), a});
    if (it != factors_.end()) w.coords[i] = it->second;
  }
  return w;
}

std::map<FieldElem, Weight> LWeight::pointWeights() const {
  std::map<FieldElem, Weight> out;
  for (const auto& [k, e] : factors_) {
    auto [it, inserted] = out.try_emplace(k.point, Weight::zero(rs_->rank()));
    it->second.coords[static_cast<std::size_t>(k.node)] = e;
  }
  return out;
}

LWeight LWeight::conjugate(int g) const {
  LWeight out(ctx_, rs_);
  for (const auto& [k, e] : factors_) out.factors_.emplace(Key{k.node, ctx_->applyAut(g, k.point)}, e);
  return out;
}

void LWeight::requireDominant() const {
  if (!isDominant()) throw Error(ErrorCode::NotDominant, "ℓ-weight " + str() + " is not dominant");
}

void LWeight::requireCompatible(const LWeight& other) const {
  if (ctx_ != other.ctx_ || rs_ != other.rs_) {
    throw Error(ErrorCode::ContextMismatch, "ℓ-weights live over different contexts or Lie types");
  }
}

std::strong_ordering operator<=>(const LWeight& a, const LWeight& b) {
  return std::lexicographical_compare_three_way(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
      [](const auto& x, const auto& y) {
        if (auto c = x.first <=> y.first; c != 0) return c;
        return x.second <=> y.second;
      });
}

std::string LWeight::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : factors_) {
    if (!first) os << " ";
    first = false;
    os << "(1 - (" << k.point.str() << ")u)";
    if (rs_->rank() > 1) os << "_" << (k.node + 1);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LWeight lwMul(const LWeight& a, const LWeight& b) {
  a.requireCompatible(b);
  LWeight out = a;
  for (const auto& [k, e] : b.factors_) out.multiplyFactor(k.node, k.point, e);
  return out;
}

LWeight lwInv(const LWeight& a) {
  LWeight out = a;
  for (auto& [k, e] : out.factors_) e = -e;
  return out;
}

Weight wt(const LWeight& w) {
  w.requireDominant();
  Weight out = Weight::zero(w.rootSystem()->rank());
  for (const auto& [k, e] : w.factors()) out.coords[static_cast<std::size_t>(k.node)] += e;
  return out;
}

bool relativelyPrime(const LWeight& a, const LWeight& b) {
  a.requireCompatible(b);
  a.requireDominant();
  b.requireDominant();
  const auto pa = a.points();
  const auto pb = b.points();
  return std::none_of(pa.begin(), pa.end(), [&](const FieldElem& p) { return pb.count(p) > 0; });
}

Subgroup lweightStabilizer(const LWeight& w) {
  Subgroup s;
  for (int g : w.context()->subgroupH().elements) {
    if (w.conjugate(g) == w) s.elements.push_back(g);
  }
  return s;
}

ConjugacyClass conjClass(const LWeight& w) {
  std::set<LWeight> seen;
  for (int g : w.context()->subgroupH().elements) seen.insert(w.conjugate(g));
  ConjugacyClass cls;
  cls.orbit.assign(seen.begin(), seen.end());
  cls.degree = cls.orbit.size();
  const std::size_t viaStabilizer = w.context()->subgroupH().size() / lweightStabilizer(w).size();
  if (viaStabilizer != cls.degree) {
    throw Error(ErrorCode::CertificateFailed, "orbit-stabilizer count disagrees for " + w.str());
  }
  return cls;
}

IrrClassKey classKey(const LWeight& w) {
  w.requireDominant();
  LWeight best = w;
  for (int g : w.context()->subgroupH().elements) {
    LWeight c = w.conjugate(g);
    if (c < best) best = std::move(c);
  }
  return IrrClassKey{std::move(best)};
}

std::pair<LWeight, LWeight> rationalSplit(const LWeight& w) {
  w.requireDominant();
  const auto& ctx = w.context();
  const auto& h = ctx->subgroupH();
  const auto weights = w.pointWeights();
  LWeight rational(ctx, w.rootSystem());
  std::set<FieldElem> done;
  for (const auto& [a, lam] : weights) {
    if (done.count(a)) continue;
    const auto orbit = ctx->orbit(h, a);
    done.insert(orbit.begin(), orbit.end());
    bool constant = true;
    for (const auto& b : orbit) {
      auto it = weights.find(b);
      if (it == weights.end() || !(it->second == lam)) {
        constant = false;
        break;
      }
    }
    if (!constant) continue;
    for (const auto& b : orbit) {
      rational = lwMul(rational, LWeight::evaluation(ctx, w.rootSystem(), lam, b));
    }
  }
  return {rational, lwMul(w, lwInv(rational))};
}

LWeight dualLWeight(const LWeight& w) {
  w.requireDominant();
  LWeight out(w.context(), w.rootSystem());
  for (const auto& [a, lam] : w.pointWeights()) {
    out = lwMul(out, LWeight::evaluation(w.context(), w.rootSystem(), w.rootSystem()->w0Negate(lam), a));
  }
  return out;
}

std::vector<FieldElem> expandCoeffs(const LWeight& w, int node) {
  w.requireDominant();
  if (node < 0 || static_cast<std::size_t>(node) >= w.rootSystem()->rank()) {
    throw Error(ErrorCode::InvalidArgument, "node out of range");
  }
  const FieldPtr& field = w.context()->field();
  PolyL poly{FieldElem::one(field)};
  for (const auto& [k, e] : w.factors()) {
    if (k.node != node) continue;
    const PolyL linear{FieldElem::one(field), -k.point};
    for (int r = 0; r < e; ++r) poly = polyMul(poly, linear);
  }
  return poly;
}

}  // namespace loopreps
