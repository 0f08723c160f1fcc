#include "loopreps/galois.hpp"

#include <algorithm>
#include <set>

#include "loopreps/error.hpp"

namespace loopreps {

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup r;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(r.elements));
  return r;
}

namespace {

// Evaluates p at the field element x (Horner).
FieldElem evalPoly(const PolyQ& p, const FieldElem& x) {
  FieldElem acc = FieldElem::zero(x.field());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x;
    acc += FieldElem::scalar(x.field(), *it);
  }
  return acc;
}

}  // namespace

std::shared_ptr<const GaloisContext> GaloisContext::build(const PolyQ& modulus, const std::vector<PolyQ>& autImages,
                                                          std::vector<int> subgroup) {
  if (modulus.degree() < 1 || !modulus.leading().isOne()) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree >= 1");
  }
  if (!isSquareFree(modulus)) throw Error(ErrorCode::InvalidArgument, "modulus is not square-free");
  if (autImages.empty()) throw Error(ErrorCode::InvalidArgument, "no automorphisms declared");

  std::shared_ptr<GaloisContext> ctx(new GaloisContext());
  ctx->field_ = NumberField::create(modulus);
  const std::size_t n = ctx->field_->degree();
  if (autImages.size() != n) {
    throw Error(ErrorCode::WrongOrder, "declared " + std::to_string(autImages.size()) +
                                           " automorphisms for a modulus of degree " + std::to_string(n));
  }

  for (std::size_t g = 0; g < autImages.size(); ++g) {
    FieldElem img = FieldElem::fromPoly(ctx->field_, autImages[g]);
    if (!evalPoly(modulus, img).isZero()) {
      throw Error(ErrorCode::NotARoot, "automorphism " + std::to_string(g) + " sends t to " + img.str() +
                                           ", which is not a root of the modulus");
    }
    ctx->imagePolys_.push_back(img.toPoly());
    ctx->images_.push_back(std::move(img));
  }
  if (ctx->images_[0] != FieldElem::generator(ctx->field_)) {
    throw Error(ErrorCode::NotClosed, "automorphism 0 must be the identity t -> t");
  }
  {
    std::set<FieldElem> distinct(ctx->images_.begin(), ctx->images_.end());
    if (distinct.size() != n) throw Error(ErrorCode::WrongOrder, "automorphism images are not distinct");
  }

  // Action matrices: column k holds g(t^k) = g(t)^k.
  ctx->actions_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    MatrixQ m(n, std::vector<Rational>(n));
    FieldElem pw = FieldElem::one(ctx->field_);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) m[i][k] = pw.coords()[i];
      pw = pw * ctx->images_[g];
    }
    ctx->actions_[g] = std::move(m);
  }

  ctx->table_.assign(n, std::vector<int>(n, -1));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const FieldElem composed = ctx->applyAut(static_cast<int>(g), ctx->images_[h]);
      auto it = std::find(ctx->images_.begin(), ctx->images_.end(), composed);
      if (it == ctx->images_.end()) {
        throw Error(ErrorCode::NotClosed, "composition of automorphisms " + std::to_string(g) + " and " +
                                              std::to_string(h) + " is not in the declared list");
      }
      ctx->table_[g][h] = static_cast<int>(it - ctx->images_.begin());
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    std::set<int> row(ctx->table_[g].begin(), ctx->table_[g].end());
    if (row.size() != n) throw Error(ErrorCode::NotClosed, "composition table is not a group table");
  }

  if (ctx->fixedSpaceDim(ctx->fullGroup()) != 1) {
    throw Error(ErrorCode::FixedFieldTooBig, "fixed field of the declared group is larger than Q");
  }

  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (!ctx->isSubgroup(subgroup)) throw Error(ErrorCode::BadSubgroup, "declared subgroup is not closed");
  ctx->subgroupH_.elements = std::move(subgroup);
  if (ctx->fixedSpaceDim(ctx->subgroupH_) * ctx->subgroupH_.size() != n) {
    throw Error(ErrorCode::FixedFieldTooBig, "fixed field of the subgroup has the wrong dimension");
  }
  return ctx;
}

bool GaloisContext::isSubgroup(const std::vector<int>& elements) const {
  const int n = static_cast<int>(groupOrder());
  if (elements.empty() || !std::is_sorted(elements.begin(), elements.end())) return false;
  for (int g : elements) {
    if (g < 0 || g >= n) return false;
  }
  if (elements.front() != 0) return false;
  for (int g : elements) {
    for (int h : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), compose(g, h))) return false;
    }
  }
  return true;
}

int GaloisContext::inverse(int g) const {
  const auto& row = table_[static_cast<std::size_t>(g)];
  return static_cast<int>(std::find(row.begin(), row.end(), 0) - row.begin());
}

Subgroup GaloisContext::fullGroup() const {
  Subgroup s;
  for (std::size_t g = 0; g < groupOrder(); ++g) s.elements.push_back(static_cast<int>(g));
  return s;
}

FieldElem GaloisContext::applyAut(int g, const FieldElem& a) const {
  if (a.field() != field_) throw Error(ErrorCode::ContextMismatch, "element does not belong to this context");
  const MatrixQ& m = actions_[static_cast<std::size_t>(g)];
  const std::size_t n = degree();
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& c = a.coords()[k];
    if (c.isZero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k].isZero()) out[i] += c * m[i][k];
    }
  }
  return FieldElem(field_, std::move(out));
}

std::vector<FieldElem> GaloisContext::orbit(const Subgroup& s, const FieldElem& a) const {
  std::set<FieldElem> seen;
  for (int g : s.elements) seen.insert(applyAut(g, a));
  return {seen.begin(), seen.end()};
}

Subgroup GaloisContext::stabilizer(const Subgroup& s, const FieldElem& a) const {
  Subgroup r;
  for (int g : s.elements) {
    if (applyAut(g, a) == a) r.elements.push_back(g);
  }
  return r;
}

MatrixQ GaloisContext::fixedSystem(const Subgroup& s) const {
  const std::size_t n = degree();
  MatrixQ rows;
  for (int g : s.elements) {
    const MatrixQ& m = actions_[static_cast<std::size_t>(g)];
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row = m[i];
      row[i] -= Rational(1);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::size_t GaloisContext::fixedSpaceDim(const Subgroup& s) const { return degree() - rankQ(fixedSystem(s)); }

std::vector<FieldElem> GaloisContext::fixedSpaceBasis(const Subgroup& s) const {
  std::vector<FieldElem> out;
  for (auto& v : kernelBasisQ(fixedSystem(s), degree())) out.emplace_back(field_, std::move(v));
  return out;
}

std::vector<int> GaloisContext::leftCosetReps(const Subgroup& s, const Subgroup& t) const {
  std::vector<int> reps;
  std::set<int> covered;
  for (int g : s.elements) {
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (int h : t.elements) covered.insert(compose(g, h));
  }
  return reps;
}

}  // namespace loopreps
