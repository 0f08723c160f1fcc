#include "loopreps/json_io.hpp"

namespace loopreps::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int intFrom(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

json toJson(const Rational& r) { return r.str(); }

Rational rationalFromJson(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a string \"p/q\" or an integer");
}

json toJson(const PolyQ& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(toJson(c));
  return out;
}

PolyQ polyFromJson(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rationalFromJson(e));
  return PolyQ(std::move(c));
}

json toJson(const GaloisContext& ctx) {
  json auts = json::array();
  for (const auto& p : ctx.imagePolys()) auts.push_back(toJson(p));
  return {{"modulus", toJson(ctx.field()->modulus())},
          {"automorphisms", std::move(auts)},
          {"subgroup", ctx.subgroupH().elements}};
}

ContextPtr contextFromJson(const json& j) {
  const PolyQ modulus = polyFromJson(field(j, "modulus"));
  const json& a = field(j, "automorphisms");
  if (!a.is_array()) bad("\"automorphisms\" must be an array");
  std::vector<PolyQ> images;
  for (const auto& e : a) images.push_back(polyFromJson(e));
  const json& s = field(j, "subgroup");
  if (!s.is_array()) bad("\"subgroup\" must be an array");
  std::vector<int> sub;
  for (const auto& e : s) sub.push_back(intFrom(e, "subgroup index"));
  return GaloisContext::build(modulus, images, std::move(sub));
}

json toJson(const FieldElem& a) {
  json out = json::array();
  for (const auto& c : a.coords()) out.push_back(toJson(c));
  return out;
}

FieldElem fieldElemFromJson(const ContextPtr& ctx, const json& j) {
  // a longer array is read as a polynomial in t and reduced
  return FieldElem::fromPoly(ctx->field(), polyFromJson(j));
}

json toJson(const Weight& w) { return w.coords; }

Weight weightFromJson(const json& j) {
  if (!j.is_array()) bad("weight must be an integer array");
  std::vector<int> c;
  for (const auto& e : j) c.push_back(intFrom(e, "weight coordinate"));
  return Weight(std::move(c));
}

json toJson(const LWeight& w) {
  json out = json::array();
  for (const auto& f : w.factorList()) {
    out.push_back({{"node", f.node + 1}, {"point", toJson(f.point)}, {"exp", f.exp}});
  }
  return out;
}

LWeight lweightFromJson(const ContextPtr& ctx, const RootSystemPtr& rs, const json& j) {
  if (!j.is_array()) bad("l-weight must be an array of factors");
  std::vector<LFactor> factors;
  for (const auto& e : j) {
    LFactor f;
    f.node = intFrom(field(e, "node"), "node") - 1;
    f.point = fieldElemFromJson(ctx, field(e, "point"));
    f.exp = intFrom(field(e, "exp"), "exp");
    factors.push_back(std::move(f));
  }
  return LWeight::fromFactors(ctx, rs, factors);
}

json toJson(const Decomposition& d) {
  json out = json::array();
  for (const auto& [cls, mult] : d.parts) {
    out.push_back({{"class", toJson(cls.key.canonicalRep)}, {"degree", cls.degree}, {"dimK", cls.dimK}, {"mult", mult}});
  }
  return out;
}

json toJson(const SpectralCharacter& chi) {
  json out = json::array();
  for (const auto& [a, cls] : chi.entries) out.push_back({{"point", toJson(a)}, {"class", cls}});
  return out;
}

json toJson(const MatrixL& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace loopreps::json
