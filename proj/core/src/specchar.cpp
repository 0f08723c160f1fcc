#include "loopreps/specchar.hpp"

#include <algorithm>
#include <numeric>

#include "loopreps/error.hpp"

namespace loopreps {

namespace {

bool isZeroClass(const PQClass& c) {
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

SpectralCharacter spectralCharacter(const LWeight& w) {
  SpectralCharacter chi;
  for (const auto& [a, lam] : w.pointWeights()) {
    PQClass c = w.rootSystem()->pqClass(lam);
    if (!isZeroClass(c)) chi.entries.emplace(a, std::move(c));
  }
  return chi;
}

bool equivalentChars(const GaloisContext& ctx, const SpectralCharacter& chi1, const SpectralCharacter& chi2) {
  if (chi1.entries.size() != chi2.entries.size()) return false;
  for (int h : ctx.subgroupH().elements) {
    bool match = true;
    for (const auto& [a, c] : chi1.entries) {
      auto it = chi2.entries.find(ctx.applyAut(h, a));
      if (it == chi2.entries.end() || it->second != c) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

bool sameBlock(const LWeight& a, const LWeight& b) {
  a.requireCompatible(b);
  return equivalentChars(*a.context(), spectralCharacter(a), spectralCharacter(b));
}

std::vector<std::vector<LWeight>> partitionBlocks(const std::vector<LWeight>& weights) {
  for (const auto& w : weights) w.requireDominant();
  for (std::size_t i = 1; i < weights.size(); ++i) weights[0].requireCompatible(weights[i]);

  std::vector<std::size_t> parent(weights.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<SpectralCharacter> chars;
  for (const auto& w : weights) chars.push_back(spectralCharacter(w));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (equivalentChars(*weights[i].context(), chars[i], chars[j])) parent[find(j)] = find(i);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < weights.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::pair<IrrClassKey, std::vector<LWeight>>> keyed;
  for (const auto& [root, members] : groups) {
    std::vector<LWeight> ws;
    IrrClassKey least = classKey(weights[members.front()]);
    for (std::size_t idx : members) {
      ws.push_back(weights[idx]);
      IrrClassKey k = classKey(weights[idx]);
      if (k < least) least = std::move(k);
    }
    keyed.emplace_back(std::move(least), std::move(ws));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::vector<LWeight>> out;
  for (auto& [k, ws] : keyed) out.push_back(std::move(ws));
  return out;
}

}  // namespace loopreps
