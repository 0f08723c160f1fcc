#include "loopreps/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "loopreps/error.hpp"

namespace loopreps {

bool Weight::isDominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::isZero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator*(int k, const Weight& w) {
  Weight r = w;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ")";
  return os.str();
}

namespace {

struct TypeData {
  std::vector<std::int64_t> lengths;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based
  std::size_t expectedRoots = 0;
};

TypeData typeData(char family, std::size_t n) {
  TypeData t;
  auto chain = [&](std::size_t upTo) {
    for (std::size_t i = 0; i + 1 < upTo; ++i) t.edges.emplace_back(i, i + 1);
  };
  switch (family) {
    case 'A':
      t.lengths.assign(n, 1);
      chain(n);
      t.expectedRoots = n * (n + 1) / 2;
      break;
    case 'B':
      t.lengths.assign(n, 2);
      t.lengths[n - 1] = 1;
      chain(n);
      t.expectedRoots = n * n;
      break;
    case 'C':
      t.lengths.assign(n, 1);
      t.lengths[n - 1] = 2;
      chain(n);
      t.expectedRoots = n * n;
      break;
    case 'D':
      t.lengths.assign(n, 1);
      chain(n - 1);
      t.edges.emplace_back(n - 3, n - 1);
      t.expectedRoots = n * (n - 1);
      break;
    case 'E':
      t.lengths.assign(n, 1);
      t.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (std::size_t i = 4; i + 1 < n; ++i) t.edges.emplace_back(i, i + 1);
      t.expectedRoots = n == 6 ? 36 : (n == 7 ? 63 : 120);
      break;
    case 'F':
      t.lengths = {2, 2, 1, 1};
      chain(4);
      t.expectedRoots = 24;
      break;
    case 'G':
      t.lengths = {1, 3};
      chain(2);
      t.expectedRoots = 6;
      break;
    default:
      break;
  }
  return t;
}

bool validRank(char family, std::size_t n) {
  switch (family) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

std::int64_t modPos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m when gcd(a, m) = 1, else 0.
std::int64_t modInverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, b = modPos(a, m);
  while (b != 0) {
    const std::int64_t q = g / b;
    std::tie(g, b) = std::make_pair(b, g - q * b);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return g == 1 ? modPos(x, m) : 0;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(std::string_view type) {
  if (type.size() < 2) throw Error(ErrorCode::UnknownType, "unknown Lie type '" + std::string(type) + "'");
  const char family = type[0];
  std::size_t n = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (type[i] < '0' || type[i] > '9' || n > 100) {
      throw Error(ErrorCode::UnknownType, "unknown Lie type '" + std::string(type) + "'");
    }
    n = n * 10 + static_cast<std::size_t>(type[i] - '0');
  }
  if (!validRank(family, n) || n > 12 || type[1] == '0') {
    throw Error(ErrorCode::UnknownType, "unknown Lie type '" + std::string(type) + "'");
  }

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->name_ = std::string(type);
  const TypeData data = typeData(family, n);
  rs->lengths_ = data.lengths;
  rs->form_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rs->form_[i][i] = 2 * data.lengths[i];
  for (auto [i, j] : data.edges) {
    const std::int64_t b = -std::max(data.lengths[i], data.lengths[j]);
    rs->form_[i][j] = rs->form_[j][i] = b;
  }
  rs->cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rs->cartan_[i][j] = rs->form_[i][j] / data.lengths[i];
  }

  // Close the simple roots under simple reflections.
  std::set<std::vector<int>> found;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const std::vector<int> beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * rs->cartan_[i][j];
      std::vector<int> img = beta;
      img[i] -= static_cast<int>(pairing);
      if (std::all_of(img.begin(), img.end(), [](int c) { return c >= 0; }) && found.insert(img).second) {
        queue.push_back(img);
      }
    }
  }
  rs->roots_.assign(found.begin(), found.end());
  std::sort(rs->roots_.begin(), rs->roots_.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  if (rs->roots_.size() != data.expectedRoots) {
    throw Error(ErrorCode::UnknownType, "root closure for " + rs->name_ + " produced the wrong number of roots");
  }

  // Inverse Cartan matrix over Q.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(static_cast<long>(rs->cartan_[i][j]));
    aug[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c].isZero()) ++p;
    std::swap(aug[p], aug[c]);
    const Rational inv = aug[c][c].inverse();
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c].isZero()) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  rs->inverseCartan_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rs->inverseCartan_[i][j] = aug[i][n + j];
  }

  // P/Q = Z^n / (Cartan columns). Each cyclic factor's residue is rescaled by a
  // unit so the first fundamental weight with a unit residue maps to 1.
  rs->smith_ = smithNormalForm(rs->cartan_);
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t d = rs->smith_.diagonal[k];
    if (d <= 1) continue;
    std::int64_t scale = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t inv = modInverse(rs->smith_.left[k][j], d);
      if (inv != 0) {
        scale = inv;
        break;
      }
    }
    rs->pqFactors_.push_back(d);
    rs->pqRows_.push_back(k);
    rs->pqScale_.push_back(scale);
  }
  return rs;
}

void RootSystem::checkRank(const Weight& w) const {
  if (w.rank() != rank()) {
    throw Error(ErrorCode::InvalidArgument, "weight " + w.str() + " does not have rank " + std::to_string(rank()));
  }
}

void RootSystem::requireDominant(const Weight& w) const {
  checkRank(w);
  if (!w.isDominant()) throw Error(ErrorCode::NotDominant, "weight " + w.str() + " is not dominant");
}

bool RootSystem::isPositiveRoot(const std::vector<int>& alpha) const {
  return std::find(roots_.begin(), roots_.end(), alpha) != roots_.end();
}

std::int64_t RootSystem::rootLength(const std::vector<int>& alpha) const {
  if (!isPositiveRoot(alpha)) throw Error(ErrorCode::NotARoot, "not a positive root");
  std::int64_t norm = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) norm += alpha[i] * form_[i][j] * alpha[j];
  }
  return norm / 2;
}

std::vector<int> RootSystem::corootCoeffs(const std::vector<int>& alpha) const {
  const std::int64_t dAlpha = rootLength(alpha);
  std::vector<int> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t num = lengths_[i] * alpha[i];
    if (num % dAlpha != 0) throw Error(ErrorCode::CertificateFailed, "non-integral coroot coefficient");
    out[i] = static_cast<int>(num / dAlpha);
  }
  return out;
}

Weight RootSystem::rootToWeight(const std::vector<int>& alpha) const {
  Weight w = Weight::zero(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += cartan_[i][j] * alpha[j];
    w.coords[i] = static_cast<int>(s);
  }
  return w;
}

Weight RootSystem::simpleRootWeight(std::size_t i) const {
  std::vector<int> e(rank(), 0);
  e[i] = 1;
  return rootToWeight(e);
}

Rational RootSystem::height(const Weight& w) const {
  checkRank(w);
  Rational h;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) h += inverseCartan_[i][j] * Rational(w.coords[j]);
  }
  return h;
}

Rational RootSystem::innerProduct(const Weight& a, const Weight& b) const {
  // (ω_i, ω_j) = d_i (A^{-1})_{ij}
  checkRank(a);
  checkRank(b);
  Rational s;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (b.coords[j] == 0) continue;
      s += Rational(a.coords[i]) * Rational(b.coords[j]) * Rational(static_cast<long>(lengths_[i])) *
           inverseCartan_[i][j];
    }
  }
  return s;
}

Weight RootSystem::reflect(std::size_t i, const Weight& w) const {
  checkRank(w);
  Weight r = w;
  const int c = w.coords[i];
  for (std::size_t k = 0; k < rank(); ++k) r.coords[k] -= c * static_cast<int>(cartan_[k][i]);
  return r;
}

Weight RootSystem::w0Negate(const Weight& mu) const {
  requireDominant(mu);
  Weight w = -mu;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (w.coords[i] < 0) {
        w = reflect(i, w);
        moved = true;
      }
    }
  }
  return w;
}

std::int64_t RootSystem::weylDim(const Weight& lambda) const {
  requireDominant(lambda);
  mpz_class num = 1, den = 1;
  for (const auto& alpha : roots_) {
    const std::vector<int> mv = corootCoeffs(alpha);
    long top = 0, bottom = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      top += static_cast<long>(mv[i]) * (lambda.coords[i] + 1);
      bottom += mv[i];
    }
    num *= top;
    den *= bottom;
  }
  const mpz_class q = num / den;
  if (!q.fits_slong_p()) throw Error(ErrorCode::Overflow, "Weyl dimension exceeds 64 bits");
  return q.get_si();
}

WeightMults RootSystem::freudenthal(const Weight& lambda) const {
  const std::size_t n = rank();
  // Weights are tracked as λ - Σ k_j α_j with offsets k ≥ 0.
  std::map<std::vector<int>, std::int64_t> byOffset;
  std::vector<Weight> rootWeights;
  for (const auto& alpha : roots_) rootWeights.push_back(rootToWeight(alpha));

  auto weightOf = [&](const std::vector<int>& k) {
    Weight w = lambda;
    for (std::size_t j = 0; j < n; ++j) {
      if (k[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) w.coords[i] -= k[j] * static_cast<int>(cartan_[i][j]);
    }
    return w;
  };
  // (μ, β) for β in simple-root coordinates: Σ_j β_j d_j μ_j
  auto pair = [&](const Weight& mu, const std::vector<int>& beta) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += static_cast<std::int64_t>(beta[j]) * lengths_[j] * mu.coords[j];
    return s;
  };
  Weight lambdaRho = lambda;
  for (auto& c : lambdaRho.coords) c += 1;

  std::vector<std::vector<int>> layer{std::vector<int>(n, 0)};
  byOffset[layer.front()] = 1;
  while (!layer.empty()) {
    std::set<std::vector<int>> candidates;
    for (const auto& k : layer) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> next = k;
        ++next[j];
        candidates.insert(next);
      }
    }
    std::vector<std::vector<int>> nextLayer;
    for (const auto& k : candidates) {
      const Weight mu = weightOf(k);
      std::int64_t num = 0;
      for (std::size_t r = 0; r < roots_.size(); ++r) {
        const auto& alpha = roots_[r];
        std::vector<int> shifted = k;
        for (int step = 1;; ++step) {
          bool inRange = true;
          for (std::size_t j = 0; j < n; ++j) {
            shifted[j] -= alpha[j];
            if (shifted[j] < 0) inRange = false;
          }
          if (!inRange) break;
          auto it = byOffset.find(shifted);
          if (it == byOffset.end()) continue;
          Weight up = mu;
          for (std::size_t i = 0; i < n; ++i) up.coords[i] += step * rootWeights[r].coords[i];
          num += pair(up, alpha) * it->second;
        }
      }
      num *= 2;
      if (num == 0) continue;
      // (λ+ρ,λ+ρ) - (μ+ρ,μ+ρ) = 2(λ+ρ, β) - (β, β) with β = Σ k_j α_j
      std::int64_t bb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) bb += static_cast<std::int64_t>(k[i]) * form_[i][j] * k[j];
      }
      const std::int64_t den = 2 * pair(lambdaRho, k) - bb;
      if (den <= 0 || num % den != 0) {
        throw Error(ErrorCode::CertificateFailed, "Freudenthal recursion produced a non-integral multiplicity");
      }
      byOffset[k] = num / den;
      nextLayer.push_back(k);
    }
    layer = std::move(nextLayer);
  }

  WeightMults out;
  for (const auto& [k, m] : byOffset) out[weightOf(k)] = m;
  return out;
}

std::shared_ptr<const WeightMults> RootSystem::cachedMults(const Weight& lambda) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->mults.find(lambda);
    if (it != cache_->mults.end()) return it->second;
  }
  auto computed = std::make_shared<const WeightMults>(freudenthal(lambda));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->mults.emplace(lambda, std::move(computed)).first->second;
}

WeightMults RootSystem::weightMults(const Weight& lambda) const {
  requireDominant(lambda);
  return *cachedMults(lambda);
}

std::map<Weight, std::int64_t> RootSystem::tensorDecomposeG(const Weight& lambda, const Weight& mu) const {
  requireDominant(lambda);
  requireDominant(mu);
  const auto chL = cachedMults(lambda);
  const auto chM = cachedMults(mu);
  // Only dominant weights are needed: a character is fixed by its dominant part.
  std::map<Weight, std::int64_t> remaining;
  for (const auto& [a, ma] : *chL) {
    for (const auto& [b, mb] : *chM) {
      Weight s = a + b;
      if (s.isDominant()) remaining[s] += ma * mb;
    }
  }
  std::map<Weight, std::int64_t> result;
  while (true) {
    for (auto it = remaining.begin(); it != remaining.end();) {
      if (it->second < 0) throw Error(ErrorCode::CertificateFailed, "negative multiplicity while peeling");
      it = it->second == 0 ? remaining.erase(it) : std::next(it);
    }
    if (remaining.empty()) break;
    // Maximal height is maximal in the dominance order; ties go to the
    // lexicographically larger weight.
    auto best = remaining.begin();
    Rational bestHeight = height(best->first);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const Rational h = height(it->first);
      if (h > bestHeight || (h == bestHeight && it->first > best->first)) {
        best = it;
        bestHeight = h;
      }
    }
    const Weight top = best->first;
    const std::int64_t m = best->second;
    result[top] = m;
    for (const auto& [w, c] : *cachedMults(top)) {
      if (!w.isDominant()) continue;
      remaining[w] -= m * c;
    }
  }
  return result;
}

PQClass RootSystem::pqClass(const Weight& mu) const {
  checkRank(mu);
  PQClass out;
  for (std::size_t f = 0; f < pqFactors_.size(); ++f) {
    const std::size_t k = pqRows_[f];
    const std::int64_t d = pqFactors_[f];
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s = modPos(s + modPos(smith_.left[k][j], d) * modPos(mu.coords[j], d), d);
    out.push_back(modPos(s * pqScale_[f], d));
  }
  return out;
}

bool RootSystem::directlyLinked(const Weight& lambda, const Weight& mu) const {
  requireDominant(lambda);
  requireDominant(mu);
  return tensorDecomposeG(highestRootWeight(), lambda).count(mu) > 0;
}

std::vector<Weight> RootSystem::linkChain(const Weight& lambda, const Weight& mu, int maxSteps) const {
  requireDominant(lambda);
  requireDominant(mu);
  if (pqClass(lambda) != pqClass(mu)) {
    throw Error(ErrorCode::NotSameClass, lambda.str() + " - " + mu.str() + " is not in the root lattice");
  }
  if (lambda == mu) return {mu};
  const Weight theta = highestRootWeight();
  const Rational bound = std::max(height(lambda), height(mu)) + height(theta) * Rational(maxSteps);

  std::map<Weight, Weight> parent;
  parent.emplace(mu, mu);
  std::vector<Weight> frontier{mu};
  for (int step = 0; step < maxSteps && !frontier.empty(); ++step) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (const auto& [nu, mult] : tensorDecomposeG(theta, w)) {
        if (parent.count(nu) || height(nu) > bound) continue;
        parent.emplace(nu, w);
        if (nu == lambda) {
          std::vector<Weight> chain{nu};
          while (!(chain.back() == mu)) chain.push_back(parent.at(chain.back()));
          std::reverse(chain.begin(), chain.end());
          return chain;
        }
        next.push_back(nu);
      }
    }
    frontier = std::move(next);
  }
  throw Error(ErrorCode::SearchExhausted,
              "no chain from " + mu.str() + " to " + lambda.str() + " within " + std::to_string(maxSteps) + " steps");
}

}  // namespace loopreps
