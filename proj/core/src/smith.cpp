#include "loopreps/smith.hpp"

#include <cstdlib>
#include <utility>

#include "loopreps/error.hpp"
#include "loopreps/rational.hpp"

namespace loopreps {

namespace {

std::int64_t mulChecked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "Smith normal form overflow");
  return r;
}

std::int64_t subChecked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "Smith normal form overflow");
  return r;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_i -= q * row_j on a and on the left transform
void rowAxpy(IntMatrix& a, IntMatrix& left, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] = subChecked(a[i][c], mulChecked(q, a[j][c]));
  for (std::size_t c = 0; c < left[i].size(); ++c) left[i][c] = subChecked(left[i][c], mulChecked(q, left[j][c]));
}

// col_i -= q * col_j on a and on the right transform
void colAxpy(IntMatrix& a, IntMatrix& right, std::size_t i, std::size_t j, std::int64_t q) {
  for (auto& row : a) row[i] = subChecked(row[i], mulChecked(q, row[j]));
  for (auto& row : right) row[i] = subChecked(row[i], mulChecked(q, row[j]));
}

void swapCols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smithNormalForm(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  IntMatrix a = m;
  IntMatrix left = identity(rows);
  IntMatrix right = identity(cols);
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t s = 0; s < diag; ++s) {
    while (true) {
      // smallest nonzero entry of the trailing block goes to (s, s)
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t i = s; i < rows; ++i) {
        for (std::size_t j = s; j < cols; ++j) {
          if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pr = i;
            pc = j;
          }
        }
      }
      if (best == 0) break;
      std::swap(a[s], a[pr]);
      std::swap(left[s], left[pr]);
      swapCols(a, s, pc);
      swapCols(right, s, pc);

      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (a[i][s] == 0) continue;
        rowAxpy(a, left, i, s, floorDiv(a[i][s], a[s][s]));
        if (a[i][s] != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (a[s][j] == 0) continue;
        colAxpy(a, right, j, s, floorDiv(a[s][j], a[s][s]));
        if (a[s][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row s and retry
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i) {
        for (std::size_t j = s + 1; j < cols; ++j) {
          if (a[i][j] % a[s][s] != 0) {
            rowAxpy(a, left, s, i, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[s][s] < 0) {
      for (auto& x : a[s]) x = -x;
      for (auto& x : left[s]) x = -x;
    }
  }

  SmithForm out;
  out.diagonal.reserve(diag);
  for (std::size_t s = 0; s < diag; ++s) out.diagonal.push_back(a[s][s]);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix matMul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t p = inner ? b.front().size() : 0;
  IntMatrix r(n, std::vector<std::int64_t>(p, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < p; ++j) {
        std::int64_t t = 0;
        if (__builtin_mul_overflow(a[i][k], b[k][j], &t) || __builtin_add_overflow(r[i][j], t, &r[i][j])) {
          throw Error(ErrorCode::Overflow, "integer matrix product overflow");
        }
      }
    }
  }
  return r;
}

std::int64_t determinant(const IntMatrix& m) {
  // Bareiss-free: exact rational elimination is plenty at this size.
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
  }
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].isZero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].isZero()) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.toInt64();
}

}  // namespace loopreps
