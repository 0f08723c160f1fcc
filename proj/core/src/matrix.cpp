#include "loopreps/matrix.hpp"

#include "loopreps/error.hpp"

namespace loopreps {

MatrixL::MatrixL(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, FieldElem::zero(field_)) {}

MatrixL::MatrixL(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols || entries_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match its shape");
  }
  field_ = entries_.front().field();
  for (const auto& e : entries_) {
    if (e.field() != field_) throw Error(ErrorCode::ContextMismatch, "matrix entries from different fields");
  }
}

MatrixL MatrixL::identity(const FieldPtr& field, std::size_t n) {
  MatrixL m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::one(field);
  return m;
}

MatrixL operator*(const MatrixL& a, const MatrixL& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not compose");
  MatrixL r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem& x = a(i, k);
      if (x.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  }
  return r;
}

MatrixL operator-(const MatrixL& a, const MatrixL& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "shape mismatch");
  MatrixL r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

MatrixL matInverseL(const MatrixL& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  MatrixL a = m;
  MatrixL inv = MatrixL::identity(m.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).isZero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const FieldElem pinv = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * pinv;
      inv(col, j) = inv(col, j) * pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).isZero()) continue;
      const FieldElem f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rankL(const MatrixL& m) {
  MatrixL a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col).isZero()) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
    const FieldElem pinv = a(rank, col).inverse();
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col).isZero()) continue;
      const FieldElem f = a(i, col) * pinv;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

PolyL charPoly(const MatrixL& m) {
  // Faddeev-LeVerrier; exact division by k is fine in characteristic zero.
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldPtr& field = m.field();
  PolyL coeffs(n + 1, FieldElem::zero(field));
  coeffs[n] = FieldElem::one(field);
  MatrixL mk(field, n, n);  // M_0 = 0
  const MatrixL id = MatrixL::identity(field, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    MatrixL next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
    mk = std::move(next);
    const MatrixL amk = m * mk;
    FieldElem trace = FieldElem::zero(field);
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    coeffs[n - k] = trace * Rational(-1, static_cast<long>(k));
  }
  return coeffs;
}

std::size_t minimalPolyDegree(const MatrixL& m) {
  const std::size_t n = m.rows();
  MatrixL power = MatrixL::identity(m.field(), n);
  std::vector<FieldElem> stacked;
  std::size_t rank = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    stacked.insert(stacked.end(), power.entries().begin(), power.entries().end());
    const std::size_t r = rankL(MatrixL(k + 1, n * n, stacked));
    if (r == rank) return k;
    rank = r;
    power = power * m;
  }
  return n;
}

std::size_t rankQ(MatrixQ a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].isZero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rational pinv = a[rank][col].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col].isZero()) continue;
      const Rational f = a[i][col] * pinv;
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> kernelBasisQ(MatrixQ a, std::size_t cols) {
  // Reduced row echelon form, then one basis vector per free column.
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col].isZero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const Rational pinv = a[r][col].inverse();
    for (auto& x : a[r]) x *= pinv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col].isZero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivotCols.push_back(col);
    ++r;
  }
  std::vector<bool> isPivot(cols, false);
  for (auto c : pivotCols) isPivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (isPivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivotCols.size(); ++i) v[pivotCols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace loopreps
