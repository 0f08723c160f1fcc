#pragma once

#include <vector>

#include "loopreps/number_field.hpp"
#include "loopreps/rational.hpp"

namespace loopreps {

/// Dense matrix over a number field L, row-major.
class MatrixL {
 public:
  MatrixL() = default;
  MatrixL(FieldPtr field, std::size_t rows, std::size_t cols);
  MatrixL(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

  static MatrixL identity(const FieldPtr& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElem>& entries() const { return entries_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend MatrixL operator*(const MatrixL& a, const MatrixL& b);
  friend MatrixL operator-(const MatrixL& a, const MatrixL& b);
  friend bool operator==(const MatrixL& a, const MatrixL& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> entries_;
};

/// Exact inverse by Gauss-Jordan elimination; throws Singular.
MatrixL matInverseL(const MatrixL& m);

std::size_t rankL(const MatrixL& m);

/// Characteristic polynomial det(u*I - m), ascending coefficients, monic.
PolyL charPoly(const MatrixL& m);

/// Degree of the minimal polynomial (dimension of the span of I, m, m^2, ...).
std::size_t minimalPolyDegree(const MatrixL& m);

using MatrixQ = std::vector<std::vector<Rational>>;

std::size_t rankQ(MatrixQ rows);

/// Basis of the right kernel {x : A x = 0} of a matrix with `cols` columns.
std::vector<std::vector<Rational>> kernelBasisQ(MatrixQ rows, std::size_t cols);

}  // namespace loopreps
