#pragma once

#include <cstdint>
#include <vector>

namespace loopreps {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// left * input * right = diag(diagonal) (padded with zeros to the input
/// shape), each diagonal entry divides the next, and both transforms are
/// unimodular.
struct SmithForm {
  std::vector<std::int64_t> diagonal;
  IntMatrix left;
  IntMatrix right;
};

/// Throws Overflow if an intermediate leaves the 64-bit range.
SmithForm smithNormalForm(const IntMatrix& m);

IntMatrix matMul(const IntMatrix& a, const IntMatrix& b);
std::int64_t determinant(const IntMatrix& m);

}  // namespace loopreps
