#pragma once

// Fraction-free (Bareiss) elimination over an integral domain. Shared by the
// scalar matrices of field-core and the polynomial Jacobians of algind.

#include <cstddef>
#include <utility>
#include <vector>

namespace symkit::detail {

struct BareissOutcome {
  std::size_t rank = 0;
  int sign = 1;  // parity of the row swaps
};

/// Reduces the row-major `rows` x `cols` matrix `a` to fraction-free echelon
/// form in place (entries below the pivots are left unspecified). `exact_div(x, y)` must return x / y, which is exact at every
/// step. On a square non-singular input the last pivot equals sign * det.
template <class T, class IsZero, class ExactDiv>
BareissOutcome bareiss_eliminate(std::vector<T>& a, std::size_t rows, std::size_t cols, T one,
                                 IsZero is_zero, ExactDiv exact_div) {
  BareissOutcome out;
  T prev = std::move(one);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p * cols + c])) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      out.sign = -out.sign;
    }
    const T& pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T factor = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        T& target = a[i * cols + j];
        target = exact_div(pivot * target - factor * a[r * cols + j], prev);
      }
    }
    prev = pivot;
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace symkit::detail
