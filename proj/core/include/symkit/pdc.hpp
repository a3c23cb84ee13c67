#pragma once

// Dimension of the span of all partial derivatives (order 0 included).

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symkit/field.hpp"
#include "symkit/multipoly.hpp"

namespace symkit {

inline constexpr std::size_t kDefaultDerivativeBudget = 200'000;

struct DerivativeSpace {
  Poly source;
  std::vector<Poly> basis;  // each element is a partial derivative of source
  std::size_t dimension = 0;
};

/// BudgetExceeded when more than `budget` multi-indices would be enumerated;
/// ZeroPolynomial on P = 0.
std::size_t pdc_dimension(const Poly& p, std::size_t budget = kDefaultDerivativeBudget);
DerivativeSpace derivative_space(const Poly& p, std::size_t budget = kDefaultDerivativeBudget);

/// Smallest i with a non-zero degree-i component, and that component.
std::pair<unsigned, Poly> lowest_nonzero_component(const Poly& p);

struct ProductPdcReport {
  std::size_t k = 0;
  std::size_t dimension = 0;
  std::uint64_t bound = 0;  // 2^k
  bool pass = false;
  /// q_i(x + a) have no constant term and independent linear parts.
  bool good_shift = false;
  /// Dimension of the lowest non-zero component of prod q_i(x + a).
  std::size_t lowest_component_dimension = 0;
  unsigned lowest_component_degree = 0;
};

/// PropertySViolated unless q satisfies Property S at a.
ProductPdcReport product_pdc_check(std::span<const Poly> q, std::span<const Scalar> a);

struct ShiftedPdcReport {
  std::vector<Scalar> shifts;
  std::vector<Scalar> point;
  ProductPdcReport product;
};

/// Picks shifts with algind's shifted_witness, then checks prod (q_i - a_i).
ShiftedPdcReport shifted_product_pdc_check(std::span<const Poly> q, std::uint64_t seed);

}  // namespace symkit
