#pragma once

// Jacobians, algebraic-independence rank and Property S witnesses.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symkit/field.hpp"
#include "symkit/multipoly.hpp"

namespace symkit {

struct JacobianMatrix {
  std::size_t rows = 0;   // number of polynomials
  std::size_t cols = 0;   // number of variables
  std::vector<Poly> entries;  // row-major, entry (i, j) = d q_i / d x_j

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

JacobianMatrix jacobian(std::span<const Poly> q);
ScalarMatrix evaluate_jacobian(const JacobianMatrix& j, std::span<const Scalar> point);

/// Rank over the rational function field: the best of 20 seeded evaluations
/// on the grid {0, ..., 2D}, replaced by exact fraction-free elimination over
/// the polynomial entries when rows * cols <= 16.
std::size_t symbolic_rank(const JacobianMatrix& j, std::uint64_t seed = 0);

/// Exact rank by fraction-free elimination over Poly entries.
std::size_t exact_symbolic_rank(const JacobianMatrix& j);

struct PropertySWitness {
  std::vector<Scalar> point;
  std::vector<Poly> q;
  std::size_t rank = 0;             // rank of the Jacobian at `point`
  std::vector<Scalar> residuals;    // q_i(point)
};

/// (1, w, ..., w^{n-1}) in Q(w_n).
std::vector<Scalar> roots_of_unity_point(std::size_t n);

/// Property S witnesses for {e_1..e_{n-1}}, {h_1..h_{n-1}}, {p_1..p_{n-1}} at
/// the roots-of-unity point; VerificationFailed if re-evaluation disagrees.
PropertySWitness roots_of_unity_witness(std::size_t n);
PropertySWitness h_family_witness(std::size_t n);
PropertySWitness p_family_witness(std::size_t n);

/// All q_i vanish at a and the Jacobian rank at a equals the symbolic rank.
bool property_s_check(std::span<const Poly> q, std::span<const Scalar> a, std::uint64_t seed = 0);

/// Evaluates residuals and rank at `a`; PropertySViolated unless Property S holds.
PropertySWitness certify_witness(std::span<const Poly> q, std::span<const Scalar> a, std::uint64_t seed = 0);

struct ShiftedWitness {
  std::vector<Scalar> shifts;  // a_i = q_i(c)
  std::vector<Scalar> point;   // c
  std::vector<Poly> shifted;   // q_i - a_i
};

/// Samples c from {0, ..., 2D}^n with D = sum_i (deg q_i - 1) until the
/// Jacobian has full row rank at c; GridExhausted otherwise.
ShiftedWitness shifted_witness(std::span<const Poly> q, std::uint64_t seed, std::size_t attempts = 256);

}  // namespace symkit
