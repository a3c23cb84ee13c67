#pragma once

// Formula-to-formula passes: scaling interpolation for homogeneous parts,
// shifting, division elimination, the linear-inversion reduction and the
// Schur-to-determinant pipeline built from them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symkit/field.hpp"
#include "symkit/formula.hpp"
#include "symkit/multipoly.hpp"
#include "symkit/symmetric.hpp"

namespace symkit {

/// Formula for the degree-d part of f, interpolating f(beta x) at beta = 0..D.
/// D defaults to size(f); d > D yields the constant 0.
Formula homogeneous_component_formula(const Formula& f, unsigned d, std::optional<unsigned> degree_bound = {});

/// Formula for the sum of the parts of f of degree <= d (same construction).
Formula truncate_formula(const Formula& f, unsigned d, unsigned degree_bound);

/// Formula for f(a + x): every input leaf x_j becomes a_j + x_j.
Formula shift_formula(const Formula& f, std::span<const Scalar> a);

struct DivideOptions {
  std::uint64_t seed = 0;
  std::size_t attempts = 4096;
  bool verify = true;  // expand P and R and check exact divisibility first
  std::size_t term_budget = kDefaultTermBudget;
};

/// Division-free formula for P / R given d >= deg(P / R).
Formula divide_formula(const Formula& p, const Formula& r, unsigned d, const DivideOptions& options = {});

struct PassRecord {
  std::string name;
  std::uint64_t size = 0;
  std::uint32_t depth = 0;
};

struct ReduceOptions {
  /// Degree bound used by the homogeneous extraction; defaults to the
  /// syntactic degree of the shifted formula.
  std::optional<unsigned> degree_bound;
  /// Re-evaluate the result at seeded random points against f.
  bool verify = true;
  std::uint64_t seed = 0;
};

struct KeyLemmaResult {
  Formula formula;                    // over z_1..z_k
  ScalarMatrix u;                     // k x n, u_i = grad q_i (a)
  std::vector<std::size_t> pivots;    // columns of the invertible k x k block
  ScalarMatrix v;                     // inverse of that block
  std::vector<PassRecord> passes;
};

/// Given f computing g(q_1, ..., q_k) with g homogeneous of degree d and a
/// Property S witness a for q, returns a formula for g(z_1, ..., z_k).
KeyLemmaResult key_lemma_reduce(const Formula& f, std::span<const Poly> q, unsigned d, std::span<const Scalar> witness,
                                const ReduceOptions& options = {});

/// lambda_i >= lambda_{i+1} + (l - 1), lambda_l >= l and n >= lambda_1 + l.
bool check_main_theorem_hypothesis(const Partition& lambda, std::size_t n);

struct ReductionReport {
  Partition lambda;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::uint64_t input_size = 0;
  std::uint32_t input_depth = 0;
  std::uint64_t output_size = 0;
  std::uint32_t output_depth = 0;
  std::vector<Scalar> witness;
  std::vector<long> q_labels;             // label m of q_m = h_m
  std::vector<std::size_t> pivots;
  std::vector<PassRecord> passes;
  std::uint64_t size_constant = 1;        // C in size_out <= C * size_in^2 * n
  bool size_bound_holds = false;
};

struct SchurReduction {
  Formula formula;  // over z_{i,j} at index i*l + j
  ReductionReport report;
};

/// The Schur-to-determinant reduction. HypothesisFailed when the hypothesis
/// check fails; VerificationFailed when f does not evaluate like s_lambda.
SchurReduction schur_to_det_reduce(const Partition& lambda, std::size_t n, const Formula& f,
                                   const ReduceOptions& options = {});

}  // namespace symkit
