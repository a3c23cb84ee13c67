#pragma once

// Layered algebraic branching programs with affine edge labels.

#include <cstddef>
#include <utility>
#include <vector>

#include "symkit/field.hpp"
#include "symkit/formula.hpp"
#include "symkit/multipoly.hpp"

namespace symkit {

/// constant + sum_j coeff_j * x_{var_j}; terms sorted by variable, no zeros.
struct AffineForm {
  Scalar constant;
  std::vector<std::pair<std::size_t, Scalar>> terms;

  static AffineForm variable(std::size_t var, const Scalar& coeff = Scalar(1));
  static AffineForm scalar(const Scalar& c);

  AffineForm& operator+=(const AffineForm& rhs);
  AffineForm operator*(const Scalar& c) const;
  bool is_zero() const;
  Poly to_poly(std::size_t arity) const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct AbpEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  AffineForm label;

  friend bool operator==(const AbpEdge&, const AbpEdge&) = default;
};

/// Nodes are numbered 0..num_nodes-1; layers[i] lists the nodes of layer i.
/// The source is the only node of layers.front(), the sink the only node of
/// layers.back().
struct ABP {
  std::size_t arity = 0;
  std::vector<std::vector<std::size_t>> layers;
  std::vector<AbpEdge> edges;

  std::size_t num_nodes() const;
  std::size_t source() const { return layers.front().front(); }
  std::size_t sink() const { return layers.back().front(); }

  friend bool operator==(const ABP&, const ABP&) = default;
};

/// LengthError unless the layering, source/sink and edge endpoints are consistent.
void validate(const ABP& a);

/// Sum over source-to-sink paths of the product of labels.
Poly abp_expand(const ABP& a, std::size_t term_budget = kDefaultTermBudget);

/// Division-free ABP for the n x n determinant over variables x_{i,j} at
/// index i*n + j (row-major), built from clow sequences.
ABP det_abp(std::size_t n);

/// det of the symbolic n x n matrix by cofactor expansion along the first row.
Poly symbolic_det_poly(std::size_t n);

}  // namespace symkit
