#pragma once

// Arithmetic formulas: trees of input/constant leaves, weighted sum gates and
// product gates. Nodes are immutable and may be shared by pointer; every
// metric below is taken on the unfolded tree.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "symkit/field.hpp"
#include "symkit/multipoly.hpp"

namespace symkit {

enum class NodeKind { input, constant, sum, product };

struct FormulaNode;
using NodePtr = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  NodeKind kind = NodeKind::constant;
  std::size_t var = 0;             // input
  Scalar value;                    // constant
  std::vector<NodePtr> children;   // sum, product
  std::vector<Scalar> weights;     // sum: one per child

  std::uint64_t size = 1;     // unfolded node count (saturating)
  std::uint32_t depth = 0;    // gate edges on the longest root-to-leaf path
  std::uint64_t degree = 0;   // syntactic degree, an upper bound on the true degree
};

inline constexpr std::size_t kDefaultTermBudget = 2'000'000;

class Formula {
 public:
  Formula(std::size_t arity, NodePtr root);

  static Formula input(std::size_t arity, std::size_t var);
  static Formula constant(std::size_t arity, const Scalar& c);
  /// One sum gate; ArityMismatch / LengthMismatch on inconsistent inputs.
  static Formula sum(std::span<const Formula> children, std::span<const Scalar> weights);
  static Formula sum(std::span<const Formula> children);
  static Formula product(std::span<const Formula> children);
  /// Sum of weighted products of leaves, one product per term.
  static Formula from_poly(const Poly& p);

  std::size_t arity() const noexcept { return arity_; }
  const NodePtr& root() const noexcept { return root_; }

 private:
  std::size_t arity_;
  NodePtr root_;
};

Scalar formula_eval(const Formula& f, std::span<const Scalar> point);

/// Full expansion; BudgetExceeded when any intermediate polynomial exceeds
/// `term_budget` terms.
Poly formula_expand(const Formula& f, std::size_t term_budget = kDefaultTermBudget);

std::uint64_t formula_size(const Formula& f) noexcept;
std::uint32_t formula_depth(const Formula& f) noexcept;
std::uint64_t formula_degree_bound(const Formula& f) noexcept;

/// Replaces input j by images[j]; every image has arity `target_arity`.
Formula substitute_leaves(const Formula& f, std::span<const Formula> images, std::size_t target_arity);

/// One fresh sum gate over `fs` with edge weights `weights`.
Formula scalar_combination(std::span<const Formula> fs, std::span<const Scalar> weights);

/// Largest cyclotomic order among constants and weights.
unsigned formula_field_order(const Formula& f);

}  // namespace symkit
