#include "symkit/formula.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "symkit/error.hpp"

namespace symkit {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::shared_ptr<FormulaNode> gate(NodeKind kind, std::vector<NodePtr> children, std::vector<Scalar> weights) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = kind;
  node->size = 1;
  std::uint32_t depth = 0;
  std::uint64_t degree = 0;
  for (const auto& c : children) {
    node->size = sat_add(node->size, c->size);
    depth = std::max(depth, c->depth);
    degree = kind == NodeKind::sum ? std::max(degree, c->degree) : sat_add(degree, c->degree);
  }
  node->depth = depth + 1;
  node->degree = degree;
  node->children = std::move(children);
  node->weights = std::move(weights);
  return node;
}

void check_arities(std::span<const Formula> fs) {
  for (const auto& f : fs)
    if (f.arity() != fs.front().arity())
      fail(ErrorCode::ArityMismatch, "formula arities " + std::to_string(f.arity()) + " and " + std::to_string(fs.front().arity()));
}

}  // namespace

Formula::Formula(std::size_t arity, NodePtr root) : arity_(arity), root_(std::move(root)) {
  if (!root_) fail(ErrorCode::LengthError, "formula without a root");
}

Formula Formula::input(std::size_t arity, std::size_t var) {
  if (var >= arity) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(var) + " outside arity " + std::to_string(arity));
  auto node = std::make_shared<FormulaNode>();
  node->kind = NodeKind::input;
  node->var = var;
  node->degree = 1;
  return Formula(arity, node);
}

Formula Formula::constant(std::size_t arity, const Scalar& c) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = NodeKind::constant;
  node->value = c;
  return Formula(arity, node);
}

Formula Formula::sum(std::span<const Formula> children, std::span<const Scalar> weights) {
  if (children.size() != weights.size())
    fail(ErrorCode::LengthMismatch, std::to_string(children.size()) + " children, " + std::to_string(weights.size()) + " weights");
  if (children.empty()) fail(ErrorCode::LengthError, "sum gate needs a child");
  check_arities(children);
  std::vector<NodePtr> kids;
  kids.reserve(children.size());
  for (const auto& c : children) kids.push_back(c.root());
  return Formula(children.front().arity(), gate(NodeKind::sum, std::move(kids), {weights.begin(), weights.end()}));
}

Formula Formula::sum(std::span<const Formula> children) {
  const std::vector<Scalar> ones(children.size(), Scalar(1));
  return sum(children, ones);
}

Formula Formula::product(std::span<const Formula> children) {
  if (children.empty()) fail(ErrorCode::LengthError, "product gate needs a child");
  check_arities(children);
  std::vector<NodePtr> kids;
  kids.reserve(children.size());
  for (const auto& c : children) kids.push_back(c.root());
  return Formula(children.front().arity(), gate(NodeKind::product, std::move(kids), {}));
}

Formula Formula::from_poly(const Poly& p) {
  const std::size_t n = p.arity();
  if (p.is_zero()) return constant(n, 0);
  std::vector<Formula> leaves;
  leaves.reserve(n);
  for (std::size_t v = 0; v < n; ++v) leaves.push_back(input(n, v));
  std::vector<Formula> terms;
  std::vector<Scalar> weights;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::vector<Formula> factors;
    for (std::size_t v = 0; v < n; ++v)
      for (std::uint32_t e = 0; e < m[v]; ++e) factors.push_back(leaves[v]);
    if (factors.empty())
      terms.push_back(constant(n, 1));
    else if (factors.size() == 1)
      terms.push_back(factors.front());
    else
      terms.push_back(product(factors));
    weights.push_back(c);
  }
  return sum(terms, weights);
}

// --- evaluation and expansion ---------------------------------------------------

Scalar formula_eval(const Formula& f, std::span<const Scalar> point) {
  if (point.size() != f.arity())
    fail(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, formula has arity " + std::to_string(f.arity()));
  std::unordered_map<const FormulaNode*, Scalar> memo;
  auto go = [&](auto&& self, const FormulaNode* node) -> Scalar {
    if (auto it = memo.find(node); it != memo.end()) return it->second;
    Scalar out;
    switch (node->kind) {
      case NodeKind::input:
        out = point[node->var];
        break;
      case NodeKind::constant:
        out = node->value;
        break;
      case NodeKind::sum:
        out = Scalar(0);
        for (std::size_t i = 0; i < node->children.size(); ++i) out += node->weights[i] * self(self, node->children[i].get());
        break;
      case NodeKind::product:
        out = Scalar(1);
        for (const auto& c : node->children) out *= self(self, c.get());
        break;
    }
    memo.emplace(node, out);
    return out;
  };
  return go(go, f.root().get());
}

Poly formula_expand(const Formula& f, std::size_t term_budget) {
  const std::size_t n = f.arity();
  std::unordered_map<const FormulaNode*, Poly> memo;
  auto guard = [&](const Poly& p) {
    if (p.num_terms() > term_budget)
      fail(ErrorCode::BudgetExceeded, "expansion reached " + std::to_string(p.num_terms()) + " terms (budget " + std::to_string(term_budget) + ")");
  };
  auto go = [&](auto&& self, const FormulaNode* node) -> const Poly& {
    if (auto it = memo.find(node); it != memo.end()) return it->second;
    Poly out(n);
    switch (node->kind) {
      case NodeKind::input:
        if (node->var >= n) fail(ErrorCode::IndexOutOfRange, "input " + std::to_string(node->var) + " outside arity " + std::to_string(n));
        out = Poly::variable(n, node->var);
        break;
      case NodeKind::constant:
        out = Poly::constant(n, node->value);
        break;
      case NodeKind::sum:
        for (std::size_t i = 0; i < node->children.size(); ++i) {
          if (node->weights[i].is_zero()) continue;
          out += self(self, node->children[i].get()) * node->weights[i];
          guard(out);
        }
        break;
      case NodeKind::product:
        out = Poly::constant(n, 1);
        for (const auto& c : node->children) {
          out = out * self(self, c.get());
          guard(out);
          if (out.is_zero()) break;
        }
        break;
    }
    return memo.emplace(node, std::move(out)).first->second;
  };
  return go(go, f.root().get());
}

std::uint64_t formula_size(const Formula& f) noexcept { return f.root()->size; }
std::uint32_t formula_depth(const Formula& f) noexcept { return f.root()->depth; }
std::uint64_t formula_degree_bound(const Formula& f) noexcept { return f.root()->degree; }

// --- rewriting -------------------------------------------------------------------

Formula substitute_leaves(const Formula& f, std::span<const Formula> images, std::size_t target_arity) {
  if (images.size() != f.arity())
    fail(ErrorCode::ArityMismatch, std::to_string(images.size()) + " images for arity " + std::to_string(f.arity()));
  for (const auto& img : images)
    if (img.arity() != target_arity) fail(ErrorCode::ArityMismatch, "substituted formulas differ in arity");
  std::unordered_map<const FormulaNode*, NodePtr> memo;
  auto go = [&](auto&& self, const NodePtr& node) -> NodePtr {
    if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
    NodePtr out;
    switch (node->kind) {
      case NodeKind::input:
        out = images[node->var].root();
        break;
      case NodeKind::constant:
        out = node;
        break;
      case NodeKind::sum:
      case NodeKind::product: {
        std::vector<NodePtr> kids;
        kids.reserve(node->children.size());
        bool same = true;
        for (const auto& c : node->children) {
          kids.push_back(self(self, c));
          same = same && kids.back() == c;
        }
        out = same ? node : gate(node->kind, std::move(kids), node->weights);
        break;
      }
    }
    memo.emplace(node.get(), out);
    return out;
  };
  return Formula(target_arity, go(go, f.root()));
}

Formula scalar_combination(std::span<const Formula> fs, std::span<const Scalar> weights) {
  return Formula::sum(fs, weights);
}

unsigned formula_field_order(const Formula& f) {
  unsigned order = 1;
  std::unordered_map<const FormulaNode*, bool> seen;
  auto go = [&](auto&& self, const FormulaNode* node) -> void {
    if (!seen.emplace(node, true).second) return;
    if (node->kind == NodeKind::constant) order = std::max(order, node->value.order());
    for (const auto& w : node->weights) order = std::max(order, w.order());
    for (const auto& c : node->children) self(self, c.get());
  };
  go(go, f.root().get());
  return order;
}

}  // namespace symkit
