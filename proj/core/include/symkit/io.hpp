#pragma once

// JSON interchange for formulas, ABPs and polynomials.
//
// Formula: {"arity": n, "field_order": k, "root": node} where node is
//   {"kind": "input", "var": j}            (0-based slot)
//   {"kind": "const", "value": "p/q"}
//   {"kind": "sum", "children": [...], "weights": ["p/q", ...]}
//   {"kind": "product", "children": [...]}
// Scalars use the text form of Scalar::to_string in Q(w_k).

#include <string>
#include <string_view>

#include "symkit/abp.hpp"
#include "symkit/formula.hpp"
#include "symkit/multipoly.hpp"

namespace symkit {

std::string formula_to_json(const Formula& f, int indent = -1);
Formula formula_from_json(std::string_view text);

std::string abp_to_json(const ABP& a, int indent = -1);
ABP abp_from_json(std::string_view text);

/// {"arity": n, "order": k, "terms": [{"exponents": [...], "coeff": "..."}]}
std::string poly_to_json(const Poly& p, int indent = -1);
Poly poly_from_json(std::string_view text);

}  // namespace symkit
