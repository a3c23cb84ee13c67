#include "symkit/io.hpp"

#include <json.hpp>

#include "symkit/error.hpp"

namespace symkit {

using nlohmann::json;

namespace {

json parse_doc(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

json node_to_json(const FormulaNode& node) {
  json j;
  switch (node.kind) {
    case NodeKind::input:
      j["kind"] = "input";
      j["var"] = node.var;
      break;
    case NodeKind::constant:
      j["kind"] = "const";
      j["value"] = node.value.to_string();
      break;
    case NodeKind::sum:
    case NodeKind::product: {
      j["kind"] = node.kind == NodeKind::sum ? "sum" : "product";
      json kids = json::array();
      for (const auto& c : node.children) kids.push_back(node_to_json(*c));
      j["children"] = std::move(kids);
      if (node.kind == NodeKind::sum) {
        json ws = json::array();
        for (const auto& w : node.weights) ws.push_back(w.to_string());
        j["weights"] = std::move(ws);
      }
      break;
    }
  }
  return j;
}

Formula node_from_json(const json& j, std::size_t arity, unsigned order) {
  const auto kind = field<std::string>(j, "kind");
  if (kind == "input") {
    const auto var = field<std::size_t>(j, "var");
    if (var >= arity) fail(ErrorCode::ParseError, "input var " + std::to_string(var) + " outside arity " + std::to_string(arity));
    return Formula::input(arity, var);
  }
  if (kind == "const") return Formula::constant(arity, parse_scalar(field<std::string>(j, "value"), order));
  if (kind != "sum" && kind != "product") fail(ErrorCode::ParseError, "unknown node kind '" + kind + "'");
  const auto kids_json = field<json>(j, "children");
  if (!kids_json.is_array()) fail(ErrorCode::ParseError, "children must be an array");
  std::vector<Formula> kids;
  for (const auto& c : kids_json) kids.push_back(node_from_json(c, arity, order));
  if (kind == "product") return Formula::product(kids);
  std::vector<Scalar> weights;
  for (const auto& w : field<std::vector<std::string>>(j, "weights")) weights.push_back(parse_scalar(w, order));
  return Formula::sum(kids, weights);
}

json form_to_json(const AffineForm& a) {
  json terms = json::array();
  for (const auto& [v, c] : a.terms) terms.push_back(json::array({v, c.to_string()}));
  return {{"constant", a.constant.to_string()}, {"terms", terms}};
}

unsigned abp_order(const ABP& a) {
  unsigned order = 1;
  for (const auto& e : a.edges) {
    order = std::max(order, e.label.constant.order());
    for (const auto& t : e.label.terms) order = std::max(order, t.second.order());
  }
  return order;
}

}  // namespace

std::string formula_to_json(const Formula& f, int indent) {
  json doc{{"arity", f.arity()}, {"field_order", formula_field_order(f)}, {"root", node_to_json(*f.root())}};
  return doc.dump(indent);
}

Formula formula_from_json(std::string_view text) {
  const json doc = parse_doc(text);
  const auto arity = field<std::size_t>(doc, "arity");
  const unsigned order = doc.contains("field_order") ? field<unsigned>(doc, "field_order") : 1U;
  return node_from_json(field<json>(doc, "root"), arity, order);
}

std::string abp_to_json(const ABP& a, int indent) {
  json edges = json::array();
  for (const auto& e : a.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", form_to_json(e.label)}});
  json doc{{"arity", a.arity}, {"field_order", abp_order(a)}, {"layers", a.layers}, {"edges", edges}};
  return doc.dump(indent);
}

ABP abp_from_json(std::string_view text) {
  const json doc = parse_doc(text);
  ABP a;
  a.arity = field<std::size_t>(doc, "arity");
  const unsigned order = doc.contains("field_order") ? field<unsigned>(doc, "field_order") : 1U;
  a.layers = field<std::vector<std::vector<std::size_t>>>(doc, "layers");
  for (const auto& e : field<json>(doc, "edges")) {
    AbpEdge edge;
    edge.from = field<std::size_t>(e, "from");
    edge.to = field<std::size_t>(e, "to");
    const auto label = field<json>(e, "label");
    AffineForm form = AffineForm::scalar(parse_scalar(field<std::string>(label, "constant"), order));
    for (const auto& t : field<json>(label, "terms")) {
      if (!t.is_array() || t.size() != 2) fail(ErrorCode::ParseError, "label term must be [var, coeff]");
      form += AffineForm::variable(t[0].get<std::size_t>(), parse_scalar(t[1].get<std::string>(), order));
    }
    edge.label = std::move(form);
    a.edges.push_back(std::move(edge));
  }
  validate(a);
  return a;
}

std::string poly_to_json(const Poly& p, int indent) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto e = it->first.exponents();
    terms.push_back({{"exponents", std::vector<std::uint32_t>(e.begin(), e.end())}, {"coeff", it->second.to_string()}});
  }
  json doc{{"arity", p.arity()}, {"order", p.field_order()}, {"terms", terms}};
  return doc.dump(indent);
}

Poly poly_from_json(std::string_view text) {
  const json doc = parse_doc(text);
  const auto arity = field<std::size_t>(doc, "arity");
  const unsigned order = doc.contains("order") ? field<unsigned>(doc, "order") : 1U;
  Poly p(arity);
  for (const auto& t : field<json>(doc, "terms")) {
    auto exps = field<std::vector<std::uint32_t>>(t, "exponents");
    if (exps.size() != arity) fail(ErrorCode::ArityMismatch, "exponent vector length");
    p.add_term(Monomial(std::move(exps)), parse_scalar(field<std::string>(t, "coeff"), order));
  }
  return p;
}

}  // namespace symkit
