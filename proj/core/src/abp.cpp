#include "symkit/abp.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "symkit/error.hpp"

namespace symkit {

AffineForm AffineForm::variable(std::size_t var, const Scalar& coeff) {
  AffineForm a;
  if (!coeff.is_zero()) a.terms.emplace_back(var, coeff);
  return a;
}

AffineForm AffineForm::scalar(const Scalar& c) {
  AffineForm a;
  a.constant = c;
  return a;
}

AffineForm& AffineForm::operator+=(const AffineForm& rhs) {
  constant += rhs.constant;
  std::map<std::size_t, Scalar> merged(terms.begin(), terms.end());
  for (const auto& [v, c] : rhs.terms) {
    auto [it, inserted] = merged.try_emplace(v, c);
    if (!inserted) it->second += c;
  }
  terms.clear();
  for (const auto& [v, c] : merged)
    if (!c.is_zero()) terms.emplace_back(v, c);
  return *this;
}

AffineForm AffineForm::operator*(const Scalar& c) const {
  if (c.is_zero()) return {};
  AffineForm out = *this;
  out.constant *= c;
  for (auto& t : out.terms) t.second *= c;
  return out;
}

bool AffineForm::is_zero() const { return constant.is_zero() && terms.empty(); }

Poly AffineForm::to_poly(std::size_t arity) const {
  Poly p = Poly::constant(arity, constant);
  for (const auto& [v, c] : terms) p += Poly::variable(arity, v) * c;
  return p;
}

std::size_t ABP::num_nodes() const {
  std::size_t n = 0;
  for (const auto& l : layers) n += l.size();
  return n;
}

void validate(const ABP& a) {
  if (a.layers.size() < 2) fail(ErrorCode::LengthError, "an ABP needs a source layer and a sink layer");
  if (a.layers.front().size() != 1 || a.layers.back().size() != 1)
    fail(ErrorCode::LengthError, "source and sink layers must hold one node each");
  const std::size_t total = a.num_nodes();
  std::vector<long> layer_of(total, -1);
  for (std::size_t i = 0; i < a.layers.size(); ++i)
    for (std::size_t v : a.layers[i]) {
      if (v >= total || layer_of[v] != -1) fail(ErrorCode::LengthError, "node ids must be 0..num_nodes-1, each in one layer");
      layer_of[v] = static_cast<long>(i);
    }
  for (const auto& e : a.edges) {
    if (e.from >= total || e.to >= total) fail(ErrorCode::IndexOutOfRange, "edge endpoint");
    if (layer_of[e.to] != layer_of[e.from] + 1) fail(ErrorCode::LengthError, "edges must join consecutive layers");
    for (const auto& [v, c] : e.label.terms)
      if (v >= a.arity) fail(ErrorCode::IndexOutOfRange, "label variable outside arity");
  }
}

Poly abp_expand(const ABP& a, std::size_t term_budget) {
  validate(a);
  std::vector<std::vector<const AbpEdge*>> out_edges(a.num_nodes());
  for (const auto& e : a.edges) out_edges[e.from].push_back(&e);
  std::vector<Poly> value(a.num_nodes(), Poly(a.arity));
  value[a.source()] = Poly::constant(a.arity, 1);
  for (const auto& layer : a.layers)
    for (std::size_t v : layer) {
      if (value[v].is_zero()) continue;
      for (const AbpEdge* e : out_edges[v]) {
        value[e->to] += value[v] * e->label.to_poly(a.arity);
        if (value[e->to].num_terms() > term_budget)
          fail(ErrorCode::BudgetExceeded, "ABP expansion exceeded " + std::to_string(term_budget) + " terms");
      }
    }
  return value[a.sink()];
}

ABP det_abp(std::size_t n) {
  if (n == 0) fail(ErrorCode::LengthError, "det_abp needs n >= 1");
  auto x = [n](std::size_t i, std::size_t j) { return i * n + j; };
  const Scalar last_sign = n % 2 == 0 ? Scalar(1) : Scalar(-1);  // (-1)^n

  // A state (h, u) is the head of the current clow and its current vertex.
  // Layer i holds the states reached after i matrix entries. Layer 0 is {s};
  // its outgoing transitions are those of the virtual states (h, h).
  using State = std::pair<std::size_t, std::size_t>;
  constexpr std::size_t kSink = static_cast<std::size_t>(-1);
  struct RawEdge {
    std::size_t layer;
    State from;
    State to;  // to.first == kSink for the sink
    AffineForm label;
  };
  std::vector<RawEdge> raw;
  auto emit = [&](std::size_t layer, State from, std::size_t h, std::size_t u) {
    const std::size_t next = layer + 1;
    for (std::size_t v = h + 1; v < n && next < n; ++v) raw.push_back({layer, from, {h, v}, AffineForm::variable(x(u, v))});
    if (next == n) {
      raw.push_back({layer, from, {kSink, kSink}, AffineForm::variable(x(u, h), -last_sign)});
    } else {
      for (std::size_t h2 = h + 1; h2 < n; ++h2) raw.push_back({layer, from, {h2, h2}, AffineForm::variable(x(u, h), Scalar(-1))});
    }
  };
  const State source{kSink - 1, kSink - 1};
  for (std::size_t h = 0; h < n; ++h) emit(0, source, h, h);
  for (std::size_t layer = 1; layer < n; ++layer)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t u = h; u < n; ++u) emit(layer, {h, u}, h, u);

  // Merge parallel edges.
  std::map<std::tuple<std::size_t, State, State>, AffineForm> merged;
  for (auto& e : raw) merged[{e.layer, e.from, e.to}] += e.label;

  // Keep nodes that are reachable from s and reach t.
  std::vector<std::map<State, bool>> fwd(n + 1), bwd(n + 1);
  fwd[0][source] = true;
  for (const auto& [key, label] : merged) {
    const auto& [layer, from, to] = key;
    if (!label.is_zero() && fwd[layer].count(from)) fwd[layer + 1][to] = true;
  }
  bwd[n][{kSink, kSink}] = true;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    const auto& [layer, from, to] = it->first;
    if (!it->second.is_zero() && bwd[layer + 1].count(to)) bwd[layer][from] = true;
  }

  ABP a;
  a.arity = n * n;
  std::vector<std::map<State, std::size_t>> id(n + 1);
  std::size_t next_id = 0;
  for (std::size_t layer = 0; layer <= n; ++layer) {
    std::vector<std::size_t> nodes;
    for (const auto& [st, ok] : fwd[layer])
      if (bwd[layer].count(st)) {
        id[layer][st] = next_id;
        nodes.push_back(next_id++);
      }
    a.layers.push_back(std::move(nodes));
  }
  for (const auto& [key, label] : merged) {
    const auto& [layer, from, to] = key;
    if (label.is_zero()) continue;
    auto f = id[layer].find(from);
    auto t = id[layer + 1].find(to);
    if (f == id[layer].end() || t == id[layer + 1].end()) continue;
    a.edges.push_back({f->second, t->second, label});
  }
  return a;
}

Poly symbolic_det_poly(std::size_t n) {
  std::vector<Poly> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) entries.push_back(Poly::variable(n * n, i));
  return det_cofactor(entries, n, n * n);
}

}  // namespace symkit
