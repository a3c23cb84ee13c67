#include "symkit/pdc.hpp"

#include <map>

#include "symkit/algind.hpp"
#include "symkit/error.hpp"

namespace symkit {

namespace {

// All non-zero derivatives d^u P with u_j <= deg_j(P) and |u| <= deg P.
std::vector<Poly> all_derivatives(const Poly& p, std::size_t budget) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "derivative space of 0");
  const std::size_t n = p.arity();
  std::vector<std::uint32_t> caps(n);
  long double count = 1;
  for (std::size_t j = 0; j < n; ++j) {
    caps[j] = p.degree_in(j);
    count *= caps[j] + 1;
  }
  if (count > static_cast<long double>(budget))
    fail(ErrorCode::BudgetExceeded, "derivative enumeration needs more than " + std::to_string(budget) + " multi-indices");
  std::vector<Poly> out;
  auto go = [&](auto&& self, std::size_t var, const Poly& cur) -> void {
    if (cur.is_zero()) return;
    if (var == n) {
      out.push_back(cur);
      return;
    }
    Poly d = cur;
    for (std::uint32_t e = 0; e <= caps[var] && !d.is_zero(); ++e) {
      self(self, var + 1, d);
      d = partial_derivative(d, var);
    }
  };
  go(go, 0, p);
  return out;
}

ScalarMatrix coefficient_matrix(const std::vector<Poly>& polys) {
  std::map<Monomial, std::size_t, GrlexLess> col;
  for (const auto& q : polys)
    for (const auto& [m, c] : q.terms()) col.try_emplace(m, 0);
  std::size_t idx = 0;
  for (auto& [m, i] : col) i = idx++;
  ScalarMatrix a(polys.size(), col.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r].terms()) a(r, col[m]) = c;
  return a;
}

}  // namespace

std::size_t pdc_dimension(const Poly& p, std::size_t budget) { return mat_rank(coefficient_matrix(all_derivatives(p, budget))); }

DerivativeSpace derivative_space(const Poly& p, std::size_t budget) {
  DerivativeSpace s;
  s.source = p;
  const auto derivs = all_derivatives(p, budget);
  // Incremental elimination keyed on the leading monomial of each reduced row.
  std::map<Monomial, Poly, GrlexLess> reduced;
  for (const auto& d : derivs) {
    Poly r = d;
    while (!r.is_zero()) {
      const auto it = reduced.find(r.leading_monomial());
      if (it == reduced.end()) break;
      const Scalar factor = r.terms().rbegin()->second / it->second.terms().rbegin()->second;
      r -= it->second * factor;
    }
    if (r.is_zero()) continue;
    reduced.emplace(r.leading_monomial(), r);
    s.basis.push_back(d);
  }
  s.dimension = s.basis.size();
  return s;
}

std::pair<unsigned, Poly> lowest_nonzero_component(const Poly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "lowest component of 0");
  const unsigned d = p.terms().begin()->first.degree();
  return {d, homogeneous_component(p, d)};
}

ProductPdcReport product_pdc_check(std::span<const Poly> q, std::span<const Scalar> a) {
  if (q.empty()) fail(ErrorCode::LengthError, "empty polynomial list");
  if (!property_s_check(q, a)) fail(ErrorCode::PropertySViolated, "q does not satisfy Property S at the given point");
  const std::size_t n = q.front().arity();
  ProductPdcReport rep;
  rep.k = q.size();
  rep.bound = std::uint64_t{1} << rep.k;
  Poly prod = Poly::constant(n, 1);
  for (const auto& qi : q) prod = prod * qi;
  rep.dimension = pdc_dimension(prod);
  rep.pass = rep.dimension >= rep.bound;

  std::vector<Poly> shifted;
  ScalarMatrix linear(q.size(), n);
  bool constants_vanish = true;
  for (std::size_t i = 0; i < q.size(); ++i) {
    shifted.push_back(shift(q[i], a));
    constants_vanish = constants_vanish && shifted.back().constant_term().is_zero();
    const Poly lin = homogeneous_component(shifted.back(), 1);
    for (const auto& [m, c] : lin.terms())
      for (std::size_t j = 0; j < n; ++j)
        if (m[j] == 1) linear(i, j) = c;
  }
  rep.good_shift = constants_vanish && mat_rank(linear) == q.size();
  Poly sprod = Poly::constant(n, 1);
  for (const auto& s : shifted) sprod = sprod * s;
  const auto [deg, low] = lowest_nonzero_component(sprod);
  rep.lowest_component_degree = deg;
  rep.lowest_component_dimension = pdc_dimension(low);
  return rep;
}

ShiftedPdcReport shifted_product_pdc_check(std::span<const Poly> q, std::uint64_t seed) {
  const ShiftedWitness w = shifted_witness(q, seed);
  ShiftedPdcReport rep;
  rep.shifts = w.shifts;
  rep.point = w.point;
  rep.product = product_pdc_check(w.shifted, w.point);
  return rep;
}

}  // namespace symkit
