#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

namespace {

int mobius(unsigned n) {
  int sign = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

using IntPoly = std::vector<Integer>;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly x_pow_minus_one(unsigned d) {
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  return p;
}

}  // namespace

std::vector<Integer> cyclotomic_mobius(unsigned n) {
  IntPoly num{1}, den{1};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int m = mobius(n / d);
    if (m == 1) num = mul(num, x_pow_minus_one(d));
    if (m == -1) den = mul(den, x_pow_minus_one(d));
  }
  // den is monic up to sign; long division from the top.
  const std::size_t dq = num.size() - den.size();
  IntPoly q(dq + 1, 0);
  const Integer lead = den.back();
  for (std::size_t k = dq + 1; k-- > 0;) {
    q[k] = num[k + den.size() - 1] / lead;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  return q;
}

Poly leibniz_det(const std::vector<Poly>& entries, std::size_t n, std::size_t arity) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Poly total(arity);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = Poly::constant(arity, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * entries[i * n + perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Poly symbolic_det(std::size_t n) {
  std::vector<Poly> m;
  for (std::size_t i = 0; i < n * n; ++i) m.push_back(Poly::variable(n * n, i));
  return leibniz_det(m, n, n * n);
}

Poly vandermonde_product(std::size_t m, std::size_t arity) {
  Poly p = Poly::constant(arity, 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) p = p * (Poly::variable(arity, i) - Poly::variable(arity, j));
  return p;
}

namespace {

template <class Visit>
void all_fillings(const Partition& lambda, std::size_t n, Visit&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> boxes;
  for (std::size_t r = 0; r < lambda.length(); ++r)
    for (std::size_t c = 0; c < lambda[r]; ++c) boxes.emplace_back(r, c);
  std::vector<std::vector<unsigned>> t(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) t[r].assign(lambda[r], 1);
  std::vector<unsigned> digits(boxes.size(), 1);
  while (true) {
    for (std::size_t b = 0; b < boxes.size(); ++b) t[boxes[b].first][boxes[b].second] = digits[b];
    bool ok = true;
    for (std::size_t r = 0; r < t.size() && ok; ++r)
      for (std::size_t c = 0; c < t[r].size() && ok; ++c) {
        if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) ok = false;
        if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] >= t[r + 1][c]) ok = false;
      }
    if (ok) visit(t);
    std::size_t b = 0;
    while (b < digits.size() && digits[b] == n) digits[b++] = 1;
    if (b == digits.size()) return;
    ++digits[b];
  }
}

}  // namespace

Poly ssyt_brute_force(const Partition& lambda, std::size_t n) {
  Poly out(n);
  if (lambda.length() == 0) return Poly::constant(n, 1);
  if (n == 0) return out;
  all_fillings(lambda, n, [&](const std::vector<std::vector<unsigned>>& t) {
    symkit::Monomial m(n);
    std::vector<std::uint32_t> e(n, 0);
    for (const auto& row : t)
      for (unsigned v : row) ++e[v - 1];
    out.add_term(symkit::Monomial(e), 1);
  });
  return out;
}

unsigned long long kostka_brute_force(const Partition& lambda, const std::vector<unsigned>& mu) {
  unsigned long long count = 0;
  if (mu.empty()) return lambda.length() == 0 ? 1 : 0;
  all_fillings(lambda, mu.size(), [&](const std::vector<std::vector<unsigned>>& t) {
    std::vector<unsigned> content(mu.size(), 0);
    for (const auto& row : t)
      for (unsigned v : row) ++content[v - 1];
    if (content == mu) ++count;
  });
  return count;
}

std::size_t gauss_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::size_t poly_span_rank(const std::vector<Poly>& polys) {
  std::map<symkit::Monomial, std::size_t, symkit::GrlexLess> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) index.try_emplace(m, index.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    std::vector<Rational> row(index.size(), 0);
    for (const auto& [m, c] : p.terms()) row[index.at(m)] = c.rational();
    rows.push_back(std::move(row));
  }
  return gauss_rank(std::move(rows));
}

}  // namespace

bool has_annihilator(const std::vector<Poly>& q, unsigned max_degree) {
  const std::size_t k = q.size();
  const std::size_t n = q.front().arity();
  std::vector<Poly> products;
  std::vector<unsigned> kappa(k, 0);
  auto go = [&](auto&& self, std::size_t i, unsigned left, Poly acc) -> void {
    if (i == k) {
      products.push_back(acc);
      return;
    }
    Poly p = acc;
    for (unsigned e = 0; e <= left; ++e) {
      self(self, i + 1, left - e, p);
      p = p * q[i];
    }
  };
  go(go, 0, max_degree, Poly::constant(n, 1));
  return poly_span_rank(products) < products.size();
}

std::size_t derivative_rank(const Poly& p) {
  const std::size_t n = p.arity();
  std::vector<Poly> all;
  auto go = [&](auto&& self, std::size_t v, Poly cur) -> void {
    if (v == n) {
      if (!cur.is_zero()) all.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= p.degree_in(v); ++e) {
      self(self, v + 1, cur);
      cur = symkit::partial_derivative(cur, v);
    }
  };
  go(go, 0, p);
  return poly_span_rank(all);
}

Poly random_poly(std::mt19937_64& rng, std::size_t arity, unsigned max_degree, std::size_t terms) {
  Poly p(arity);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(arity, 0);
    unsigned budget = exp(rng);
    for (std::size_t v = 0; v < arity && budget > 0; ++v) {
      const unsigned take = std::uniform_int_distribution<unsigned>(0, budget)(rng);
      e[v] = take;
      budget -= take;
    }
    std::shuffle(e.begin(), e.end(), rng);
    p.add_term(symkit::Monomial(e), coeff(rng));
  }
  return p;
}

Poly random_homogeneous(std::mt19937_64& rng, std::size_t arity, unsigned degree, std::size_t terms) {
  std::uniform_int_distribution<int> coeff(1, 6);
  while (true) {
    Poly p(arity);
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<std::uint32_t> e(arity, 0);
      for (unsigned d = 0; d < degree; ++d) ++e[std::uniform_int_distribution<std::size_t>(0, arity - 1)(rng)];
      p.add_term(symkit::Monomial(e), coeff(rng) * (rng() % 2 ? 1 : -1));
    }
    if (!p.is_zero()) return p;
  }
}

Formula random_formula(std::mt19937_64& rng, std::size_t arity, std::size_t max_size) {
  if (max_size < 4 || rng() % 4 == 0) {
    if (rng() % 5 == 0) return Formula::constant(arity, static_cast<long>(rng() % 7) - 3);
    return Formula::input(arity, rng() % arity);
  }
  const std::size_t fan = 2 + rng() % 2;
  std::size_t budget = max_size - 1;
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < fan && budget > 0; ++i) {
    const std::size_t share = i + 1 == fan ? budget : 1 + rng() % std::max<std::size_t>(budget / (fan - i), 1);
    kids.push_back(random_formula(rng, arity, share));
    budget -= std::min<std::size_t>(budget, symkit::formula_size(kids.back()));
  }
  if (rng() % 2) {
    std::vector<Scalar> w;
    for (std::size_t i = 0; i < kids.size(); ++i) w.push_back(static_cast<long>(rng() % 5) - 2 == 0 ? 1L : static_cast<long>(rng() % 5) - 2);
    return Formula::sum(kids, w);
  }
  return Formula::product(kids);
}

Poly symmetrize(const Poly& p) {
  const std::size_t n = p.arity();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Poly total(n);
  do {
    total += symkit::remap_variables(p, perm, n);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<Scalar> random_point(std::mt19937_64& rng, std::size_t n, long range) {
  std::vector<Scalar> pt;
  for (std::size_t i = 0; i < n; ++i) {
    const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
    const long den = 1 + static_cast<long>(rng() % 4);
    pt.emplace_back(num, den);
  }
  return pt;
}

}  // namespace oracle
