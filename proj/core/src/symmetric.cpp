#include "symkit/symmetric.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "symkit/error.hpp"

namespace symkit {

// --- partitions -----------------------------------------------------------------

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) fail(ErrorCode::ParseError, "partition parts must be non-increasing: " + to_string());
  if (std::find(parts_.begin(), parts_.end(), 0U) != parts_.end())
    fail(ErrorCode::ParseError, "zero part before a positive part");
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) return {};
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = std::min(s.find(',', start), s.size());
    const std::string_view tok(s.data() + start, comma - start);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      fail(ErrorCode::ParseError, "bad partition '" + std::string(text) + "'");
    parts.push_back(v);
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

unsigned Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

Partition Partition::conjugate() const {
  std::vector<unsigned> out(parts_.empty() ? 0 : parts_.front(), 0);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const noexcept {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (mu[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<unsigned> staircase(std::size_t n) {
  std::vector<unsigned> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<unsigned>(n - 1 - i);
  return out;
}

std::vector<Partition> partitions_of(unsigned weight, std::size_t max_length, unsigned max_part) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto go = [&](auto&& self, unsigned rest, unsigned cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_length) return;
    for (unsigned p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  go(go, weight, max_part);
  return out;
}

SkewShape parse_skew(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {Partition::parse(text), Partition()};
  return {Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1))};
}

// --- classical families -------------------------------------------------------------

Poly e_poly(unsigned k, std::size_t n) {
  Poly out(n);
  if (k > n) return out;
  std::vector<std::uint32_t> exps(n, 0);
  auto go = [&](auto&& self, std::size_t start, unsigned left) -> void {
    if (left == 0) {
      out.add_term(Monomial(exps), 1);
      return;
    }
    for (std::size_t i = start; i + left <= n; ++i) {
      exps[i] = 1;
      self(self, i + 1, left - 1);
      exps[i] = 0;
    }
  };
  go(go, 0, k);
  return out;
}

Poly h_poly(unsigned k, std::size_t n) {
  Poly out(n);
  if (n == 0) return k == 0 ? Poly::constant(0, 1) : out;
  std::vector<std::uint32_t> exps(n, 0);
  auto go = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      exps[i] = left;
      out.add_term(Monomial(exps), 1);
      exps[i] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
    exps[i] = 0;
  };
  go(go, 0, k);
  return out;
}

Poly p_poly(unsigned k, std::size_t n) {
  if (k == 0) return Poly::constant(n, static_cast<long>(n));
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m(n);
    m.set(i, k);
    out.add_term(m, 1);
  }
  return out;
}

Poly generalized_vandermonde(std::span<const unsigned> mu, std::size_t n) {
  if (mu.size() != n) fail(ErrorCode::LengthError, "exponent vector length must equal n");
  std::vector<Poly> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m(n);
      m.set(i, mu[j]);
      entries.push_back(Poly::term(m, 1));
    }
  return det_cofactor(entries, n, n);
}

// --- Schur routes -------------------------------------------------------------------

namespace {

// Entry of a Jacobi-Trudi matrix indexed by label: 0 below 0, 1 at 0.
template <class Family>
Poly jt_det(std::span<const long> labels, std::size_t dim, std::size_t n, Family family) {
  std::map<long, Poly> cache;
  std::vector<Poly> entries;
  entries.reserve(dim * dim);
  for (long lab : labels) {
    if (lab < 0) {
      entries.emplace_back(n);
    } else {
      auto it = cache.find(lab);
      if (it == cache.end()) it = cache.emplace(lab, family(static_cast<unsigned>(lab), n)).first;
      entries.push_back(it->second);
    }
  }
  return det_cofactor(entries, dim, n);
}

std::vector<long> jt_labels(const Partition& lambda, const Partition& mu, std::size_t dim) {
  std::vector<long> labels;
  labels.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      labels.push_back(static_cast<long>(lambda[i]) - static_cast<long>(mu[j]) - static_cast<long>(i) + static_cast<long>(j));
  return labels;
}

}  // namespace

Poly schur_bialternant(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) fail(ErrorCode::LengthError, "l(lambda) = " + std::to_string(lambda.length()) + " exceeds n = " + std::to_string(n));
  const auto delta = staircase(n);
  std::vector<unsigned> shifted(n);
  for (std::size_t j = 0; j < n; ++j) shifted[j] = lambda[j] + delta[j];
  return poly_divide_exact(generalized_vandermonde(shifted, n), generalized_vandermonde(delta, n));
}

Poly schur_jt_h(const Partition& lambda, std::size_t n) {
  const std::size_t dim = lambda.length();
  return jt_det(jt_labels(lambda, Partition(), dim), dim, n, h_poly);
}

Poly schur_jt_e(const Partition& lambda, std::size_t n) {
  const Partition conj = lambda.conjugate();
  const std::size_t dim = conj.length();
  return jt_det(jt_labels(conj, Partition(), dim), dim, n, e_poly);
}

Poly schur_ssyt(const Partition& lambda, std::size_t n) {
  Poly out(n);
  if (lambda.length() > n) return out;
  if (lambda.length() == 0) return Poly::constant(n, 1);
  const auto& rows = lambda.parts();
  std::vector<std::vector<unsigned>> tab(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) tab[r].assign(rows[r], 0);
  std::vector<std::uint32_t> content(n, 0);
  auto go = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      out.add_term(Monomial(content), 1);
      return;
    }
    if (c == rows[r]) {
      self(self, r + 1, 0);
      return;
    }
    unsigned lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    // Column strictness needs room for the cells below.
    std::size_t below = 0;
    while (r + below + 1 < rows.size() && rows[r + below + 1] > c) ++below;
    for (unsigned v = lo; v + below <= n; ++v) {
      tab[r][c] = v;
      ++content[v - 1];
      self(self, r, c + 1);
      --content[v - 1];
    }
    tab[r][c] = 0;
  };
  go(go, 0, 0);
  return out;
}

unsigned long long kostka(const Partition& lambda, std::span<const unsigned> mu) {
  const unsigned total = std::accumulate(mu.begin(), mu.end(), 0U);
  if (total != lambda.weight()) fail(ErrorCode::WeightMismatch, "|mu| = " + std::to_string(total) + ", |lambda| = " + std::to_string(lambda.weight()));
  const auto& rows = lambda.parts();
  const std::size_t m = mu.size();
  std::vector<std::vector<unsigned>> tab(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) tab[r].assign(rows[r], 0);
  std::vector<unsigned> left(mu.begin(), mu.end());
  unsigned long long count = 0;
  auto go = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      ++count;
      return;
    }
    if (c == rows[r]) {
      self(self, r + 1, 0);
      return;
    }
    unsigned lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (unsigned v = lo; v <= m; ++v) {
      if (left[v - 1] == 0) continue;
      tab[r][c] = v;
      --left[v - 1];
      self(self, r, c + 1);
      ++left[v - 1];
    }
    tab[r][c] = 0;
  };
  go(go, 0, 0);
  return count;
}

Poly skew_schur_h(const Partition& lambda, const Partition& mu, std::size_t n) {
  if (!lambda.contains(mu)) fail(ErrorCode::NotContained, mu.to_string() + " is not inside " + lambda.to_string());
  const std::size_t dim = lambda.length();
  return jt_det(jt_labels(lambda, mu, dim), dim, n, h_poly);
}

LabelMatrix skew_entry_labels(const Partition& lambda, const Partition& mu) {
  const std::size_t dim = lambda.length();
  const auto flat = jt_labels(lambda, mu, dim);
  LabelMatrix out(dim, std::vector<long>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[i][j] = flat[i * dim + j];
  return out;
}

bool all_distinct(const LabelMatrix& labels) {
  std::set<long> seen;
  for (const auto& row : labels)
    for (long v : row)
      if (!seen.insert(v).second) return false;
  return true;
}

SkewShape distinct_label_family(unsigned l, unsigned mu1) {
  if (l < 2 || mu1 < 1) fail(ErrorCode::LengthError, "family needs l >= 2 and mu1 >= 1");
  std::vector<unsigned> lam(l), mu(l, mu1);
  for (unsigned i = 1; i <= l; ++i) lam[i - 1] = (l - (i - 1)) * l + mu1;
  mu[l - 1] = mu1 - 1;
  return {Partition(lam), Partition(mu)};
}

Poly easy_lambda_closed_form(unsigned l, std::size_t n) {
  if (l < 1 || n < 2) fail(ErrorCode::LengthError, "closed form needs l >= 1 and n >= 2");
  Monomial base(n);
  for (std::size_t i = 0; i < n; ++i) base.set(i, l);
  Poly num = Poly::term(base, 1);
  Poly den = Poly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num = num * (pow(Poly::variable(n, j), l + 1) - pow(Poly::variable(n, i), l + 1));
      den = den * (Poly::variable(n, j) - Poly::variable(n, i));
    }
  return poly_divide_exact(num, den);
}

// --- basis conversions ----------------------------------------------------------------

Poly e_in_h_basis(unsigned k, std::size_t n) {
  if (k < 1 || k > n) fail(ErrorCode::LengthError, "need 1 <= k <= n");
  TruncatedSeries h(k, k);
  h[0] = Poly::constant(k, 1);
  for (unsigned j = 1; j <= k; ++j) h[j] = Poly::variable(k, j - 1);
  // E(t) = 1 / H(-t).
  return series_inverse(series_negate_argument(h))[k];
}

Poly e_in_p_basis(unsigned k, std::size_t n) {
  if (k < 1 || k > n) fail(ErrorCode::LengthError, "need 1 <= k <= n");
  // P(-t) = sum_{m >= 1} (-1)^{m-1} p_m t^{m-1};  E(t) = exp(int P(-t) dt).
  TruncatedSeries p(k, k);
  for (unsigned m = 1; m <= k; ++m) p[m - 1] = Poly::variable(k, m - 1) * Scalar(m % 2 == 1 ? 1 : -1);
  return series_exp(series_integrate(p))[k];
}

Poly express_in_e_basis(const Poly& f) {
  const std::size_t n = f.arity();
  if (!is_symmetric(f)) fail(ErrorCode::NotSymmetric, "input is not symmetric");
  std::vector<Poly> e(n + 1);
  for (std::size_t j = 0; j <= n; ++j) e[j] = e_poly(static_cast<unsigned>(j), n);
  Poly out(n);
  for (long d = 0; d <= f.total_degree(); ++d) {
    const Poly fd = homogeneous_component(f, static_cast<unsigned>(d));
    if (fd.is_zero()) continue;
    const auto basis = partitions_of(static_cast<unsigned>(d), static_cast<std::size_t>(-1), static_cast<unsigned>(n));
    std::vector<Poly> eb;
    std::set<Monomial, GrlexLess> monos;
    for (const auto& kappa : basis) {
      Poly prod = Poly::constant(n, 1);
      for (unsigned part : kappa.parts()) prod = prod * e[part];
      for (const auto& [m, c] : prod.terms()) monos.insert(m);
      eb.push_back(std::move(prod));
    }
    for (const auto& [m, c] : fd.terms()) monos.insert(m);
    const std::vector<Monomial> rows(monos.begin(), monos.end());
    ScalarMatrix a(rows.size(), eb.size());
    std::vector<Scalar> b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < eb.size(); ++c) a(r, c) = eb[c].coefficient(rows[r]);
      b[r] = fd.coefficient(rows[r]);
    }
    std::vector<Scalar> x;
    if (!mat_solve(a, b, x)) fail(ErrorCode::NotSymmetric, "degree-" + std::to_string(d) + " component is not in the span of e-products");
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Monomial m(n);
      for (unsigned part : basis[c].parts()) m.set(part - 1, m[part - 1] + 1);
      out.add_term(m, x[c]);
    }
  }
  return out;
}

// --- formula builders -------------------------------------------------------------------

Formula ben_or_e_formula(unsigned k, std::size_t n) {
  if (k > n) fail(ErrorCode::LengthError, "need k <= n");
  if (k == 0) return Formula::constant(n, 1);
  const std::size_t pts = n + 1;
  ScalarMatrix v(pts, pts);
  for (std::size_t a = 0; a < pts; ++a) {
    Scalar pw(1);
    for (std::size_t j = 0; j < pts; ++j) {
      v(a, j) = pw;
      pw *= Scalar(static_cast<long>(a));
    }
  }
  const ScalarMatrix vinv = mat_solve_inverse(v);
  const Formula one = Formula::constant(n, 1);
  std::vector<Formula> leaves;
  for (std::size_t i = 0; i < n; ++i) leaves.push_back(Formula::input(n, i));
  std::vector<Formula> copies;
  std::vector<Scalar> weights;
  for (std::size_t a = 0; a < pts; ++a) {
    std::vector<Formula> factors;
    for (std::size_t i = 0; i < n; ++i) {
      const Formula kids[] = {one, leaves[i]};
      const Scalar w[] = {Scalar(1), Scalar(static_cast<long>(a))};
      factors.push_back(Formula::sum(kids, w));
    }
    copies.push_back(Formula::product(factors));
    weights.push_back(vinv(k, a));
  }
  return Formula::sum(copies, weights);
}

namespace {

class SymmetricFormulaBuilder {
 public:
  explicit SymmetricFormulaBuilder(std::size_t n) : n_(n) {
    for (std::size_t i = 0; i < n; ++i) leaves_.push_back(Formula::input(n, i));
  }

  Formula p(unsigned k) {
    if (auto it = p_.find(k); it != p_.end()) return it->second;
    std::vector<Formula> terms;
    for (std::size_t i = 0; i < n_; ++i) {
      if (k == 1) {
        terms.push_back(leaves_[i]);
      } else {
        const std::vector<Formula> copies(k, leaves_[i]);
        terms.push_back(Formula::product(copies));
      }
    }
    return p_.emplace(k, Formula::sum(terms)).first->second;
  }

  Formula h(unsigned k) {
    if (k == 0) return Formula::constant(n_, 1);
    if (auto it = h_.find(k); it != h_.end()) return it->second;
    std::vector<Formula> terms;
    std::vector<Scalar> weights;
    for (const auto& mu : partitions_of(k)) {
      // z_mu = prod_i i^{m_i} m_i!
      Integer z = 1;
      std::map<unsigned, unsigned> mult;
      for (unsigned part : mu.parts()) ++mult[part];
      for (const auto& [part, m] : mult)
        for (unsigned t = 1; t <= m; ++t) z *= Integer(part) * Integer(t);
      std::vector<Formula> factors;
      for (unsigned part : mu.parts()) factors.push_back(p(part));
      terms.push_back(factors.size() == 1 ? factors.front() : Formula::product(factors));
      weights.emplace_back(Rational(Integer(1), z));
    }
    return h_.emplace(k, Formula::sum(terms, weights)).first->second;
  }

 private:
  std::size_t n_;
  std::vector<Formula> leaves_;
  std::map<unsigned, Formula> p_;
  std::map<unsigned, Formula> h_;
};

}  // namespace

Formula power_sum_formula(unsigned k, std::size_t n) {
  if (k == 0) return Formula::constant(n, static_cast<long>(n));
  return SymmetricFormulaBuilder(n).p(k);
}

Formula h_formula(unsigned k, std::size_t n) { return SymmetricFormulaBuilder(n).h(k); }

Formula schur_jt_formula(const Partition& lambda, std::size_t n) {
  const std::size_t dim = lambda.length();
  if (dim == 0) return Formula::constant(n, 1);
  SymmetricFormulaBuilder b(n);
  const auto labels = jt_labels(lambda, Partition(), dim);
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Formula> terms;
  std::vector<Scalar> weights;
  do {
    std::vector<Formula> factors;
    bool zero = false;
    for (std::size_t i = 0; i < dim && !zero; ++i) {
      const long lab = labels[i * dim + perm[i]];
      if (lab < 0) zero = true;
      else factors.push_back(b.h(static_cast<unsigned>(lab)));
    }
    if (zero) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) inversions += perm[i] > perm[j];
    terms.push_back(factors.size() == 1 ? factors.front() : Formula::product(factors));
    weights.emplace_back(inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Formula::sum(terms, weights);
}

}  // namespace symkit
