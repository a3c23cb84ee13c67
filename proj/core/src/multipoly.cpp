#include "symkit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "symkit/error.hpp"

namespace symkit {

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exps_.at(i) + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ += b.degree_;
  return out;
}

Monomial operator/(const Monomial& b, const Monomial& a) {
  Monomial out = b;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] -= a.exps_[i];
  out.degree_ -= a.degree_;
  return out;
}

// --- Poly -------------------------------------------------------------------

Poly Poly::constant(std::size_t arity, const Scalar& c) {
  Poly p(arity);
  p.add_term(Monomial(arity), c);
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) fail(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index));
  Monomial m(arity);
  m.set(index, 1);
  return term(m, Scalar(1));
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
  Poly p(m.arity());
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

long Poly::total_degree() const noexcept { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.degree()); }

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Scalar Poly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::constant_term() const { return coefficient(Monomial(arity_)); }

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "leading monomial of 0");
  return terms_.rbegin()->first;
}

unsigned Poly::field_order() const noexcept {
  unsigned ord = 1;
  for (const auto& [m, c] : terms_) ord = std::max(ord, c.order());
  return ord;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.arity() != arity_) fail(ErrorCode::ArityMismatch, "monomial arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.arity_ != arity_) fail(ErrorCode::ArityMismatch, std::to_string(arity_) + " vs " + std::to_string(rhs.arity_));
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.arity_ != arity_) fail(ErrorCode::ArityMismatch, std::to_string(arity_) + " vs " + std::to_string(rhs.arity_));
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.arity_ != b.arity_) fail(ErrorCode::ArityMismatch, std::to_string(a.arity_) + " vs " + std::to_string(b.arity_));
  Poly out(a.arity_);
  if (a.is_zero() || b.is_zero()) return out;
  if (b.is_constant()) return a * b.terms_.begin()->second;
  if (a.is_constant()) return b * a.terms_.begin()->second;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool operator==(const Poly& a, const Poly& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

Poly poly_ring_ops(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  return a;
}

Poly pow(const Poly& p, unsigned e) {
  Poly out = Poly::constant(p.arity(), Scalar(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1U) out = out * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return out;
}

Scalar poly_eval(const Poly& p, std::span<const Scalar> point) {
  if (point.size() != p.arity())
    fail(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has arity " +
                                       std::to_string(p.arity()));
  std::vector<std::vector<Scalar>> powers(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    const std::uint32_t d = p.degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].emplace_back(1);
    for (std::uint32_t e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * point[v]);
  }
  Scalar acc(0);
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t v = 0; v < m.arity(); ++v)
      if (m[v] != 0) t *= powers[v][m[v]];
    acc += t;
  }
  return acc;
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  if (var >= p.arity()) fail(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(var));
  Poly out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    out.add_term(d, c * Scalar(static_cast<long>(e)));
  }
  return out;
}

Poly homogeneous_component(const Poly& p, unsigned d) {
  Poly out(p.arity());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == d) out.add_term(m, c);
  return out;
}

bool is_homogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  const auto d = p.terms().begin()->first.degree();
  return std::all_of(p.terms().begin(), p.terms().end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

Poly poly_divide_exact(const Poly& p, const Poly& r) {
  if (p.arity() != r.arity()) fail(ErrorCode::ArityMismatch, "division operands");
  if (r.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  const Monomial lead = r.leading_monomial();
  const Scalar inv_lc = r.terms().rbegin()->second.inverse();
  Poly rem = p;
  Poly q(p.arity());
  while (!rem.is_zero()) {
    const Monomial m = rem.leading_monomial();
    if (!lead.divides(m)) fail(ErrorCode::NotDivisible, "leading term " + to_string(Poly::term(m, 1)) + " not reducible");
    const Monomial t = m / lead;
    const Scalar c = rem.terms().rbegin()->second * inv_lc;
    q.add_term(t, c);
    for (const auto& [mr, cr] : r.terms()) rem.add_term(t * mr, -(c * cr));
  }
  return q;
}

Poly substitute(const Poly& p, std::span<const Poly> images, std::size_t target_arity) {
  if (images.size() != p.arity()) fail(ErrorCode::ArityMismatch, "substitution needs one image per variable");
  for (const auto& img : images)
    if (img.arity() != target_arity) fail(ErrorCode::ArityMismatch, "substitution images differ in arity");
  std::vector<std::vector<Poly>> powers(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) {
    const std::uint32_t d = p.degree_in(v);
    powers[v].push_back(Poly::constant(target_arity, 1));
    for (std::uint32_t e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * images[v]);
  }
  Poly out(target_arity);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target_arity, c);
    for (std::size_t v = 0; v < m.arity(); ++v)
      if (m[v] != 0) t = t * powers[v][m[v]];
    out += t;
  }
  return out;
}

Poly remap_variables(const Poly& p, std::span<const std::size_t> map, std::size_t target_arity) {
  if (map.size() != p.arity()) fail(ErrorCode::ArityMismatch, "variable map length");
  Poly out(target_arity);
  for (const auto& [m, c] : p.terms()) {
    Monomial t(target_arity);
    for (std::size_t v = 0; v < m.arity(); ++v) {
      if (m[v] == 0) continue;
      if (map[v] >= target_arity) fail(ErrorCode::IndexOutOfRange, "variable map target");
      t.set(map[v], t[map[v]] + m[v]);
    }
    out.add_term(t, c);
  }
  return out;
}

Poly shift(const Poly& p, std::span<const Scalar> s) {
  if (s.size() != p.arity()) fail(ErrorCode::ArityMismatch, "shift point length");
  std::vector<Poly> images;
  images.reserve(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v)
    images.push_back(Poly::variable(p.arity(), v) + Poly::constant(p.arity(), s[v]));
  return substitute(p, images, p.arity());
}

bool is_symmetric(const Poly& p) {
  const std::size_t n = p.arity();
  if (n <= 1) return true;
  std::vector<std::size_t> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), std::size_t{0});
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return remap_variables(p, swap, n) == p && remap_variables(p, cycle, n) == p;
}

Poly det_cofactor(std::span<const Poly> entries, std::size_t n, std::size_t arity) {
  if (entries.size() != n * n) fail(ErrorCode::NotSquare, "determinant needs n*n entries");
  if (n == 0) return Poly::constant(arity, 1);
  if (n > 24) fail(ErrorCode::BudgetExceeded, "cofactor determinant limited to n <= 24");
  // memo[mask]: minor on the last popcount(mask) rows and the columns in mask.
  std::map<std::uint32_t, Poly> memo;
  auto go = [&](auto&& self, std::uint32_t mask, std::size_t row) -> Poly {
    if (row == n) return Poly::constant(arity, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Poly acc(arity);
    long sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const Poly& e = entries[row * n + c];
      if (!e.is_zero()) {
        Poly minor = self(self, mask & ~(1U << c), row + 1);
        if (!minor.is_zero()) acc += (e * minor) * Scalar(sign);
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return go(go, (n == 32 ? 0U : (1U << n)) - 1U, 0);
}

// --- text form ----------------------------------------------------------------

std::string to_string(const Poly& p, std::string_view var_prefix) {
  std::vector<std::string> names;
  names.reserve(p.arity());
  for (std::size_t v = 0; v < p.arity(); ++v) names.push_back(std::string(var_prefix) + std::to_string(v + 1));
  return to_string(p, names);
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (names.size() != p.arity()) fail(ErrorCode::ArityMismatch, "one name per variable is required");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t v = 0; v < m.arity(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.rational();
      negative = q < 0;
      if (negative) q = -q;
      if (q != 1 || mono.empty()) coeff = q.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

Poly parse_poly(std::string_view text, std::size_t arity, unsigned order, std::string_view var_prefix) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");

  // Split at top-level signs.
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-') && s[i - 1] != '*' && s[i - 1] != '^' && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));

  Poly out(arity);
  for (std::string term : terms) {
    bool negative = false;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) fail(ErrorCode::ParseError, "dangling sign in '" + std::string(text) + "'");
    Scalar coeff(negative ? -1 : 1);
    Monomial mono(arity);
    std::vector<std::string> factors;
    depth = 0;
    start = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (depth == 0 && term[i] == '*') {
        factors.push_back(term.substr(start, i - start));
        start = i + 1;
      }
    }
    factors.push_back(term.substr(start));
    for (const auto& f : factors) {
      if (f.empty()) fail(ErrorCode::ParseError, "empty factor in '" + term + "'");
      if (f.rfind(var_prefix, 0) == 0 && f.size() > var_prefix.size() &&
          std::isdigit(static_cast<unsigned char>(f[var_prefix.size()]))) {
        const std::string body = f.substr(var_prefix.size());
        const auto caret = body.find('^');
        const std::string idx = body.substr(0, caret);
        std::uint32_t e = 1;
        if (caret != std::string::npos) {
          const std::string es = body.substr(caret + 1);
          if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail(ErrorCode::ParseError, "bad exponent in '" + f + "'");
          e = static_cast<std::uint32_t>(std::stoul(es));
        }
        if (!std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          fail(ErrorCode::ParseError, "bad variable '" + f + "'");
        const std::size_t k = std::stoul(idx);
        if (k == 0 || k > arity) fail(ErrorCode::IndexOutOfRange, "variable '" + f + "' outside arity " + std::to_string(arity));
        mono.set(k - 1, mono[k - 1] + e);
      } else {
        coeff *= parse_scalar(f, order);
      }
    }
    out.add_term(mono, coeff);
  }
  return out;
}

// --- truncated series ---------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::size_t arity, unsigned cap)
    : arity_(arity), cap_(cap), coeffs_(cap + 1, Poly(arity)) {}

TruncatedSeries::TruncatedSeries(unsigned cap, std::vector<Poly> coeffs) : arity_(0), cap_(cap), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorCode::LengthError, "series needs at least one coefficient");
  arity_ = coeffs_.front().arity();
  for (const auto& c : coeffs_)
    if (c.arity() != arity_) fail(ErrorCode::ArityMismatch, "series coefficients differ in arity");
  if (coeffs_.size() > cap_ + 1) coeffs_.resize(cap_ + 1);
  while (coeffs_.size() < cap_ + 1) coeffs_.emplace_back(arity_);
}

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.arity() != b.arity()) fail(ErrorCode::ArityMismatch, "series arities differ");
  if (a.cap() != b.cap()) fail(ErrorCode::LengthMismatch, "series caps differ");
}

}  // namespace

TruncatedSeries series_ops(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  check_compatible(a, b);
  TruncatedSeries out(a.arity(), a.cap());
  if (op == SeriesOp::add) {
    for (unsigned k = 0; k <= a.cap(); ++k) out[k] = a[k] + b[k];
    return out;
  }
  for (unsigned i = 0; i <= a.cap(); ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.cap(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  if (!a[0].is_constant() || a[0].is_zero())
    fail(ErrorCode::NonUnitConstantTerm, "series constant term must be a non-zero scalar");
  const Scalar inv0 = a[0].constant_term().inverse();
  TruncatedSeries out(a.arity(), a.cap());
  out[0] = Poly::constant(a.arity(), inv0);
  for (unsigned k = 1; k <= a.cap(); ++k) {
    Poly acc(a.arity());
    for (unsigned j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += a[j] * out[k - j];
    out[k] = acc * (-inv0);
  }
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!a[0].is_zero()) fail(ErrorCode::NonZeroConstantTerm, "exp needs a zero constant term");
  // E' = a' E  =>  k E_k = sum_{j=1}^{k} j a_j E_{k-j}.
  TruncatedSeries out(a.arity(), a.cap());
  out[0] = Poly::constant(a.arity(), 1);
  for (unsigned k = 1; k <= a.cap(); ++k) {
    Poly acc(a.arity());
    for (unsigned j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += (a[j] * out[k - j]) * Scalar(static_cast<long>(j));
    out[k] = acc * Scalar(1, static_cast<long>(k));
  }
  return out;
}

TruncatedSeries series_integrate(const TruncatedSeries& a) {
  TruncatedSeries out(a.arity(), a.cap());
  for (unsigned k = 0; k < a.cap(); ++k) out[k + 1] = a[k] * Scalar(1, static_cast<long>(k + 1));
  return out;
}

TruncatedSeries series_negate_argument(const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (unsigned k = 1; k <= a.cap(); k += 2) out[k] = -a[k];
  return out;
}

}  // namespace symkit
