#include "symkit/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "symkit/bareiss.hpp"
#include "symkit/error.hpp"

namespace symkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Integer polynomials, lowest degree first.
using IntPoly = std::vector<Integer>;

IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact quotient of a by the monic polynomial b.
IntPoly int_poly_div_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) fail(ErrorCode::NotDivisible, "cyclotomic division");
  IntPoly q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) fail(ErrorCode::NotDivisible, "cyclotomic division left a remainder");
  return q;
}

struct ModulusCache {
  std::mutex mutex;
  std::map<unsigned, std::unique_ptr<CyclotomicModulus>> table;
};

ModulusCache& modulus_cache() {
  static ModulusCache cache;
  return cache;
}

IntPoly compute_phi(unsigned n, ModulusCache& cache);

const CyclotomicModulus& modulus_locked(unsigned n, ModulusCache& cache) {
  auto it = cache.table.find(n);
  if (it != cache.table.end()) return *it->second;
  auto m = std::make_unique<CyclotomicModulus>();
  m->order = n;
  m->phi = compute_phi(n, cache);
  m->degree = static_cast<unsigned>(m->phi.size() - 1);
  const unsigned d = m->degree;
  if (d >= 2) {
    std::vector<Rational> r(d);
    for (unsigned j = 0; j < d; ++j) r[j] = Rational(-m->phi[j]);
    m->reduce.push_back(r);
    for (unsigned k = 1; k + 1 < d; ++k) {
      std::vector<Rational> next(d);
      const Rational top = r[d - 1];
      for (unsigned j = d - 1; j > 0; --j) next[j] = r[j - 1];
      next[0] = 0;
      for (unsigned j = 0; j < d; ++j) next[j] -= top * Rational(m->phi[j]);
      m->reduce.push_back(next);
      r = std::move(next);
    }
  }
  const auto& ref = *m;
  cache.table.emplace(n, std::move(m));
  return ref;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
IntPoly compute_phi(unsigned n, ModulusCache& cache) {
  IntPoly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  IntPoly den{1};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) den = int_poly_mul(den, modulus_locked(d, cache).phi);
  return int_poly_div_monic(std::move(num), den);
}

// Reduces an arbitrary-length coefficient vector modulo Phi.
std::vector<Rational> reduce_mod(const CyclotomicModulus& m, std::vector<Rational> c) {
  const std::size_t d = m.degree;
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k] == 0) continue;
    const Rational top = c[k];
    for (std::size_t j = 0; j <= d; ++j) c[k - d + j] -= top * Rational(m.phi[j]);
  }
  c.resize(d);
  return c;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
    s = trim(s);
  }
  const auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den)) fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

const CyclotomicModulus& cyclotomic_modulus(unsigned n) {
  if (n == 0) fail(ErrorCode::IndexOutOfRange, "cyclotomic order must be >= 1");
  auto& cache = modulus_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  return modulus_locked(n, cache);
}

std::vector<Integer> cyclotomic_field(unsigned n) { return cyclotomic_modulus(n).phi; }

// --- Scalar ---------------------------------------------------------------

Scalar::Scalar(long num, long den) : coeffs_(1) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  coeffs_[0] = Rational(num, den);
  coeffs_[0].canonicalize();
}

Scalar Scalar::root_of_unity(unsigned order, long power) {
  const long n = static_cast<long>(order);
  const long p = ((power % n) + n) % n;
  std::vector<Rational> c(static_cast<std::size_t>(p) + 1);
  c[static_cast<std::size_t>(p)] = 1;
  return from_coeffs(order, std::move(c));
}

Scalar Scalar::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  const auto& m = cyclotomic_modulus(order);
  for (auto& c : coeffs) c.canonicalize();
  return Scalar(order, reduce_mod(m, std::move(coeffs)));
}

Scalar Scalar::zero(unsigned order) { return Scalar(order, std::vector<Rational>(cyclotomic_modulus(order).degree)); }

bool Scalar::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const noexcept { return coeffs_[0] == 1 && is_rational(); }

bool Scalar::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& Scalar::rational() const {
  if (!is_rational()) fail(ErrorCode::DomainMismatch, "scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

unsigned Scalar::common_order(const Scalar& a, const Scalar& b) {
  if (a.order_ == b.order_ || b.order_ == 1 || b.is_rational()) return a.order_;
  if (a.order_ == 1 || a.is_rational()) return b.order_;
  fail(ErrorCode::DomainMismatch,
       "Q(w_" + std::to_string(a.order_) + ") and Q(w_" + std::to_string(b.order_) + ")");
}

Scalar Scalar::embed(unsigned order) const {
  if (order == order_) return *this;
  if (!is_rational())
    fail(ErrorCode::DomainMismatch, "cannot embed Q(w_" + std::to_string(order_) + ") into Q(w_" +
                                        std::to_string(order) + ")");
  std::vector<Rational> c(cyclotomic_modulus(order).degree);
  c[0] = coeffs_[0];
  return Scalar(order, std::move(c));
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const unsigned ord = common_order(*this, rhs);
  if (ord != order_) *this = embed(ord);
  if (rhs.order_ == ord) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  } else {
    coeffs_[0] += rhs.coeffs_[0];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  const unsigned ord = common_order(*this, rhs);
  if (ord != order_) *this = embed(ord);
  if (rhs.order_ == ord) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  } else {
    coeffs_[0] -= rhs.coeffs_[0];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this = *this / rhs; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  const unsigned ord = Scalar::common_order(a, b);
  if (ord == 1) return Scalar(1, {a.coeffs_[0] * b.coeffs_[0]});
  if (b.order_ == 1 || b.is_rational()) {
    Scalar out = a.embed(ord);
    const Rational f = b.coeffs_[0];
    for (auto& c : out.coeffs_) c *= f;
    return out;
  }
  if (a.order_ == 1 || a.is_rational()) {
    Scalar out = b.embed(ord);
    const Rational f = a.coeffs_[0];
    for (auto& c : out.coeffs_) c *= f;
    return out;
  }
  const auto& m = cyclotomic_modulus(ord);
  const std::size_t d = m.degree;
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& red = m.reduce[k - d];
    for (std::size_t j = 0; j < d; ++j) out[j] += prod[k] * red[j];
  }
  return Scalar(ord, std::move(out));
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0");
  if (is_rational()) {
    Scalar out = *this;
    out.coeffs_[0] = 1 / out.coeffs_[0];
    return out;
  }
  // Solve (multiplication-by-this) * u = 1 over Q.
  const std::size_t d = coeffs_.size();
  ScalarMatrix mult(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Scalar col = *this * root_of_unity(order_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) mult(i, j) = Scalar(col.coeffs_[i]);
  }
  std::vector<Scalar> rhs(d);
  rhs[0] = 1;
  std::vector<Scalar> u;
  if (!mat_solve(mult, rhs, u)) fail(ErrorCode::DivisionByZero, "non-invertible cyclotomic element");
  std::vector<Rational> c(d);
  for (std::size_t i = 0; i < d; ++i) c[i] = u[i].coeffs_[0];
  return Scalar(order_, std::move(c));
}

bool operator==(const Scalar& a, const Scalar& b) {
  const unsigned ord = Scalar::common_order(a, b);
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  return a.embed(ord).coeffs_ == b.embed(ord).coeffs_;
}

std::string Scalar::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "w";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar parse_scalar(std::string_view text, unsigned order) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) fail(ErrorCode::ParseError, "empty scalar");

  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '*' && s[i - 1] != '/' && s[i - 1] != '^') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));

  std::vector<Rational> coeffs(1);
  for (std::string term : terms) {
    bool neg = false;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      neg = term[0] == '-';
      term.erase(0, 1);
    }
    const auto w = term.find('w');
    Rational c = 1;
    std::size_t power = 0;
    if (w == std::string::npos) {
      c = parse_rational(term);
    } else {
      if (order == 1) fail(ErrorCode::ParseError, "'w' in a rational context: '" + std::string(text) + "'");
      std::string head = term.substr(0, w);
      std::string tail = term.substr(w + 1);
      if (!head.empty()) {
        if (head.back() != '*') fail(ErrorCode::ParseError, "malformed term '" + term + "'");
        head.pop_back();
        c = parse_rational(head);
      }
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || !all_digits(std::string_view(tail).substr(1)))
          fail(ErrorCode::ParseError, "malformed power in '" + term + "'");
        power = std::stoul(tail.substr(1));
      }
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += neg ? Rational(-c) : c;
  }
  if (order == 1) return Scalar(coeffs[0]);
  return Scalar::from_coeffs(order, std::move(coeffs));
}

Scalar scalar_arithmetic(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add:
      return a + b;
    case ScalarOp::sub:
      return a - b;
    case ScalarOp::mul:
      return a * b;
    case ScalarOp::inv:
      return a.inverse();
  }
  return a;
}

// --- ScalarMatrix -----------------------------------------------------------

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) fail(ErrorCode::LengthMismatch, "matrix entry count");
}

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) fail(ErrorCode::LengthMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix ScalarMatrix::select_columns(std::span<const std::size_t> cols) const {
  ScalarMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  return out;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::LengthMismatch, "matrix product shapes");
  ScalarMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

detail::BareissOutcome eliminate(std::vector<Scalar>& a, std::size_t rows, std::size_t cols) {
  return detail::bareiss_eliminate(
      a, rows, cols, Scalar(1), [](const Scalar& x) { return x.is_zero(); },
      [](const Scalar& x, const Scalar& y) { return x / y; });
}

}  // namespace

std::size_t mat_rank(const ScalarMatrix& m) {
  std::vector<Scalar> a(m.entries().begin(), m.entries().end());
  return eliminate(a, m.rows(), m.cols()).rank;
}

Scalar mat_det(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  std::vector<Scalar> a(m.entries().begin(), m.entries().end());
  const auto out = eliminate(a, n, n);
  if (out.rank < n) return Scalar(0);
  const Scalar& last = a[n * n - 1];
  return out.sign < 0 ? -last : last;
}

ScalarMatrix mat_solve_inverse(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  const std::size_t w = 2 * n;
  // Fraction-free Gauss-Jordan on [M | I]; ends with [D | D M^-1], D diagonal.
  std::vector<Scalar> a(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = m(i, j);
    a[i * w + n + i] = 1;
  }
  Scalar prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * w + k].is_zero()) ++p;
    if (p == n) fail(ErrorCode::Singular, "matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < w; ++j) std::swap(a[p * w + j], a[k * w + j]);
    const Scalar pivot = a[k * w + k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar factor = a[i * w + k];
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        a[i * w + j] = (pivot * a[i * w + j] - factor * a[k * w + j]) / prev;
      }
      a[i * w + k] = 0;
    }
    prev = pivot;
  }
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = a[i * w + i].inverse();
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i * w + n + j] * d;
  }
  return inv;
}

bool mat_solve(const ScalarMatrix& a, std::span<const Scalar> b, std::vector<Scalar>& x) {
  if (b.size() != a.rows()) fail(ErrorCode::LengthMismatch, "right-hand side length");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t w = cols + 1;
  std::vector<Scalar> m(rows * w);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i * w + j] = a(i, j);
    m[i * w + cols] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p * w + c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < w; ++j) std::swap(m[p * w + j], m[r * w + j]);
    const Scalar inv = m[r * w + c].inverse();
    for (std::size_t j = c; j < w; ++j) m[r * w + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * w + c].is_zero()) continue;
      const Scalar f = m[i * w + c];
      for (std::size_t j = c; j < w; ++j) m[i * w + j] -= f * m[r * w + j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i * w + cols].is_zero()) return false;
  x.assign(cols, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = m[i * w + cols];
  return true;
}

}  // namespace symkit
