#pragma once

// Sparse multivariate polynomials over Scalar, truncated power series with
// polynomial coefficients, and the calculus primitives built on them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symkit/field.hpp"

namespace symkit {

/// Exponent vector with its cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  void set(std::size_t i, std::uint32_t e);
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Quotient b / a; requires a.divides(b).
  friend Monomial operator/(const Monomial& b, const Monomial& a);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ... ; std::map iterates it ascending.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i] != eb[i]) return ea[i] < eb[i];
    return false;
  }
};

class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexLess>;

  Poly() = default;
  explicit Poly(std::size_t arity) : arity_(arity) {}

  static Poly constant(std::size_t arity, const Scalar& c);
  static Poly variable(std::size_t arity, std::size_t index);
  static Poly term(const Monomial& m, const Scalar& c);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Highest total degree, or -1 for the zero polynomial.
  long total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;
  /// Grlex-largest monomial; requires a non-zero polynomial.
  const Monomial& leading_monomial() const;
  /// Largest cyclotomic order among the coefficients (1 when all rational).
  unsigned field_order() const noexcept;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

enum class PolyOp { add, sub, mul };

/// ArityMismatch unless both operands have the same arity.
Poly poly_ring_ops(const Poly& a, const Poly& b, PolyOp op);

Poly pow(const Poly& p, unsigned e);

Scalar poly_eval(const Poly& p, std::span<const Scalar> point);

Poly partial_derivative(const Poly& p, std::size_t var);

Poly homogeneous_component(const Poly& p, unsigned d);
bool is_homogeneous(const Poly& p);

/// Q with Q * r == p; NotDivisible when the grlex reduction leaves a remainder.
Poly poly_divide_exact(const Poly& p, const Poly& r);

/// p(images[0], ..., images[arity-1]); all images share one arity.
Poly substitute(const Poly& p, std::span<const Poly> images, std::size_t target_arity);

/// Variable j of `p` becomes variable map[j] of a polynomial with `target_arity` slots.
Poly remap_variables(const Poly& p, std::span<const std::size_t> map, std::size_t target_arity);

/// p(x + shift).
Poly shift(const Poly& p, std::span<const Scalar> shift);

bool is_symmetric(const Poly& p);

/// Determinant of the n x n row-major matrix `entries` by cofactor expansion
/// along the first row, memoized on the set of remaining columns.
Poly det_cofactor(std::span<const Poly> entries, std::size_t n, std::size_t arity);

/// Terms in descending grlex order, e.g. "x1^2 - 2*x1*x2 + 1/2".
std::string to_string(const Poly& p, std::string_view var_prefix = "x");
/// Same layout with explicit variable names, one per slot.
std::string to_string(const Poly& p, std::span<const std::string> names);

/// Inverse of to_string. Variables are `<prefix><k>` with 1 <= k <= arity.
Poly parse_poly(std::string_view text, std::size_t arity, unsigned order = 1,
                std::string_view var_prefix = "x");

/// Truncated univariate series in t with polynomial coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t arity, unsigned cap);
  TruncatedSeries(unsigned cap, std::vector<Poly> coeffs);

  std::size_t arity() const noexcept { return arity_; }
  unsigned cap() const noexcept { return cap_; }
  const Poly& operator[](std::size_t k) const { return coeffs_.at(k); }
  Poly& operator[](std::size_t k) { return coeffs_.at(k); }
  std::span<const Poly> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::size_t arity_;
  unsigned cap_;
  std::vector<Poly> coeffs_;
};

enum class SeriesOp { add, mul };

TruncatedSeries series_ops(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);
/// Requires a[0] to be a non-zero constant (NonUnitConstantTerm otherwise).
TruncatedSeries series_inverse(const TruncatedSeries& a);
/// Requires a[0] == 0 (NonZeroConstantTerm otherwise).
TruncatedSeries series_exp(const TruncatedSeries& a);
/// Antiderivative with zero constant term; the top coefficient falls off the cap.
TruncatedSeries series_integrate(const TruncatedSeries& a);
/// a(-t).
TruncatedSeries series_negate_argument(const TruncatedSeries& a);

}  // namespace symkit
