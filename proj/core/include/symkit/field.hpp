#pragma once

// Exact scalars: arbitrary-precision rationals and elements of cyclotomic
// fields Q(w_n) = Q[x]/(Phi_n(x)).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symkit {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Phi_n together with the reduction table used by cyclotomic multiplication.
struct CyclotomicModulus {
  unsigned order = 1;
  unsigned degree = 1;
  std::vector<Integer> phi;  // low to high, monic, size degree + 1
  // reduce[k] holds x^(degree + k) mod Phi_n for 0 <= k < degree - 1.
  std::vector<std::vector<Rational>> reduce;
};

/// Shared, immutable modulus for Q(w_n). Thread-safe.
const CyclotomicModulus& cyclotomic_modulus(unsigned n);

/// Integer coefficients of Phi_n, lowest degree first.
std::vector<Integer> cyclotomic_field(unsigned n);

/// Element of Q(w_n). Order 1 is the rational field itself.
///
/// Values of order 1 embed into every cyclotomic field; combining two
/// scalars whose orders are both > 1 and differ raises DomainMismatch.
class Scalar {
 public:
  Scalar() : coeffs_(1) {}
  Scalar(long v) : coeffs_(1, Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : coeffs_(1, Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational q) : coeffs_(1, std::move(q)) {  // NOLINT(google-explicit-constructor)
    coeffs_[0].canonicalize();
  }
  Scalar(long num, long den);

  /// w_n^power in Q(w_n).
  static Scalar root_of_unity(unsigned order, long power = 1);
  /// Builds an element from a coefficient vector; reduces modulo Phi_order.
  static Scalar from_coeffs(unsigned order, std::vector<Rational> coeffs);
  /// 0 typed as an element of Q(w_order).
  static Scalar zero(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in Q (all coefficients of w^k, k > 0, vanish).
  bool is_rational() const noexcept;
  /// The rational value; throws DomainMismatch when !is_rational().
  const Rational& rational() const;

  /// Same value, typed in Q(w_order). Throws DomainMismatch for incompatible orders.
  Scalar embed(unsigned order) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  /// Multiplicative inverse; DivisionByZero on 0.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q" for rationals, "c0 + c1*w + c2*w^2" otherwise.
  std::string to_string() const;

 private:
  Scalar(unsigned order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  static unsigned common_order(const Scalar& a, const Scalar& b);

  unsigned order_ = 1;
  std::vector<Rational> coeffs_;  // length = deg Phi_order
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses rational or cyclotomic text. Terms in w require order > 1.
Scalar parse_scalar(std::string_view text, unsigned order = 1);

enum class ScalarOp { add, sub, mul, inv };

/// Single entry point over the four field operations; `b` is ignored for inv.
Scalar scalar_arithmetic(const Scalar& a, const Scalar& b, ScalarOp op);

/// Dense row-major matrix of scalars.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols);
  ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  ScalarMatrix transpose() const;
  /// Columns `cols` of this matrix, in the given order.
  ScalarMatrix select_columns(std::span<const std::size_t> cols) const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::size_t mat_rank(const ScalarMatrix& m);
Scalar mat_det(const ScalarMatrix& m);
ScalarMatrix mat_solve_inverse(const ScalarMatrix& m);

/// Solves A x = b. Returns false when the system is inconsistent; when it is
/// underdetermined the free variables are set to 0.
bool mat_solve(const ScalarMatrix& a, std::span<const Scalar> b, std::vector<Scalar>& x);

}  // namespace symkit
