#pragma once

// Partitions, the classical symmetric families, Schur and skew Schur
// polynomials by several independent routes, and basis conversions.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symkit/formula.hpp"
#include "symkit/multipoly.hpp"

namespace symkit {

/// Non-increasing positive parts. Trailing zeros are dropped on construction;
/// any other non-monotone input raises ParseError.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  /// "3,2,1"; "" and "0" give the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned weight() const noexcept;
  /// Part i (0-based), 0 beyond the length.
  unsigned operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0U; }
  Partition conjugate() const;
  bool contains(const Partition& mu) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// (n-1, n-2, ..., 1, 0).
std::vector<unsigned> staircase(std::size_t n);

/// All partitions of `weight` with at most `max_length` parts, each at most
/// `max_part`, in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned weight, std::size_t max_length = static_cast<std::size_t>(-1),
                                     unsigned max_part = static_cast<unsigned>(-1));

struct SkewShape {
  Partition outer;
  Partition inner;
};

/// "5,3/1"; a missing "/..." means an empty inner shape.
SkewShape parse_skew(std::string_view text);

Poly e_poly(unsigned k, std::size_t n);
Poly h_poly(unsigned k, std::size_t n);
Poly p_poly(unsigned k, std::size_t n);

/// det(x_i^{mu_j}) over n variables; LengthError unless mu.size() == n.
Poly generalized_vandermonde(std::span<const unsigned> mu, std::size_t n);

Poly schur_bialternant(const Partition& lambda, std::size_t n);
Poly schur_jt_h(const Partition& lambda, std::size_t n);
Poly schur_jt_e(const Partition& lambda, std::size_t n);
Poly schur_ssyt(const Partition& lambda, std::size_t n);

/// Number of semistandard tableaux of shape lambda and content mu.
unsigned long long kostka(const Partition& lambda, std::span<const unsigned> mu);

/// det(h_{lambda_i - mu_j - i + j}); NotContained unless mu is inside lambda.
Poly skew_schur_h(const Partition& lambda, const Partition& mu, std::size_t n);

using LabelMatrix = std::vector<std::vector<long>>;

/// Labels lambda_i - mu_j - i + j (1-based i, j) of the skew Jacobi-Trudi matrix.
LabelMatrix skew_entry_labels(const Partition& lambda, const Partition& mu);
bool all_distinct(const LabelMatrix& labels);

/// lambda_i = (l - (i-1)) l + mu1, mu_i = mu1 for i < l, mu_l = mu1 - 1.
SkewShape distinct_label_family(unsigned l, unsigned mu1);

/// s for the shape (n l, (n-1) l, ..., l) as a quotient of two products.
Poly easy_lambda_closed_form(unsigned l, std::size_t n);

/// e_k as a polynomial in formal variables h_1..h_k (resp. p_1..p_k).
Poly e_in_h_basis(unsigned k, std::size_t n);
Poly e_in_p_basis(unsigned k, std::size_t n);

/// The unique g with g(e_1, ..., e_n) = f; NotSymmetric otherwise.
Poly express_in_e_basis(const Poly& f);

/// Interpolation formula for e_k from prod_i (1 + alpha x_i), alpha = 0..n.
Formula ben_or_e_formula(unsigned k, std::size_t n);

/// Formula for p_k: sum over i of a product of k copies of x_i.
Formula power_sum_formula(unsigned k, std::size_t n);

/// Formula for h_k from power sums, h_k = sum_{mu |- k} p_mu / z_mu.
Formula h_formula(unsigned k, std::size_t n);

/// Leibniz expansion of the Jacobi-Trudi matrix, entries from h_formula.
Formula schur_jt_formula(const Partition& lambda, std::size_t n);

}  // namespace symkit
