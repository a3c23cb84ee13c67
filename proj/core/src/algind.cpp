#include "symkit/algind.hpp"

#include <algorithm>
#include <random>

#include "symkit/bareiss.hpp"
#include "symkit/error.hpp"
#include "symkit/symmetric.hpp"

namespace symkit {

JacobianMatrix jacobian(std::span<const Poly> q) {
  JacobianMatrix j;
  j.rows = q.size();
  j.cols = q.empty() ? 0 : q.front().arity();
  for (const auto& qi : q)
    if (qi.arity() != j.cols) fail(ErrorCode::ArityMismatch, "Jacobian needs a common arity");
  j.entries.reserve(j.rows * j.cols);
  for (const auto& qi : q)
    for (std::size_t v = 0; v < j.cols; ++v) j.entries.push_back(partial_derivative(qi, v));
  return j;
}

ScalarMatrix evaluate_jacobian(const JacobianMatrix& j, std::span<const Scalar> point) {
  if (point.size() != j.cols) fail(ErrorCode::ArityMismatch, "point length differs from the number of variables");
  ScalarMatrix m(j.rows, j.cols);
  for (std::size_t r = 0; r < j.rows; ++r)
    for (std::size_t c = 0; c < j.cols; ++c) m(r, c) = poly_eval(j(r, c), point);
  return m;
}

std::size_t exact_symbolic_rank(const JacobianMatrix& j) {
  if (j.rows == 0 || j.cols == 0) return 0;
  std::vector<Poly> a = j.entries;
  const auto out = detail::bareiss_eliminate(
      a, j.rows, j.cols, Poly::constant(j.cols, 1), [](const Poly& p) { return p.is_zero(); },
      [](const Poly& x, const Poly& y) { return poly_divide_exact(x, y); });
  return out.rank;
}

std::size_t symbolic_rank(const JacobianMatrix& j, std::uint64_t seed) {
  if (j.rows == 0 || j.cols == 0) return 0;
  if (j.rows * j.cols <= 16) return exact_symbolic_rank(j);
  // Any minor has degree at most the sum of the row degrees.
  long d = 0;
  for (std::size_t r = 0; r < j.rows; ++r) {
    long row = 0;
    for (std::size_t c = 0; c < j.cols; ++c) row = std::max(row, j(r, c).total_degree());
    d += row;
  }
  const std::uint64_t grid = 2 * static_cast<std::uint64_t>(std::max(d, 1L)) + 1;
  std::mt19937_64 rng(seed);
  const std::size_t full = std::min(j.rows, j.cols);
  std::size_t best = 0;
  std::vector<Scalar> pt(j.cols);
  for (int trial = 0; trial < 20 && best < full; ++trial) {
    for (auto& x : pt) x = Scalar(static_cast<long>(rng() % grid));
    best = std::max(best, mat_rank(evaluate_jacobian(j, pt)));
  }
  return best;
}

std::vector<Scalar> roots_of_unity_point(std::size_t n) {
  std::vector<Scalar> a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) a.push_back(Scalar::root_of_unity(static_cast<unsigned>(n), static_cast<long>(i)));
  return a;
}

namespace {

PropertySWitness family_witness(std::size_t n, Poly (*family)(unsigned, std::size_t), const char* name) {
  if (n < 2) fail(ErrorCode::LengthError, "witness needs n >= 2");
  PropertySWitness w;
  w.point = roots_of_unity_point(n);
  for (unsigned i = 1; i < n; ++i) w.q.push_back(family(i, n));
  for (const auto& q : w.q) w.residuals.push_back(poly_eval(q, w.point));
  w.rank = mat_rank(evaluate_jacobian(jacobian(w.q), w.point));
  const bool zeros = std::all_of(w.residuals.begin(), w.residuals.end(), [](const Scalar& s) { return s.is_zero(); });
  const bool top = !poly_eval(family(static_cast<unsigned>(n), n), w.point).is_zero();
  if (!zeros || !top || w.rank != n - 1)
    fail(ErrorCode::VerificationFailed, std::string(name) + "-family witness failed for n = " + std::to_string(n));
  return w;
}

}  // namespace

PropertySWitness roots_of_unity_witness(std::size_t n) { return family_witness(n, e_poly, "e"); }
PropertySWitness h_family_witness(std::size_t n) { return family_witness(n, h_poly, "h"); }
PropertySWitness p_family_witness(std::size_t n) { return family_witness(n, p_poly, "p"); }

bool property_s_check(std::span<const Poly> q, std::span<const Scalar> a, std::uint64_t seed) {
  for (const auto& qi : q)
    if (qi.arity() != a.size()) fail(ErrorCode::ArityMismatch, "point length differs from the arity");
  for (const auto& qi : q)
    if (!poly_eval(qi, a).is_zero()) return false;
  const JacobianMatrix j = jacobian(q);
  const std::size_t at = mat_rank(evaluate_jacobian(j, a));
  // rank at a point never exceeds the symbolic rank, which never exceeds k.
  if (at == q.size()) return true;
  return at == symbolic_rank(j, seed);
}

PropertySWitness certify_witness(std::span<const Poly> q, std::span<const Scalar> a, std::uint64_t seed) {
  if (!property_s_check(q, a, seed)) fail(ErrorCode::PropertySViolated, "point is not a Property S witness");
  PropertySWitness w;
  w.point.assign(a.begin(), a.end());
  w.q.assign(q.begin(), q.end());
  for (const auto& qi : q) w.residuals.push_back(poly_eval(qi, a));
  w.rank = mat_rank(evaluate_jacobian(jacobian(q), a));
  return w;
}

ShiftedWitness shifted_witness(std::span<const Poly> q, std::uint64_t seed, std::size_t attempts) {
  if (q.empty()) fail(ErrorCode::LengthError, "empty polynomial list");
  const std::size_t n = q.front().arity();
  const JacobianMatrix j = jacobian(q);
  long d = 0;
  for (const auto& qi : q) d += std::max(qi.total_degree() - 1, 0L);
  const std::uint64_t grid = 2 * static_cast<std::uint64_t>(std::max(d, 1L)) + 1;
  std::mt19937_64 rng(seed);
  std::vector<Scalar> c(n);
  for (std::size_t t = 0; t < attempts; ++t) {
    for (auto& x : c) x = Scalar(static_cast<long>(rng() % grid));
    if (mat_rank(evaluate_jacobian(j, c)) != q.size()) continue;
    ShiftedWitness w;
    w.point = c;
    for (const auto& qi : q) {
      w.shifts.push_back(poly_eval(qi, c));
      w.shifted.push_back(qi - Poly::constant(n, w.shifts.back()));
    }
    return w;
  }
  fail(ErrorCode::GridExhausted, "no point of full Jacobian rank in " + std::to_string(attempts) + " samples");
}

}  // namespace symkit
