#include "symkit/transforms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "symkit/algind.hpp"
#include "symkit/error.hpp"

namespace symkit {

namespace {

// Inverse of the Vandermonde matrix (beta^j), beta, j = 0..D.
ScalarMatrix inverse_vandermonde(unsigned degree_bound) {
  const std::size_t m = degree_bound + 1;
  ScalarMatrix v(m, m);
  for (std::size_t b = 0; b < m; ++b) {
    Scalar pw(1);
    for (std::size_t j = 0; j < m; ++j) {
      v(b, j) = pw;
      pw *= Scalar(static_cast<long>(b));
    }
  }
  return mat_solve_inverse(v);
}

// Copies f(beta x) for beta = 0..D, combined with weight sum_{r in rows} Vinv[r][beta].
Formula scaled_combination(const Formula& f, unsigned degree_bound, unsigned row_lo, unsigned row_hi) {
  const std::size_t n = f.arity();
  const ScalarMatrix vinv = inverse_vandermonde(degree_bound);
  std::vector<Formula> leaves;
  for (std::size_t j = 0; j < n; ++j) leaves.push_back(Formula::input(n, j));
  std::vector<Formula> copies;
  std::vector<Scalar> weights;
  for (unsigned b = 0; b <= degree_bound; ++b) {
    std::vector<Formula> images;
    images.reserve(n);
    const Scalar beta(static_cast<long>(b));
    for (std::size_t j = 0; j < n; ++j) images.push_back(Formula::sum(std::span(&leaves[j], 1), std::span(&beta, 1)));
    Scalar w(0);
    for (unsigned r = row_lo; r <= row_hi; ++r) w += vinv(r, b);
    copies.push_back(substitute_leaves(f, images, n));
    weights.push_back(w);
  }
  return scalar_combination(copies, weights);
}

std::vector<Scalar> random_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<Scalar> pt;
  pt.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pt.emplace_back(static_cast<long>(rng() % 97) - 48, static_cast<long>(rng() % 7) + 1);
  return pt;
}

PassRecord record(std::string name, const Formula& f) { return {std::move(name), formula_size(f), formula_depth(f)}; }

}  // namespace

Formula homogeneous_component_formula(const Formula& f, unsigned d, std::optional<unsigned> degree_bound) {
  const std::uint64_t size = formula_size(f);
  const unsigned bound = degree_bound ? *degree_bound : static_cast<unsigned>(std::min<std::uint64_t>(size, 1U << 20));
  if (d > bound) return Formula::constant(f.arity(), 0);
  return scaled_combination(f, bound, d, d);
}

Formula truncate_formula(const Formula& f, unsigned d, unsigned degree_bound) {
  return scaled_combination(f, degree_bound, 0, std::min(d, degree_bound));
}

Formula shift_formula(const Formula& f, std::span<const Scalar> a) {
  const std::size_t n = f.arity();
  if (a.size() != n) fail(ErrorCode::ArityMismatch, "shift point has " + std::to_string(a.size()) + " coordinates for arity " + std::to_string(n));
  std::vector<Formula> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Formula kids[] = {Formula::constant(n, a[j]), Formula::input(n, j)};
    images.push_back(Formula::sum(kids));
  }
  return substitute_leaves(f, images, n);
}

Formula divide_formula(const Formula& p, const Formula& r, unsigned d, const DivideOptions& options) {
  const std::size_t n = p.arity();
  if (r.arity() != n) fail(ErrorCode::ArityMismatch, "numerator and denominator arities differ");
  if (options.verify) {
    const Poly pp = formula_expand(p, options.term_budget);
    const Poly rr = formula_expand(r, options.term_budget);
    if (rr.is_zero()) fail(ErrorCode::DivisionByZero, "denominator expands to 0");
    const Poly q = poly_divide_exact(pp, rr);
    if (q.total_degree() > static_cast<long>(d))
      fail(ErrorCode::LengthError, "degree bound " + std::to_string(d) + " below deg(P/R) = " + std::to_string(q.total_degree()));
  }

  // Shift point with R(a) != 0 from the grid {0, ..., 2 size(R)}^n.
  const std::uint64_t grid = 2 * formula_size(r) + 1;
  std::mt19937_64 rng(options.seed);
  std::vector<Scalar> a(n, Scalar(0));
  Scalar r0 = formula_eval(r, a);
  for (std::size_t t = 0; r0.is_zero() && t < options.attempts; ++t) {
    for (auto& x : a) x = Scalar(static_cast<long>(rng() % grid));
    r0 = formula_eval(r, a);
  }
  if (r0.is_zero()) fail(ErrorCode::NoNonvanishingPoint, "R vanishes on every sampled grid point");

  // 1 / R(a + x) = sum_i (-1)^i r0^{-(i+1)} (R(a + x) - r0)^i, truncated at i = d.
  const Formula rs = shift_formula(r, a);
  const Formula rp_kids[] = {rs, Formula::constant(n, 1)};
  const Scalar rp_w[] = {Scalar(1), -r0};
  const Formula rp = Formula::sum(rp_kids, rp_w);
  std::vector<Formula> series;
  std::vector<Scalar> series_w;
  const Scalar inv0 = r0.inverse();
  Scalar coeff = inv0;
  for (unsigned i = 0; i <= d; ++i) {
    if (i == 0) {
      series.push_back(Formula::constant(n, 1));
    } else {
      const std::vector<Formula> copies(i, rp);
      series.push_back(i == 1 ? rp : Formula::product(copies));
    }
    series_w.push_back(coeff);
    coeff *= -inv0;
  }
  const Formula inv = Formula::sum(series, series_w);
  const Formula prod_kids[] = {shift_formula(p, a), inv};
  const Formula shifted_quotient = Formula::product(prod_kids);

  const std::uint64_t bound = formula_degree_bound(p) + static_cast<std::uint64_t>(d) * formula_degree_bound(r);
  const Formula head = truncate_formula(shifted_quotient, d, static_cast<unsigned>(bound));
  std::vector<Scalar> minus_a;
  for (const auto& x : a) minus_a.push_back(-x);
  return shift_formula(head, minus_a);
}

KeyLemmaResult key_lemma_reduce(const Formula& f, std::span<const Poly> q, unsigned d, std::span<const Scalar> witness,
                                const ReduceOptions& options) {
  const std::size_t n = f.arity();
  const std::size_t k = q.size();
  if (k == 0) fail(ErrorCode::LengthError, "empty polynomial list");
  for (const auto& qi : q)
    if (qi.arity() != n) fail(ErrorCode::ArityMismatch, "q arity differs from the formula arity");
  if (witness.size() != n) fail(ErrorCode::ArityMismatch, "witness length differs from the formula arity");
  if (!property_s_check(q, witness, options.seed)) fail(ErrorCode::PropertySViolated, "witness does not certify Property S");

  KeyLemmaResult out{Formula::constant(k, 0), {}, {}, {}, {}};
  out.passes.push_back(record("input", f));

  const Formula shifted = shift_formula(f, witness);
  out.passes.push_back(record("shift", shifted));

  // The syntactic degree never exceeds the size and is still a sound bound.
  const unsigned bound = options.degree_bound
                             ? *options.degree_bound
                             : static_cast<unsigned>(std::min(formula_degree_bound(shifted), formula_size(shifted)));
  const Formula homog = homogeneous_component_formula(shifted, d, bound);
  out.passes.push_back(record("homogeneous", homog));

  out.u = evaluate_jacobian(jacobian(q), witness);
  if (mat_rank(out.u) != k) fail(ErrorCode::PropertySViolated, "Jacobian at the witness has rank below k");
  std::vector<std::size_t> leftmost(k);
  for (std::size_t i = 0; i < k; ++i) leftmost[i] = i;
  if (k <= n && mat_rank(out.u.select_columns(leftmost)) == k) {
    out.pivots = leftmost;
  } else {
    for (std::size_t c = 0; c < n && out.pivots.size() < k; ++c) {
      out.pivots.push_back(c);
      if (mat_rank(out.u.select_columns(out.pivots)) != out.pivots.size()) out.pivots.pop_back();
    }
  }
  out.v = mat_solve_inverse(out.u.select_columns(out.pivots));

  // x_{p_m} -> sum_i V[m][i] z_i; every other x_j -> the zero form.
  std::vector<Formula> z;
  for (std::size_t i = 0; i < k; ++i) z.push_back(Formula::input(k, i));
  std::vector<Formula> images(n, Formula::sum(z, std::vector<Scalar>(k, Scalar(0))));
  for (std::size_t m = 0; m < k; ++m) {
    std::vector<Scalar> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = out.v(m, i);
    images[out.pivots[m]] = Formula::sum(z, row);
  }
  out.formula = substitute_leaves(homog, images, k);
  out.passes.push_back(record("linear-substitution", out.formula));

  if (options.verify) {
    // f(x) = g(q(x)) must hold with g read off the reduced formula.
    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int t = 0; t < 3; ++t) {
      const auto pt = random_point(n, rng);
      std::vector<Scalar> qpt;
      for (const auto& qi : q) qpt.push_back(poly_eval(qi, pt));
      if (!(formula_eval(f, pt) == formula_eval(out.formula, qpt)))
        fail(ErrorCode::NotHomogeneousInput, "reduced formula does not reproduce f; g is not homogeneous of degree " + std::to_string(d));
    }
  }
  return out;
}

bool check_main_theorem_hypothesis(const Partition& lambda, std::size_t n) {
  const std::size_t l = lambda.length();
  if (l == 0) return false;
  for (std::size_t i = 0; i + 1 < l; ++i)
    if (lambda[i] < lambda[i + 1] + (l - 1)) return false;
  if (lambda[l - 1] < l) return false;
  return n >= lambda[0] + l;
}

SchurReduction schur_to_det_reduce(const Partition& lambda, std::size_t n, const Formula& f, const ReduceOptions& options) {
  if (!check_main_theorem_hypothesis(lambda, n))
    fail(ErrorCode::HypothesisFailed, "lambda = (" + lambda.to_string() + "), n = " + std::to_string(n) + " fails the gap/size hypothesis");
  if (f.arity() != n) fail(ErrorCode::ArityMismatch, "formula arity differs from n");
  const std::size_t l = lambda.length();

  if (options.verify) {
    const Poly s = schur_jt_h(lambda, n);
    std::mt19937_64 rng(options.seed);
    for (int t = 0; t < 3; ++t) {
      const auto pt = random_point(n, rng);
      if (!(formula_eval(f, pt) == poly_eval(s, pt)))
        fail(ErrorCode::VerificationFailed, "input formula does not compute s_(" + lambda.to_string() + ")");
    }
  }

  // Distinct Jacobi-Trudi labels lambda_i - i + j, ascending.
  std::vector<long> label_of(l * l);
  std::set<long> distinct;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      label_of[i * l + j] = static_cast<long>(lambda[i]) - static_cast<long>(i) + static_cast<long>(j);
      distinct.insert(label_of[i * l + j]);
    }
  const std::vector<long> labels(distinct.begin(), distinct.end());
  std::vector<Poly> q;
  for (long lab : labels) q.push_back(h_poly(static_cast<unsigned>(lab), n));

  const PropertySWitness family = h_family_witness(n);

  ReduceOptions ko = options;
  if (!ko.degree_bound) ko.degree_bound = lambda.weight();
  KeyLemmaResult kl = key_lemma_reduce(f, q, static_cast<unsigned>(l), family.point, ko);

  // z_m (label m) -> z_{i*l + j} for the cell carrying that label.
  std::vector<Formula> relabel;
  for (long lab : labels) {
    const auto pos = static_cast<std::size_t>(std::find(label_of.begin(), label_of.end(), lab) - label_of.begin());
    relabel.push_back(Formula::input(l * l, pos));
  }
  SchurReduction out{substitute_leaves(kl.formula, relabel, l * l), {}};
  kl.passes.push_back(record("relabel", out.formula));

  ReductionReport& rep = out.report;
  rep.lambda = lambda;
  rep.n = n;
  rep.ell = l;
  rep.input_size = formula_size(f);
  rep.input_depth = formula_depth(f);
  rep.output_size = formula_size(out.formula);
  rep.output_depth = formula_depth(out.formula);
  rep.witness = family.point;
  rep.q_labels = labels;
  rep.pivots = kl.pivots;
  rep.passes = std::move(kl.passes);
  rep.size_bound_holds = rep.output_size <= rep.size_constant * rep.input_size * rep.input_size * n;
  return out;
}

}  // namespace symkit
