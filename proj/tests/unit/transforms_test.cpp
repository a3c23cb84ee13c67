#include <gtest/gtest.h>

#include <random>

#include "error_code.hpp"
#include "oracles.hpp"
#include "symkit/algind.hpp"
#include "symkit/transforms.hpp"

using namespace symkit;

namespace {

Poly P(std::string_view text, std::size_t arity) { return parse_poly(text, arity); }
Formula F(std::string_view text, std::size_t arity) { return Formula::from_poly(P(text, arity)); }

Formula compose(const Poly& g, const std::vector<Formula>& qf, std::size_t n) {
  return substitute_leaves(Formula::from_poly(g), qf, n);
}

std::vector<Formula> e_formulas(unsigned k, std::size_t n) {
  std::vector<Formula> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back(ben_or_e_formula(i, n));
  return out;
}

std::vector<Poly> e_family(unsigned k, std::size_t n) {
  std::vector<Poly> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back(e_poly(i, n));
  return out;
}

}  // namespace

TEST(HomogeneousFormula, Examples) {
  const Formula f = [] {
    const Formula k[] = {F("1+x1", 2), F("1+x2", 2)};
    return Formula::product(k);
  }();
  EXPECT_EQ(formula_expand(homogeneous_component_formula(f, 1)), P("x1+x2", 2));
  EXPECT_EQ(formula_expand(homogeneous_component_formula(f, 0)), Poly::constant(2, 1));
  EXPECT_TRUE(formula_expand(homogeneous_component_formula(f, static_cast<unsigned>(formula_size(f)) + 1)).is_zero());
  EXPECT_EQ(formula_expand(homogeneous_component_formula(f, 2, 2U)), P("x1*x2", 2));
}

TEST(HomogeneousFormula, ComponentsSumBack) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(seed);
    const Formula f = oracle::random_formula(rng, 2, 20);
    const Poly full = formula_expand(f);
    Poly sum(2);
    for (long d = 0; d <= full.total_degree(); ++d) {
      const Poly c = formula_expand(homogeneous_component_formula(f, static_cast<unsigned>(d)));
      EXPECT_EQ(c, homogeneous_component(full, static_cast<unsigned>(d)));
      sum += c;
    }
    EXPECT_EQ(sum, full);
  }
}

TEST(TruncateFormula, KeepsLowDegrees) {
  const Formula f = F("x1^3 + 2*x1*x2 + x2 - 4", 2);
  EXPECT_EQ(formula_expand(truncate_formula(f, 2, 3)), P("2*x1*x2 + x2 - 4", 2));
  EXPECT_EQ(formula_expand(truncate_formula(f, 0, 3)), P("-4", 2));
}

TEST(ShiftFormula, Examples) {
  const Scalar one[] = {1};
  EXPECT_EQ(formula_expand(shift_formula(F("x1^2", 1), one)), P("x1^2+2*x1+1", 1));
  const Formula f = F("x1*x2 - 3*x2", 2);
  const Scalar zero[] = {0, 0};
  EXPECT_EQ(formula_expand(shift_formula(f, zero)), formula_expand(f));
  const Scalar ones[] = {1, 1};
  EXPECT_EQ(formula_expand(shift_formula(F("x1*x2", 2), ones)), P("x1*x2+x1+x2+1", 2));
  EXPECT_EQ(code_of([&] { (void)shift_formula(f, one); }), ErrorCode::ArityMismatch);
}

TEST(DivideFormula, Examples) {
  EXPECT_EQ(formula_expand(divide_formula(F("x1^2-x2^2", 2), F("x1-x2", 2), 1)), P("x1+x2", 2));
  const unsigned top[] = {2, 1};
  const unsigned delta[] = {1, 0};
  const Formula num = Formula::from_poly(generalized_vandermonde(top, 2));
  const Formula den = Formula::from_poly(generalized_vandermonde(delta, 2));
  EXPECT_EQ(formula_expand(divide_formula(num, den, 2)), P("x1*x2", 2));
  const Formula p = F("x1^2*x2 - 5*x2 + 1", 2);
  EXPECT_EQ(formula_expand(divide_formula(p, Formula::constant(2, 1), 3)), formula_expand(p));
}

TEST(DivideFormula, Errors) {
  EXPECT_EQ(code_of([] { (void)divide_formula(F("x1", 2), F("x2", 2), 2); }), ErrorCode::NotDivisible);
  EXPECT_EQ(code_of([] { (void)divide_formula(F("x1^3", 2), F("x1", 2), 1); }), ErrorCode::LengthError);
  EXPECT_EQ(code_of([] { (void)divide_formula(F("x1", 2), Formula::constant(2, 0), 1); }), ErrorCode::DivisionByZero);
}

TEST(DivideFormula, RandomProducts) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::mt19937_64 rng(seed + 100);
    const Formula p = oracle::random_formula(rng, 2, 10);
    Formula r = oracle::random_formula(rng, 2, 8);
    if (formula_expand(r).is_zero()) r = Formula::constant(2, 3);
    const Formula pr[] = {p, r};
    const Poly want = formula_expand(p);
    const unsigned d = static_cast<unsigned>(std::max(want.total_degree(), 0L));
    DivideOptions opts;
    opts.seed = seed;
    EXPECT_EQ(formula_expand(divide_formula(Formula::product(pr), r, d, opts)), want) << "seed " << seed;
  }
}

TEST(KeyLemma, Examples) {
  const auto a = roots_of_unity_point(3);
  const auto q = e_family(2, 3);
  const auto qf = e_formulas(2, 3);
  const auto r1 = key_lemma_reduce(compose(P("x1*x2", 2), qf, 3), q, 2, a);
  EXPECT_EQ(formula_expand(r1.formula), P("x1*x2", 2));
  const auto r2 = key_lemma_reduce(compose(P("x1^2 + x1*x2", 2), qf, 3), q, 2, a);
  EXPECT_EQ(formula_expand(r2.formula), P("x1^2+x1*x2", 2));
  EXPECT_EQ(r2.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(mat_rank(r2.u), 2U);
  EXPECT_EQ(r2.u.select_columns(r2.pivots) * r2.v, ScalarMatrix::identity(2));

  const auto a2 = roots_of_unity_point(2);
  const Poly e1[] = {e_poly(1, 2)};
  const auto r3 = key_lemma_reduce(ben_or_e_formula(1, 2), e1, 1, a2);
  EXPECT_EQ(formula_expand(r3.formula), P("x1", 1));
}

TEST(KeyLemma, PassLedger) {
  const auto a = roots_of_unity_point(3);
  const auto r = key_lemma_reduce(compose(P("x1*x2", 2), e_formulas(2, 3), 3), e_family(2, 3), 2, a);
  ASSERT_EQ(r.passes.size(), 4U);
  EXPECT_EQ(r.passes[0].name, "input");
  EXPECT_EQ(r.passes[1].name, "shift");
  EXPECT_EQ(r.passes[2].name, "homogeneous");
  EXPECT_EQ(r.passes[3].name, "linear-substitution");
}

TEST(KeyLemma, Errors) {
  const auto q = e_family(2, 3);
  const Scalar bad[] = {1, 2, 3};
  const Formula f = compose(P("x1*x2", 2), e_formulas(2, 3), 3);
  EXPECT_EQ(code_of([&] { (void)key_lemma_reduce(f, q, 2, bad); }), ErrorCode::PropertySViolated);
  // g = z1^2 + z2 is not homogeneous of degree 2.
  const auto a = roots_of_unity_point(3);
  const Formula g = compose(P("x1^2 + x2 + x1", 2), e_formulas(2, 3), 3);
  EXPECT_EQ(code_of([&] { (void)key_lemma_reduce(g, q, 2, a); }), ErrorCode::NotHomogeneousInput);
}

TEST(KeyLemma, LeftInverseOfComposition) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 8; ++t) {
    const unsigned k = 1 + rng() % 3;
    const std::size_t n = k + 1;
    const unsigned d = 1 + rng() % 3;
    const Poly g = oracle::random_homogeneous(rng, k, d, 3);
    const auto r = key_lemma_reduce(compose(g, e_formulas(k, n), n), e_family(k, n), d, roots_of_unity_point(n));
    EXPECT_EQ(formula_expand(r.formula), g) << "trial " << t;
  }
}

TEST(Hypothesis, Examples) {
  EXPECT_TRUE(check_main_theorem_hypothesis(Partition({3, 2}), 5));
  EXPECT_FALSE(check_main_theorem_hypothesis(Partition({2, 2}), 5));
  EXPECT_FALSE(check_main_theorem_hypothesis(Partition({3, 2}), 4));
  EXPECT_TRUE(check_main_theorem_hypothesis(Partition({6, 3}), 8));
  EXPECT_TRUE(check_main_theorem_hypothesis(Partition({7, 5, 3}), 10));
}

TEST(SchurToDet, SmallInstance) {
  const Partition lam({3, 2});
  const auto red = schur_to_det_reduce(lam, 5, schur_jt_formula(lam, 5));
  EXPECT_EQ(formula_expand(red.formula), oracle::symbolic_det(2));
  EXPECT_EQ(red.report.ell, 2U);
  EXPECT_EQ(red.report.q_labels, (std::vector<long>{1, 2, 3, 4}));
  EXPECT_TRUE(red.report.size_bound_holds);
  EXPECT_LE(red.report.output_size, red.report.size_constant * red.report.input_size * red.report.input_size * 5);
  ASSERT_FALSE(red.report.passes.empty());
  EXPECT_EQ(red.report.passes.back().name, "relabel");
}

TEST(SchurToDet, DepthIncreaseIsConstant) {
  // Two-row shapes scaled with n = 5, 6, 7.
  const std::pair<Partition, std::size_t> cases[] = {{Partition({3, 2}), 5}, {Partition({4, 2}), 6}, {Partition({5, 2}), 7}};
  std::vector<long> increases;
  for (const auto& [lam, n] : cases) {
    const auto red = schur_to_det_reduce(lam, n, schur_jt_formula(lam, n));
    increases.push_back(static_cast<long>(red.report.output_depth) - static_cast<long>(red.report.input_depth));
  }
  EXPECT_EQ(increases[0], increases[1]);
  EXPECT_EQ(increases[1], increases[2]);
}

TEST(SchurToDet, Errors) {
  const Partition bad({2, 2});
  EXPECT_EQ(code_of([&] { (void)schur_to_det_reduce(bad, 5, schur_jt_formula(bad, 5)); }), ErrorCode::HypothesisFailed);
  const Partition lam({3, 2});
  EXPECT_EQ(code_of([&] { (void)schur_to_det_reduce(lam, 5, schur_jt_formula(Partition({4, 1}), 5)); }),
            ErrorCode::VerificationFailed);
}
