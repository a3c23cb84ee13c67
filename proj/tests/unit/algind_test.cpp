#include <gtest/gtest.h>

#include <random>

#include "error_code.hpp"
#include "oracles.hpp"
#include "symkit/algind.hpp"
#include "symkit/symmetric.hpp"

using namespace symkit;

namespace {

Poly P(std::string_view text, std::size_t arity) { return parse_poly(text, arity); }

std::vector<Poly> family(Poly (*f)(unsigned, std::size_t), unsigned k, std::size_t n) {
  std::vector<Poly> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back(f(i, n));
  return out;
}

}  // namespace

TEST(Jacobian, Examples) {
  const auto j = jacobian(family(e_poly, 2, 2));
  EXPECT_EQ(j.rows, 2U);
  EXPECT_EQ(j.cols, 2U);
  EXPECT_EQ(j(0, 0), Poly::constant(2, 1));
  EXPECT_EQ(j(0, 1), Poly::constant(2, 1));
  EXPECT_EQ(j(1, 0), P("x2", 2));
  EXPECT_EQ(j(1, 1), P("x1", 2));
  const Poly sq[] = {P("x1^2", 1)};
  EXPECT_EQ(jacobian(sq)(0, 0), P("2*x1", 1));
  const Poly same[] = {P("x1+x2", 2), P("x1+x2", 2)};
  EXPECT_EQ(symbolic_rank(jacobian(same)), 1U);
  const Poly mixed[] = {P("x1", 2), P("x1", 3)};
  EXPECT_EQ(code_of([&] { (void)jacobian(mixed); }), ErrorCode::ArityMismatch);
}

TEST(SymbolicRank, Examples) {
  for (std::size_t n = 2; n <= 6; ++n)
    EXPECT_EQ(symbolic_rank(jacobian(family(e_poly, static_cast<unsigned>(n - 1), n))), n - 1) << "n = " << n;
  const Poly q = P("x1*x2 + x3^2", 3);
  const Poly twice[] = {q, q};
  EXPECT_EQ(symbolic_rank(jacobian(twice)), 1U);
  const Poly constants[] = {Poly::constant(2, 3), Poly::constant(2, -1)};
  EXPECT_EQ(symbolic_rank(jacobian(constants)), 0U);
}

TEST(SymbolicRank, ExactAndRandomizedAgree) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<Poly> q;
    for (std::size_t i = 0; i < k; ++i) q.push_back(oracle::random_poly(rng, 3, 2, 3));
    const auto j = jacobian(q);
    EXPECT_EQ(symbolic_rank(j, t), exact_symbolic_rank(j));
  }
}

TEST(SymbolicRank, MatchesAnnihilatorSearch) {
  // Full rank exactly when no relation of degree <= 3 exists.
  std::mt19937_64 rng(41);
  int dependent = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t k = 1 + rng() % 2;
    std::vector<Poly> q;
    for (std::size_t i = 0; i < k; ++i) q.push_back(oracle::random_poly(rng, n, 2, 1 + rng() % 3));
    if (k == 2 && rng() % 3 == 0) q[1] = q[0] * q[0] * Scalar(2) - q[0] + Poly::constant(n, 1);
    const bool full = symbolic_rank(jacobian(q), t) == k;
    EXPECT_EQ(full, !oracle::has_annihilator(q, 3)) << "trial " << t;
    dependent += full ? 0 : 1;
  }
  EXPECT_GT(dependent, 0);
}

TEST(Witness, RootsOfUnity) {
  const auto w = roots_of_unity_witness(3);
  for (const auto& r : w.residuals) EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(w.rank, 2U);
  EXPECT_EQ(w.point.size(), 3U);
  EXPECT_EQ(w.point[1], Scalar::root_of_unity(3, 1));
}

TEST(Witness, HFamily) {
  const auto w = h_family_witness(3);
  EXPECT_TRUE(poly_eval(h_poly(1, 3), w.point).is_zero());
  EXPECT_TRUE(poly_eval(h_poly(2, 3), w.point).is_zero());
  EXPECT_TRUE(poly_eval(h_poly(3, 3), w.point).is_one());
}

TEST(Witness, PFamily) {
  const auto w = p_family_witness(3);
  EXPECT_TRUE(poly_eval(p_poly(1, 3), w.point).is_zero());
  EXPECT_TRUE(poly_eval(p_poly(2, 3), w.point).is_zero());
  EXPECT_EQ(poly_eval(p_poly(3, 3), w.point), Scalar(3));
}

TEST(Witness, AllFamiliesUpToEight) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& w : {roots_of_unity_witness(n), h_family_witness(n), p_family_witness(n)}) {
      for (std::size_t i = 0; i < w.q.size(); ++i) EXPECT_TRUE(poly_eval(w.q[i], w.point).is_zero());
      EXPECT_EQ(mat_rank(evaluate_jacobian(jacobian(w.q), w.point)), n - 1);
    }
  }
}

TEST(PropertyS, Check) {
  const auto q = family(e_poly, 2, 3);
  const auto a = roots_of_unity_point(3);
  EXPECT_TRUE(property_s_check(q, a));
  const auto q2 = family(e_poly, 2, 2);
  const Scalar zero[] = {0, 0};
  EXPECT_FALSE(property_s_check(q2, zero));
  const Poly x1[] = {P("x1", 1)};
  const Scalar one[] = {1};
  EXPECT_FALSE(property_s_check(x1, one));
  EXPECT_EQ(code_of([&] { (void)certify_witness(q2, zero); }), ErrorCode::PropertySViolated);
}

TEST(PropertyS, SubsetsOfCertifiedFamilies) {
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& w : {roots_of_unity_witness(n), h_family_witness(n)}) {
      const std::size_t k = w.q.size();
      for (unsigned mask = 1; mask < (1U << k); ++mask) {
        std::vector<Poly> sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1U) sub.push_back(w.q[i]);
        EXPECT_TRUE(property_s_check(sub, w.point)) << "n=" << n << " mask=" << mask;
      }
    }
}

TEST(Jacobian, LeadingMinorOfElementaryFamily) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto j = jacobian(family(e_poly, static_cast<unsigned>(n - 1), n));
    std::vector<Poly> minor;
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0; c + 1 < n; ++c) minor.push_back(j(r, c));
    const Poly det = oracle::leibniz_det(minor, n - 1, n);
    const Poly q = poly_divide_exact(det, oracle::vandermonde_product(n - 1, n));
    EXPECT_TRUE(q.is_constant());
    EXPECT_FALSE(q.is_zero());
  }
}

TEST(ShiftedWitness, ElementaryFamily) {
  const auto q = family(e_poly, 3, 3);
  const auto w = shifted_witness(q, 0);
  EXPECT_TRUE(property_s_check(w.shifted, w.point));
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_EQ(poly_eval(q[i], w.point), w.shifts[i]);
  const auto again = shifted_witness(q, 0);
  EXPECT_EQ(again.point, w.point);
}

TEST(ShiftedWitness, IdentityJacobian) {
  const Poly q[] = {P("x1", 2), P("x2", 2)};
  const auto w = shifted_witness(q, 5);
  EXPECT_EQ(w.shifts, w.point);
}

TEST(ShiftedWitness, Exhaustion) {
  const Poly q[] = {P("x1+x2", 2), P("2*x1+2*x2", 2)};
  EXPECT_EQ(code_of([&] { (void)shifted_witness(q, 0, 16); }), ErrorCode::GridExhausted);
}
