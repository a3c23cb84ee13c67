#include <gtest/gtest.h>

#include <random>

#include "error_code.hpp"
#include "oracles.hpp"
#include "symkit/multipoly.hpp"

using namespace symkit;

namespace {

Poly P(std::string_view text, std::size_t arity = 2) { return parse_poly(text, arity); }

}  // namespace

TEST(PolyRing, Examples) {
  EXPECT_EQ(P("x1+x2") * P("x1-x2"), P("x1^2-x2^2"));
  EXPECT_EQ(P("3*x1*x2+1") + Poly(2), P("3*x1*x2+1"));
  EXPECT_EQ(P("x1") * P("x2"), P("x1*x2"));
  EXPECT_EQ(poly_ring_ops(P("x1"), P("x2"), PolyOp::mul), P("x1*x2"));
  EXPECT_EQ(poly_ring_ops(P("x1"), P("x1"), PolyOp::sub), Poly(2));
  EXPECT_EQ(code_of([] { (void)poly_ring_ops(Poly(2), Poly(3), PolyOp::add); }), ErrorCode::ArityMismatch);
}

TEST(PolyRing, EvaluationIsMultiplicative) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 4;
    const Poly p = oracle::random_poly(rng, n, 4, 6);
    const Poly q = oracle::random_poly(rng, n, 4, 6);
    for (int k = 0; k < 5; ++k) {
      const auto pt = oracle::random_point(rng, n);
      EXPECT_EQ(poly_eval(p * q, pt), poly_eval(p, pt) * poly_eval(q, pt));
      EXPECT_EQ(poly_eval(p + q, pt), poly_eval(p, pt) + poly_eval(q, pt));
    }
  }
}

TEST(PolyEval, Examples) {
  const Scalar pt[] = {2, 3};
  EXPECT_EQ(poly_eval(P("x1^2+x2"), pt), Scalar(7));
  const Poly p = P("5*x1^3 - x1*x2 + 11");
  const Scalar zero[] = {0, 0};
  EXPECT_EQ(poly_eval(p, zero), Scalar(11));
  const Scalar w = Scalar::root_of_unity(3);
  const Scalar roots[] = {Scalar(1), w, w * w};
  EXPECT_TRUE(poly_eval(P("x1*x2*x3", 3), roots).is_one());
  EXPECT_EQ(code_of([&] { (void)poly_eval(P("x1", 3), pt); }), ErrorCode::ArityMismatch);
}

TEST(Derivative, Examples) {
  EXPECT_EQ(partial_derivative(P("x1^2*x2"), 0), P("2*x1*x2"));
  EXPECT_TRUE(partial_derivative(P("7"), 0).is_zero());
  EXPECT_EQ(partial_derivative(P("x1+x2"), 1), P("1"));
  EXPECT_EQ(code_of([] { (void)partial_derivative(Poly(2), 2); }), ErrorCode::IndexOutOfRange);
}

TEST(Derivative, EulerIdentity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const unsigned d = rng() % 5;
    const Poly p = oracle::random_homogeneous(rng, n, d, 5);
    Poly lhs(n);
    for (std::size_t j = 0; j < n; ++j) lhs += Poly::variable(n, j) * partial_derivative(p, j);
    EXPECT_EQ(lhs, p * Scalar(static_cast<long>(d)));
  }
}

TEST(Homogeneous, Examples) {
  EXPECT_EQ(homogeneous_component(P("x1^2+x1*x2+x1"), 2), P("x1^2+x1*x2"));
  EXPECT_TRUE(homogeneous_component(P("x1^2+x1"), 0).is_zero());
  EXPECT_EQ(homogeneous_component(P("5"), 0), P("5"));
  EXPECT_TRUE(is_homogeneous(P("x1^2+x1*x2")));
  EXPECT_FALSE(is_homogeneous(P("x1^2+x2")));
}

TEST(Homogeneous, ComponentsSumBack) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const Poly p = oracle::random_poly(rng, 3, 5, 8);
    Poly sum(3);
    for (long d = 0; d <= p.total_degree(); ++d) {
      const Poly c = homogeneous_component(p, static_cast<unsigned>(d));
      EXPECT_TRUE(is_homogeneous(c));
      sum += c;
    }
    EXPECT_EQ(sum, p);
  }
}

TEST(Division, Examples) {
  EXPECT_EQ(poly_divide_exact(P("x1^2-x2^2"), P("x1+x2")), P("x1-x2"));
  const Poly p = P("3*x1^3*x2 - x2 + 2");
  EXPECT_EQ(poly_divide_exact(p, P("1")), p);
  const Poly q = poly_divide_exact(P("x1^2*x2 - x1*x2^2"), P("x1 - x2"));
  EXPECT_EQ(q, P("x1*x2"));
  EXPECT_EQ(q * P("x1 - x2"), P("x1^2*x2 - x1*x2^2"));
  EXPECT_EQ(code_of([] { (void)poly_divide_exact(parse_poly("x1^2+1", 2), parse_poly("x1+x2", 2)); }),
            ErrorCode::NotDivisible);
  EXPECT_EQ(code_of([] { (void)poly_divide_exact(parse_poly("x1", 2), Poly(2)); }), ErrorCode::DivisionByZero);
}

TEST(Division, RandomProducts) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const Poly a = oracle::random_poly(rng, 3, 3, 5);
    Poly r = oracle::random_poly(rng, 3, 3, 4);
    if (r.is_zero()) r = Poly::constant(3, 1);
    EXPECT_EQ(poly_divide_exact(a * r, r), a);
  }
}

TEST(Substitution, ShiftAndRemap) {
  const Scalar one[] = {1, 1};
  EXPECT_EQ(shift(P("x1*x2"), one), P("x1*x2+x1+x2+1"));
  const std::size_t swap[] = {1, 0};
  EXPECT_EQ(remap_variables(P("x1^2*x2"), swap, 2), P("x1*x2^2"));
  const Poly images[] = {P("x1+x2"), P("x1*x2")};
  EXPECT_EQ(substitute(P("x1^2 - 2*x2"), images, 2), P("x1^2+x2^2"));
}

TEST(Symmetry, Detection) {
  EXPECT_TRUE(is_symmetric(P("x1^2+x2^2+x3^2", 3)));
  EXPECT_FALSE(is_symmetric(P("x1^2+x2^2", 3)));
  EXPECT_FALSE(is_symmetric(P("x1^2*x2+x2^2*x3+x3^2*x1", 3)));
}

TEST(Text, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Poly p = oracle::random_poly(rng, 4, 4, 6);
    EXPECT_EQ(parse_poly(to_string(p), 4), p);
  }
  EXPECT_EQ(to_string(P("x2 + x1^2 - 2*x1*x2 + 1/2")), "x1^2 - 2*x1*x2 + x2 + 1/2");
  EXPECT_EQ(to_string(Poly(2)), "0");
  EXPECT_EQ(to_string(P("x1*x2 - 1"), "h"), "h1*h2 - 1");
  const Poly c = parse_poly("(1 + w)*x1 - w^2", 1, 3);
  EXPECT_EQ(parse_poly(to_string(c), 1, 3), c);
  EXPECT_THROW(parse_poly("x3", 2), Error);
  EXPECT_THROW(parse_poly("x1 +", 2), Error);
}

TEST(CofactorDet, MatchesLeibniz) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Poly> m;
    for (std::size_t i = 0; i < n * n; ++i) m.push_back(Poly::variable(n * n, i));
    EXPECT_EQ(det_cofactor(m, n, n * n), oracle::leibniz_det(m, n, n * n)) << "n = " << n;
  }
}

namespace {

TruncatedSeries series(unsigned cap, std::vector<long> cs) {
  std::vector<Poly> c;
  for (long v : cs) c.push_back(Poly::constant(1, v));
  c.resize(cap + 1, Poly(1));
  return TruncatedSeries(cap, c);
}

}  // namespace

TEST(Series, Examples) {
  EXPECT_EQ(series_inverse(series(3, {1, -1})), series(3, {1, 1, 1, 1}));
  const TruncatedSeries e = series_exp(series(2, {0, 1}));
  EXPECT_EQ(e[0], Poly::constant(1, 1));
  EXPECT_EQ(e[1], Poly::constant(1, 1));
  EXPECT_EQ(e[2], Poly::constant(1, Scalar(1, 2)));
  EXPECT_EQ(series_ops(series(2, {1, 1}), series(2, {1, -1}), SeriesOp::mul), series(2, {1, 0, -1}));
  EXPECT_EQ(series_ops(series(2, {1, 1}), series(2, {1, -1}), SeriesOp::add), series(2, {2}));
  EXPECT_EQ(series_negate_argument(series(3, {1, 2, 3, 4})), series(3, {1, -2, 3, -4}));
  EXPECT_EQ(code_of([] { (void)series_inverse(series(2, {0, 1})); }), ErrorCode::NonUnitConstantTerm);
  EXPECT_EQ(code_of([] { (void)series_exp(series(2, {1, 1})); }), ErrorCode::NonZeroConstantTerm);
}

TEST(Series, InverseRoundTrip) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const unsigned cap = 2 + rng() % 4;
    std::vector<Poly> c;
    c.push_back(Poly::constant(2, 1 + static_cast<long>(rng() % 3)));
    for (unsigned k = 1; k <= cap; ++k) c.push_back(oracle::random_poly(rng, 2, 2, 3));
    const TruncatedSeries a(cap, c);
    const TruncatedSeries prod = series_ops(a, series_inverse(a), SeriesOp::mul);
    EXPECT_EQ(prod[0], Poly::constant(2, 1));
    for (unsigned k = 1; k <= cap; ++k) EXPECT_TRUE(prod[k].is_zero());
  }
}

TEST(Series, ExpOfIntegral) {
  // exp(integral of 1) over cap 4 equals exp(t).
  const TruncatedSeries e = series_exp(series_integrate(series(4, {1})));
  Scalar fact = 1;
  for (unsigned k = 0; k <= 4; ++k) {
    if (k > 0) fact *= Scalar(static_cast<long>(k));
    EXPECT_EQ(e[k], Poly::constant(1, fact.inverse()));
  }
}
