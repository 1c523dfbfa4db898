#include <gtest/gtest.h>

#include <random>

#include "wm/poly.hpp"
#include "wm/poly_io.hpp"
#include "wm/series.hpp"
#include "test_util.hpp"

using namespace wm;

namespace {

MultiPoly q() { return q_pow(1); }
MultiPoly t() { return t_pow(1); }
MultiPoly s() { return s_pow(1); }

MultiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<int> coef(-5, 5);
  MultiPoly p;
  for (int i = 0; i < 5; ++i) {
    p.add_term({static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng))},
               coef(rng));
  }
  return p;
}

}  // namespace

TEST(MultiPoly, ArithmeticExamples) {
  EXPECT_EQ(poly_arith(one() + q() * t(), q() * t(), ArithOp::add), one() + MultiPoly::monomial(2, {1, 1, 0}));
  EXPECT_EQ(poly_arith(one() + q(), one() - q(), ArithOp::mul), one() - q_pow(2));
  EXPECT_TRUE(poly_arith(one() + q() * t() * s(), MultiPoly{}, ArithOp::mul).is_zero());
  EXPECT_TRUE(poly_arith(q(), q(), ArithOp::sub).is_zero());
}

TEST(MultiPoly, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const auto c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * one(), a);
  }
}

TEST(MultiPoly, NoZeroTermsStored) {
  MultiPoly p = q() + t();
  p -= q();
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p, t());
}

TEST(MultiPoly, BigCoefficientsDoNotOverflow) {
  const auto p = (one() + q()).pow(100);
  BigInt expected = 1;
  for (int i = 0; i < 100; ++i) expected *= 2;
  EXPECT_EQ(p.coefficient_sum(), expected);
  // C(100,50)
  EXPECT_EQ(p.coeff({50, 0, 0}), BigInt("100891344545564193334812497256"));
}

TEST(Specialize, Examples) {
  EXPECT_EQ(evaluate(one() + q() * t(), Var::q, 1), one() + t());
  EXPECT_EQ(swap_vars(one() + q_pow(2) * t(), Var::q, Var::t), one() + t_pow(2) * q());
  const auto p = MultiPoly::monomial(3, {2, 1, 0}) - MultiPoly::monomial(4, {0, 0, 2}) + one();
  const auto all_one = specialize(p, Assignment{}.set(Var::q, 1).set(Var::t, 1).set(Var::s, 1));
  EXPECT_EQ(all_one, MultiPoly::constant(p.coefficient_sum()));
  EXPECT_EQ(all_one, MultiPoly::constant(0));
}

TEST(Specialize, IntegerPowers) {
  // (1 + q t)(1 + q^2) at q = 3: (1 + 3t) * 10
  const auto p = (one() + q() * t()) * (one() + q_pow(2));
  EXPECT_EQ(evaluate(p, Var::q, 3), MultiPoly::constant(10) + MultiPoly::monomial(30, {0, 1, 0}));
}

TEST(Specialize, VariableMergeAddsExponents) {
  const auto p = q_pow(2) * t_pow(3);
  EXPECT_EQ(specialize(p, Assignment{}.set(Var::t, Var::q)), q_pow(5));
}

TEST(ReciprocalConjugate, Examples) {
  EXPECT_EQ(reciprocal_conjugate(one() + q() * t(), 1, 1), one() + q() * t());
  EXPECT_EQ(reciprocal_conjugate(one(), 2, 3), q_pow(2) * t_pow(3));
  EXPECT_THROW(reciprocal_conjugate(q_pow(3), 2, 0), std::domain_error);
}

TEST(ReciprocalConjugate, IsAnInvolution) {
  std::mt19937 rng(11);
  for (int round = 0; round < 30; ++round) {
    const auto p = random_poly(rng);
    EXPECT_EQ(reciprocal_conjugate(reciprocal_conjugate(p, 4, 5), 4, 5), p);
  }
}

TEST(DivideExact, QuotientAndRemainder) {
  EXPECT_EQ(divide_exact(one() - q_pow(4), one() - q()), one() + q() + q_pow(2) + q_pow(3));
  EXPECT_EQ(divide_exact(t_pow(3) - one(), t() - one()), one() + t() + t_pow(2));
  EXPECT_THROW(divide_exact(one() + q_pow(2), one() - q()), std::domain_error);
  EXPECT_THROW(divide_exact(one(), MultiPoly{}), std::domain_error);
}

TEST(Series, GeometricFactors) {
  EXPECT_EQ(series_geometric_factor(1, false, 3).to_poly(), one() + t() + t_pow(2) + t_pow(3));
  EXPECT_EQ(series_geometric_factor(2, true, 5).to_poly(), one() + s() * t_pow(2) + s_pow(2) * t_pow(4));
  EXPECT_THROW(series_geometric_factor(0, false, 3), std::invalid_argument);
}

TEST(Series, PartitionProductMatchesPartitionCounts) {
  // partitions of n with parts at most 2, counted directly
  const std::uint32_t bound = 10;
  MultiPoly expected;
  for (std::uint32_t n = 0; n <= bound; ++n) {
    unsigned ways = 0;
    for (std::uint32_t twos = 0; 2 * twos <= n; ++twos) ++ways;
    expected += MultiPoly::monomial(ways, {0, n, 0});
  }
  const auto prod = series_arith(series_geometric_factor(1, false, bound), series_geometric_factor(2, false, bound), SeriesOp::mul);
  EXPECT_EQ(prod.to_poly(), expected);
  EXPECT_EQ(TruncSeries::partition_product(2, false, 4).to_poly(), one() + t() + cst(2) * t_pow(2) + cst(2) * t_pow(3) + cst(3) * t_pow(4));
}

TEST(Series, TruncationDropsHighDegrees) {
  const auto a = series_from_poly(one() + t_pow(3), 4);
  const auto sq = series_arith(a, a, SeriesOp::mul);
  EXPECT_EQ(sq.to_poly(), one() + cst(2) * t_pow(3));
  EXPECT_EQ(series_arith(a, a, SeriesOp::add).to_poly(), cst(2) + cst(2) * t_pow(3));
}

TEST(Series, BoundMismatchRejected) {
  EXPECT_THROW(series_from_poly(one(), 3) * series_from_poly(one(), 4), std::invalid_argument);
}

TEST(Series, InverseOfOneMinusT) {
  const std::uint32_t bound = 8;
  const auto prod = series_from_poly(one() - t(), bound) * series_geometric_factor(1, false, bound);
  EXPECT_EQ(prod.to_poly(), one());
}

TEST(PolyIo, TextFormat) {
  EXPECT_EQ(to_text(one() + q() * t()), "1 + q*t");
  EXPECT_EQ(to_text(MultiPoly{}), "0");
  EXPECT_EQ(to_text(one() - MultiPoly::monomial(3, {2, 0, 1})), "1 - 3*q^2*s");
}

TEST(PolyIo, JsonRoundTrip) {
  std::mt19937 rng(3);
  for (int round = 0; round < 20; ++round) {
    const auto p = random_poly(rng) * MultiPoly::constant(BigInt("123456789012345678901234567890"));
    EXPECT_EQ(poly_from_json(nlohmann::json::parse(to_json(p).dump())), p);
  }
}

TEST(PolyIo, JsonRejectsMalformed) {
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"terms":[]})")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"vars":["t","q","s"],"terms":[]})")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"vars":["q","t","s"],"terms":[{"e":[1,0],"c":"1"}]})")),
               std::invalid_argument);
}

TEST(PolyIo, LatexHasOneRowPerTPower) {
  const auto latex = to_latex(one() + q() * t() + q_pow(2) * t_pow(2));
  EXPECT_NE(latex.find("t^2"), std::string::npos);
}
