#include "support.hpp"

using namespace unipotent;
using namespace unipotent::testing;

TEST(Rational, ParsesToCanonicalForm) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(rational_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(rational_string(Rational(5)), "5/1");
}

TEST(Rational, RejectsGarbage) {
  EXPECT_ERROR_CODE(parse_rational("1/0"), "BAD_SCALAR");
  EXPECT_ERROR_CODE(parse_rational("2/-4"), "BAD_SCALAR");
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(ExactComplex, ParsesComplexForms) {
  EXPECT_EQ(X("1/2-3/4i"), ExactComplex(Rational(1, 2), Rational(-3, 4)));
  EXPECT_EQ(X("2i"), ExactComplex(0, 2));
  EXPECT_EQ(X("-i"), ExactComplex(0, -1));
  EXPECT_EQ(X("0.25+i"), ExactComplex(Rational(1, 4), 1));
  EXPECT_EQ(X("7"), ExactComplex(7));
}

TEST(ExactComplex, FieldOperations) {
  const ExactComplex a = X("1+2i"), b = X("3-i");
  EXPECT_EQ(a * b, X("5+5i"));
  EXPECT_EQ(a / b * b, a);
  EXPECT_EQ(a - a, ExactComplex());
  EXPECT_EQ(ExactComplex::i() * ExactComplex::i(), ExactComplex(-1));
  EXPECT_ERROR_CODE(a / ExactComplex(), "DIVISION_BY_ZERO");
}

TEST(ExactComplex, StringRoundTrip) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    ExactComplex x = rng.exact(50, 17);
    EXPECT_EQ(parse_exact(x.str()), x) << x.str();
  }
}

TEST(ApproxComplex, ParsesAndRejectsNonFinite) {
  EXPECT_EQ(parse_approx("1e-3+2i"), ApproxComplex(1e-3, 2));
  EXPECT_EQ(parse_approx("1/4"), ApproxComplex(0.25, 0));
  EXPECT_THROW(parse_approx("nan"), Error);
}

TEST(MultiPoly, RingExamples) {
  const std::size_t n = 4;
  EXPECT_EQ(Z(n, 2) * Z(n, 3) + C(n, 1), C(n, 1) + Z(n, 2) * Z(n, 3));
  EXPECT_EQ((C(n, 1) + Z(n, 2) * Z(n, 3)) * C(n, 1), C(n, 1) + Z(n, 2) * Z(n, 3));
  EXPECT_EQ(Z(n, 2) * Z(n, 3), MultiPoly::monomial({0, 1, 1, 0}, 1));
  EXPECT_EQ((C(n, 1) + Z(n, 2) * Z(n, 3)).str(), "1 + z2*z3");
}

TEST(MultiPoly, Equality) {
  const std::size_t n = 4;
  EXPECT_EQ(C(n, 1) + Z(n, 2) * Z(n, 3), C(n, 1) + Z(n, 3) * Z(n, 2));
  EXPECT_NE(Z(n, 2), Z(n, 3));
  EXPECT_TRUE((Z(n, 2) - Z(n, 2)).is_zero());
}

TEST(MultiPoly, Derivatives) {
  const std::size_t n = 5;
  MultiPoly q1 = C(n, 1) + Z(n, 2) * Z(n, 3);
  EXPECT_EQ(q1.diff(1), Z(n, 3));
  EXPECT_TRUE(C(n, 7).diff(0).is_zero());
  MultiPoly p2 = Z(n, 2) + Z(n, 4) + Z(n, 2) * Z(n, 3) * Z(n, 4);
  EXPECT_EQ(p2.diff(2), Z(n, 2) * Z(n, 4));
  EXPECT_EQ((Z(n, 1) * Z(n, 1) * Z(n, 1)).diff(0), ExactComplex(3) * Z(n, 1) * Z(n, 1));
}

TEST(MultiPoly, Evaluation) {
  MultiPoly q1 = C(2, 1) + Z(2, 1) * Z(2, 2);
  EXPECT_EQ(q1.eval(std::span<const ExactComplex>(Xs({"1", "1"}))), ExactComplex(2));
  EXPECT_EQ(q1.eval(std::span<const ExactComplex>(Xs({"0", "0"}))), ExactComplex(1));
  MultiPoly p2 = Z(3, 1) + Z(3, 3) + Z(3, 1) * Z(3, 2) * Z(3, 3);
  EXPECT_EQ(p2.eval(std::span<const ExactComplex>(Xs({"1", "1", "1"}))), ExactComplex(3));
  std::vector<ApproxComplex> pt{{0.5, 0}, {2, 0}, {1, 1}};
  EXPECT_NEAR(std::abs(p2.eval(std::span<const ApproxComplex>(pt)) - ApproxComplex(2.5, 2)), 0, 1e-15);
}

TEST(MultiPoly, RejectsMismatchedRings) {
  EXPECT_ERROR_CODE(Z(2, 1) + Z(3, 1), "VARIABLE_COUNT_MISMATCH");
  EXPECT_ERROR_CODE(Z(2, 1).diff(5), "INDEX_OUT_OF_RANGE");
  EXPECT_ERROR_CODE(Z(2, 1).eval(std::span<const ExactComplex>(Xs({"1"}))), "LENGTH_MISMATCH");
}

TEST(MultiPoly, NoStoredZeros) {
  MultiPoly p = Z(3, 1) + Z(3, 2);
  p = p - Z(3, 2);
  EXPECT_EQ(p.size(), 1u);
  p.add_term({1, 0, 0}, ExactComplex(-1));
  EXPECT_TRUE(p.is_zero());
}

TEST(MultiPolyProperty, RingAxioms) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 4));
    MultiPoly p = random_poly(rng, n), q = random_poly(rng, n), r = random_poly(rng, n);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
  }
}

TEST(MultiPolyProperty, MixedPartialsCommute) {
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    MultiPoly p = random_poly(rng, 3, 6, 3);
    const std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, 2));
    const std::size_t j = static_cast<std::size_t>(rng.uniform_int(0, 2));
    EXPECT_EQ(p.diff(i).diff(j), p.diff(j).diff(i));
  }
}

TEST(MultiPolyProperty, EvaluationIsHomomorphism) {
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    MultiPoly p = random_poly(rng, 3), q = random_poly(rng, 3);
    std::vector<ExactComplex> pt{rng.exact(), rng.exact(), rng.exact()};
    std::span<const ExactComplex> v(pt);
    EXPECT_EQ((p * q).eval(v), p.eval(v) * q.eval(v));
    EXPECT_EQ((p + q).eval(v), p.eval(v) + q.eval(v));
  }
}

TEST(MultiPolyProperty, ProductRuleMatchesTermwiseDerivative) {
  Rng rng(14);
  for (int k = 0; k < 50; ++k) {
    MultiPoly p = random_poly(rng, 2), q = random_poly(rng, 2);
    EXPECT_EQ((p * q).diff(0), p.diff(0) * q + p * q.diff(0));
  }
}

TEST(SL2, ExactUnimodularityIsChecked) {
  EXPECT_NO_THROW(check_unimodular(M("2", "3", "1", "2")));
  EXPECT_ERROR_CODE(check_unimodular(M("2", "3", "1", "1")), "NOT_UNIMODULAR");
}

TEST(SL2, InverseAndProduct) {
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    ExactSL2 m = rng.sl2();
    EXPECT_EQ(m * m.inverse(), ExactSL2::identity(1));
    EXPECT_EQ(m.det(), ExactComplex(1));
  }
}

TEST(SL2, ApproxDeterminantGate) {
  ApproxSL2 good{2, 3, 1, 2};
  EXPECT_NO_THROW(check_unimodular(good));
  ApproxSL2 bad{2, 3, 1, 2.001};
  EXPECT_ERROR_CODE(check_unimodular(bad), "DET_FAILURE");
  ApproxSL2 inf{std::numeric_limits<double>::infinity(), 0, 0, 1};
  EXPECT_ERROR_CODE(check_unimodular(inf), "NON_FINITE");
}
