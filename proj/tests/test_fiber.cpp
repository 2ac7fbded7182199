#include "support.hpp"

using namespace unipotent;
using namespace unipotent::testing;

TEST(InteriorSample, OnRequestedLevel) {
  Rng rng(41);
  for (std::size_t n = 4; n <= 9; ++n) {
    for (Stratum s : {Stratum::q1, Stratum::q2}) {
      for (int k = 0; k < 20; ++k) {
        ExactComplex level = rng.nonzero_exact();
        InteriorPoint ip = interior_sample(n, level, s, rng);
        ASSERT_EQ(ip.values.size(), n - 2);
        ExactSL2 q = middle_product(ip.values);
        const bool even = n % 2 == 0;
        if (even && s == Stratum::q1) EXPECT_EQ(q.a, level);
        if (even && s == Stratum::q2) {
          EXPECT_EQ(q.b, level);
          EXPECT_TRUE(q.a.is_zero());
        }
        if (!even && s == Stratum::q2) EXPECT_EQ(q.b, level);
        if (!even && s == Stratum::q1) {
          EXPECT_EQ(q.a, level);
          EXPECT_TRUE(q.b.is_zero());
        }
      }
    }
  }
}

TEST(InteriorSample, SmallExamples) {
  EXPECT_EQ(middle_product(Xs({"1", "1"})).a, ExactComplex(2));
  EXPECT_EQ(middle_product(Xs({"7", "0"})).a, ExactComplex(1));
  ExactSL2 q = middle_product(Xs({"1", "-1"}));
  EXPECT_EQ(q.b, ExactComplex(1));
  EXPECT_TRUE(q.a.is_zero());
  InteriorPoint ip = interior_sample(4, 1, Stratum::q2, 5);
  EXPECT_EQ(ip.values, Xs({"1", "-1"}));
}

TEST(InteriorSample, DeterministicPerSeed) {
  auto a = interior_sample(6, X("2+i"), Stratum::q1, 99);
  auto b = interior_sample(6, X("2+i"), Stratum::q1, 99);
  EXPECT_EQ(a.values, b.values);
}

TEST(GenericEven, Examples) {
  FiberCompletion fc = complete_generic_even(M("2", "3", "1", "2"), Xs({"1", "1"}));
  EXPECT_EQ(fc.point, Xs({"0", "1", "1", "1"}));
  EXPECT_TRUE(fc.verified);

  FiberCompletion id = complete_generic_even(ExactSL2::identity(1), Xs({"5/3", "0"}));
  EXPECT_EQ(id.point, Xs({"0", "5/3", "0", "-5/3"}));

  FiberCompletion lower5 = complete_generic_even(M("1", "0", "5", "1"), Xs({"0", "0"}));
  EXPECT_EQ(lower5.point, Xs({"5", "0", "0", "0"}));
}

TEST(GenericEven, Preconditions) {
  EXPECT_ERROR_CODE(complete_generic_even(M("2", "3", "1", "2"), Xs({"1", "2"})), "OFF_LEVEL_SET");
  EXPECT_ERROR_CODE(complete_generic_even(M("0", "1", "-1", "0"), Xs({"1", "-1"})), "WRONG_BRANCH");
  EXPECT_ERROR_CODE(complete_generic_even(M("2", "3", "1", "2"), Xs({"1", "1", "1"})), "BAD_N");
  EXPECT_ERROR_CODE(complete_generic_even(M("2", "3", "1", "1"), Xs({"1", "1"})), "NOT_UNIMODULAR");
}

TEST(GenericEvenProperty, RandomTargetsAndEquationFour) {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = k % 2 == 0 ? 4 : 6;
    ExactSL2 target;
    do target = rng.sl2();
    while (target.a.is_zero());
    InteriorPoint ip = interior_sample(n, target.a, Stratum::q1, rng);
    FiberCompletion fc = complete_generic_even(target, ip.values);
    EXPECT_EQ(phi_value(fc.point), target);
    EXPECT_TRUE(corner_residual(target, fc.point).is_zero());
  }
}

TEST(NongenericEven, Examples) {
  ExactSL2 t = M("0", "1", "-1", "0");
  FiberCompletion fc = complete_nongeneric_even(t, 0, Xs({"1"}));
  EXPECT_EQ(fc.point, Xs({"0", "1", "-1", "1"}));
  FiberCompletion shifted = complete_nongeneric_even(t, 1, Xs({"1"}));
  EXPECT_EQ(shifted.point, Xs({"1", "1", "-1", "2"}));
  EXPECT_EQ(phi_value(shifted.point), t);

  ExactSL2 t2 = M("0", "2", "-1/2", "3");
  FiberCompletion fc2 = complete_nongeneric_even(t2, 0, Xs({"2"}));
  EXPECT_EQ(fc2.point[2], X("-1/2"));
  EXPECT_EQ(phi_value(fc2.point), t2);
}

TEST(NongenericEven, FreeCoordinateGivesDistinctCompletions) {
  ExactSL2 t = M("0", "2", "-1/2", "3");
  std::vector<std::vector<ExactComplex>> points;
  for (int z1 = 0; z1 < 10; ++z1) {
    FiberCompletion fc = complete_nongeneric_even(t, z1, Xs({"2"}));
    EXPECT_TRUE(fc.verified);
    for (const auto& p : points) EXPECT_NE(p, fc.point);
    points.push_back(fc.point);
  }
}

TEST(NongenericEvenProperty, RandomTargets) {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = k % 2 == 0 ? 4 : 6;
    ExactComplex b = rng.nonzero_exact();
    ExactSL2 target{0, b, ExactComplex(-1) / b, rng.exact()};
    auto prefix = n == 4 ? std::vector<ExactComplex>{b} : interior_sample(n - 1, b, Stratum::q2, rng).values;
    FiberCompletion fc = complete_nongeneric_even(target, rng.exact(), prefix);
    EXPECT_EQ(phi_value(fc.point), target);
    EXPECT_EQ(fc.point.size(), n);
  }
}

TEST(Odd, Examples) {
  FiberCompletion g = complete_odd(M("1", "1", "0", "1"), Xs({"1", "0", "0"}), Branch::generic);
  EXPECT_EQ(phi_value(g.point), M("1", "1", "0", "1"));

  ExactSL2 diag = M("2", "0", "0", "1/2");
  InteriorPoint ip = interior_sample(5, 2, Stratum::q1, 8);
  FiberCompletion ng = complete_odd(diag, ip.values, Branch::nongeneric, X("1/3"));
  EXPECT_EQ(phi_value(ng.point), diag);
  EXPECT_EQ(ng.point.front(), X("1/3"));

  EXPECT_ERROR_CODE(complete_odd(M("1", "1", "0", "1"), Xs({"1", "0", "0"}), Branch::nongeneric), "WRONG_BRANCH");
}

TEST(OddProperty, RandomTargets) {
  Rng rng(44);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = k % 2 == 0 ? 5 : 7;
    ExactSL2 target;
    do target = rng.sl2();
    while (target.b.is_zero());
    FiberCompletion g = complete_odd(target, interior_sample(n, target.b, Stratum::q2, rng).values, Branch::generic);
    EXPECT_EQ(phi_value(g.point), target);

    ExactComplex a = rng.nonzero_exact();
    ExactSL2 t2{a, 0, rng.exact(), ExactComplex(1) / a};
    FiberCompletion ng = complete_odd(t2, interior_sample(n, a, Stratum::q1, rng).values, Branch::nongeneric, rng.exact());
    EXPECT_EQ(phi_value(ng.point), t2);
  }
}

TEST(Transport, DimensionOne) {
  auto p = fiber_transport_dim1<ExactComplex>({1, 3}, 3, 5);
  EXPECT_EQ(p[0] * p[1], ExactComplex(5));
  EXPECT_EQ((fiber_transport_dim1<ExactComplex>({1, X("2+i")}, X("2+i"), X("-4")))[1], X("-4"));
  Rng rng(45);
  for (int k = 0; k < 50; ++k) {
    ExactComplex z1 = rng.nonzero_exact();
    std::array<ExactComplex, 2> pt{z1, ExactComplex(3) / z1};
    auto q = fiber_transport_dim1(pt, ExactComplex(3), ExactComplex(5));
    EXPECT_EQ(q[0] * q[1], ExactComplex(5));
  }
  EXPECT_ERROR_CODE((fiber_transport_dim1<ExactComplex>({1, 1}, 0, 1)), "ZERO_PARAMETER");
}

TEST(Transport, DimensionTwo) {
  auto p = fiber_transport_dim2<ExactComplex>({1, 0, 0}, 2);
  EXPECT_EQ(p, (std::array<ExactComplex, 3>{2, 0, 0}));
  EXPECT_EQ(f5_level(p), ExactComplex(2));
  Rng rng(46);
  for (int k = 0; k < 50; ++k) {
    F5Point pt = f5_param(rng.nonzero_exact(), rng.nonzero_exact());
    auto q = fiber_transport_dim2(pt.coordinates(), ExactComplex::i());
    EXPECT_EQ(f5_level(q), ExactComplex::i());
  }
}

TEST(F5, Parametrization) {
  F5Point a = f5_param(1, 1);
  EXPECT_EQ(a.coordinates(), (std::array<ExactComplex, 3>{1, 0, 0}));
  F5Point b = f5_param(2, 1);
  EXPECT_EQ(b.coordinates(), (std::array<ExactComplex, 3>{2, 0, -1}));
  F5Point c = f5_param(1, 2);
  EXPECT_EQ(c.coordinates(), (std::array<ExactComplex, 3>{1, 1, 0}));
  Rng rng(47);
  for (int k = 0; k < 100; ++k) {
    F5Point p = f5_param(rng.nonzero_exact(), rng.nonzero_exact());
    EXPECT_EQ(f5_level(p.coordinates()), ExactComplex(1));
    EXPECT_EQ(p.c, ExactComplex(1) + p.z1 * p.z2);
  }
  EXPECT_ERROR_CODE(f5_param(0, 1), "ZERO_PARAMETER");
}
