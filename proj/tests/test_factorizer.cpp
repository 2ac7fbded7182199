#include "support.hpp"

using namespace unipotent;
using namespace unipotent::testing;

TEST(FactorConstant, Examples) {
  EXPECT_TRUE(factor_constant(ExactSL2::identity(1)).word.empty());

  ExactFactorization rot = factor_constant(M("0", "-1", "1", "0"));
  EXPECT_EQ(rot.word, alternating_word<ExactComplex>(Side::upper, {-1, 1, -1}));

  ExactFactorization diag = factor_constant(M("2", "0", "0", "1/2"));
  EXPECT_EQ(diag.word, alternating_word<ExactComplex>(Side::upper, {1, 1, X("-1/2"), -2}));
  EXPECT_TRUE(diag.verified);

  EXPECT_EQ(factor_constant(M("1", "0", "7", "1")).word.size(), 1u);
  EXPECT_EQ(factor_constant(M("1", "i", "0", "1")).word.size(), 1u);
}

TEST(FactorConstant, RejectsNonUnimodular) { EXPECT_ERROR_CODE(factor_constant(M("1", "1", "1", "1")), "NOT_UNIMODULAR"); }

TEST(FactorConstantProperty, AtMostFourFactors) {
  Rng rng(51);
  for (int k = 0; k < 1000; ++k) {
    ExactSL2 m = rng.sl2();
    ExactFactorization f = factor_constant(m);
    EXPECT_EQ(evaluate(f.word), m);
    EXPECT_LE(f.factor_count(), 4u);
    EXPECT_TRUE(is_alternating(f.word));
    const bool elementary_target = m.a == ExactComplex(1) && m.d == ExactComplex(1) && (m.b.is_zero() || m.c.is_zero());
    if ((!m.b.is_zero() || !m.c.is_zero()) && !elementary_target) EXPECT_EQ(f.factor_count(), 3u);
  }
}

TEST(ThreeFactor, DiagonalIsNotReached) {
  ExactSL2 diag = M("2", "0", "0", "1/2");
  EXPECT_FALSE(try_three_factor(diag, Side::upper).has_value());
  EXPECT_FALSE(try_three_factor(diag, Side::lower).has_value());
  auto w = try_three_factor(M("2", "3", "1", "2"), Side::upper);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(evaluate(*w), M("2", "3", "1", "2"));
}

TEST(UnitCorner, Examples) {
  EXPECT_EQ(evaluate(factor_unit_corner(0, 0, 1).word), ExactSL2::identity(1));
  ExactFactorization f = factor_unit_corner(1, 1, 2);
  EXPECT_EQ(f.word, alternating_word<ExactComplex>(Side::lower, {0, 0, 1, 1}));
  EXPECT_EQ(evaluate(f.word), M("1", "1", "1", "2"));
  EXPECT_EQ(evaluate(factor_unit_corner(-1, 2, -1).word), M("1", "-1", "2", "-1"));
  EXPECT_ERROR_CODE(factor_unit_corner(1, 1, 1), "NOT_UNIMODULAR");
}

TEST(OffdiagZero, Examples) {
  EXPECT_EQ(factor_offdiag_zero(1, 1).word, alternating_word<ExactComplex>(Side::lower, {0, 0, 1, 0}));
  EXPECT_EQ(factor_offdiag_zero(2, 0).word, alternating_word<ExactComplex>(Side::lower, {X("-1/2"), 1, 1, X("-1/2")}));
  EXPECT_EQ(evaluate(factor_offdiag_zero(1, 0).word), ExactSL2::identity(1));
  EXPECT_ERROR_CODE(factor_offdiag_zero(0, 1), "ZERO_PARAMETER");
}

TEST(Pad, Examples) {
  auto w = alternating_word<ExactComplex>(Side::upper, {3, 2});
  auto p = pad_avoid_singular(w);
  EXPECT_EQ(p, alternating_word<ExactComplex>(Side::upper, {4, 0, -1, 2}));
  EXPECT_EQ(evaluate(p), evaluate(w));

  auto single = pad_avoid_singular(alternating_word<ExactComplex>(Side::lower, {0}));
  EXPECT_EQ(single, alternating_word<ExactComplex>(Side::lower, {1, 0, -1}));
  EXPECT_EQ(evaluate(single), ExactSL2::identity(1));

  EXPECT_ERROR_CODE(pad_avoid_singular(Word<ExactComplex>{}), "EMPTY_WORD");
}

TEST(Pad, SymbolicEntries) {
  const std::size_t n = 3;
  Word<MultiPoly> w = alternating_word<MultiPoly>(Side::upper, {Z(n, 1), Z(n, 2), Z(n, 3)});
  Word<MultiPoly> p = pad_avoid_singular(w);
  EXPECT_EQ(p, alternating_word<MultiPoly>(Side::upper, {Z(n, 1) + ExactComplex(1), C(n, 0), C(n, -1), Z(n, 2), Z(n, 3)}));
  EXPECT_EQ(expand(p, n), expand(w, n));
}

TEST(Pad, FunctionEntries) {
  Word<FunctionHandle> w;
  for (const char* name : {"cohn.h1", "cohn.h2", "cohn.h3", "cohn.h4", "cohn.H2"})
    w.factors.push_back({w.empty() || w.factors.back().side == Side::lower ? Side::upper : Side::lower, *cohn_builtin(name)});
  Word<FunctionHandle> p = pad_avoid_singular(w);
  EXPECT_EQ(p.size(), 7u);
  for (auto [z, x] : {std::pair<ApproxComplex, ApproxComplex>{0.3, -0.7}, {{1, 1}, 0.5}})
    EXPECT_LT(max_abs_diff(evaluate_at(p, z, x), evaluate_at(w, z, x)), 1e-12);
}

TEST(PadProperty, RandomWords) {
  Rng rng(52);
  for (int k = 0; k < 200; ++k) {
    std::vector<ExactComplex> entries(static_cast<std::size_t>(rng.uniform_int(1, 9)));
    for (auto& g : entries) g = rng.exact();
    auto w = alternating_word(rng.chance(0.5) ? Side::lower : Side::upper, entries);
    auto p = pad_avoid_singular(w);
    EXPECT_EQ(p.size(), w.size() + 2);
    EXPECT_EQ(evaluate(p), evaluate(w));
    EXPECT_EQ(p[2].entry, ExactComplex(-1));
    EXPECT_TRUE(is_alternating(p));
    if (p.size() >= 4) {
      std::vector<ExactComplex> coords;
      for (const auto& f : p) coords.push_back(f.entry);
      EXPECT_FALSE(in_singular_set(std::span<const ExactComplex>(coords)));
    }
  }
}

TEST(Bound, Examples) {
  EXPECT_EQ(factor_count_bound(2, {{2, 4}}), 8);
  EXPECT_EQ(factor_count_bound(2, {{2, 0}}), 4);
  EXPECT_EQ(factor_count_bound(3, {{2, 4}, {3, 5}}), 16);
  EXPECT_ERROR_CODE(factor_count_bound(3, {{2, 4}}), "MISSING_K");
  EXPECT_ERROR_CODE(factor_count_bound(1, {}), "BAD_N");
}

TEST(Cohn, Evaluation) {
  EXPECT_EQ(cohn_eval(ExactComplex(0), ExactComplex(0)), ExactSL2::identity(1));
  EXPECT_EQ(cohn_eval(ExactComplex(1), ExactComplex(1)), M("2", "1", "-1", "0"));
  EXPECT_EQ(cohn_eval(ExactComplex(1), ExactComplex(2)), M("3", "1", "-4", "-1"));
  const std::size_t n = 2;
  PolySL2 sym = cohn_eval(Z(n, 1), Z(n, 2));
  EXPECT_EQ(sym.det(), C(n, 1));
}

TEST(CohnHolo, Origin) {
  auto f = cohn_holo_5({0, 0}, {0, 0});
  EXPECT_EQ(f.word.size(), 5u);
  for (const auto& x : f.word) EXPECT_TRUE(is_finite(x.entry));
  EXPECT_LT(f.residual, 1e-15);
}

TEST(CohnHolo, SeriesBranchAgreesWithClosedForm) {
  for (double u : {1e-3, 2e-3, 1e-2}) {
    ApproxComplex z(1, 0), w(u, u);
    ApproxComplex closed = (std::exp(z * w) - 1.0 - z * w) / (w * w);
    EXPECT_LT(std::abs(z * z * exp_remainder_series(z * w) - closed), 1e-9);
  }
  EXPECT_EQ(cohn_h1(ApproxComplex(3, 0), ApproxComplex(0, 0)), ApproxComplex(4.5, 0));
}

TEST(CohnHolo, SmallGridIncludingWZero) {
  double worst = 0;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      for (int k = -4; k <= 4; ++k) {
        ApproxComplex z(0.5 * i, 0.5 * j), w(0.5 * k, 0.25 * (i - j));
        worst = std::max(worst, cohn_holo_5(z, w).residual);
      }
  EXPECT_LT(worst, 1e-10);
}

TEST(CohnHolo, WordIsUpperFirstAndReproducesTarget) {
  auto f = cohn_holo_5({0.7, -0.2}, {-1.1, 0.4});
  EXPECT_EQ(f.word[0].side, Side::upper);
  EXPECT_TRUE(is_alternating(f.word));
  EXPECT_LT(max_abs_diff(evaluate(f.word, ApproxComplex(1)), f.target), 1e-10);
  EXPECT_EQ(f.word[3].entry, ApproxComplex(1));
}

TEST(CohnFamily, Examples) {
  ExactFactorization f = cohn_family_4(X("1"), X("2"), X("1"));
  EXPECT_EQ(f.word, alternating_word<ExactComplex>(Side::upper, {0, -2, 1, 2}));
  EXPECT_EQ(evaluate(f.word), M("3", "1", "-4", "-1"));

  ExactComplex z = X("3/2+i");
  ExactFactorization d0 = cohn_family_4(z, 0, z * z);
  EXPECT_EQ(d0.word, alternating_word<ExactComplex>(Side::upper, {0, 0, z * z, 0}));

  EXPECT_ERROR_CODE(cohn_family_4(X("1"), X("1"), X("1")), "ZW_EQUALS_ONE");
  EXPECT_ERROR_CODE(cohn_family_4(X("1"), X("2"), X("0")), "ZERO_PARAMETER");
}

TEST(CohnFamilyProperty, RelationsHoldExactly) {
  Rng rng(53);
  for (int k = 0; k < 200; ++k) {
    ExactComplex z = rng.exact(), w = rng.exact();
    if (z * w == ExactComplex(1)) continue;
    ExactComplex h3 = rng.nonzero_exact();
    ExactFactorization f = cohn_family_4(z, w, h3);
    EXPECT_EQ(evaluate(f.word), cohn_eval(z, w));
    std::array<ExactComplex, 4> h{f.word[0].entry, f.word[1].entry, f.word[2].entry, f.word[3].entry};
    for (const auto& d : cohn_relation_defects(z, w, h)) EXPECT_TRUE(d.is_zero());
  }
}

TEST(CohnFamily, ApproxMode) {
  auto f = cohn_family_4(ApproxComplex(0.3, 0.1), ApproxComplex(-2, 1), ApproxComplex(0.5, -0.5));
  EXPECT_TRUE(f.verified);
  EXPECT_LT(f.residual, 1e-12);
}
