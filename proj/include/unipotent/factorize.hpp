#pragma once

/// Explicit factorizations into elementary matrices.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unipotent/error.hpp"
#include "unipotent/phi.hpp"
#include "unipotent/scalar.hpp"
#include "unipotent/sl2.hpp"
#include "unipotent/word.hpp"

namespace unipotent {

template <class T>
struct Factorization {
  Word<T> word;
  SL2<T> target;
  bool verified = false;
  double residual = 0;  // max-entry error; 0 for exact factorizations

  std::size_t factor_count() const { return word.size(); }
};

using ExactFactorization = Factorization<ExactComplex>;

namespace detail {

inline ExactFactorization verified_exact(Word<ExactComplex> word, const ExactSL2& target) {
  ExactFactorization f{std::move(word), target, false, 0};
  f.verified = evaluate(f.word) == target;
  if (!f.verified) fail_verification("FACTORIZATION_MISMATCH", "word product differs from the target");
  return f;
}

}  // namespace detail

/// Solves U(x)L(y)U(z) = m (first = upper) or L(x)U(y)L(z) = m (first =
/// lower); nullopt when the pattern cannot reach m.
inline std::optional<Word<ExactComplex>> try_three_factor(const ExactSL2& m, Side first) {
  check_unimodular(m);
  const ExactComplex one(1);
  if (first == Side::upper) {
    // [[1 + xy, x + z(1 + xy)], [y, 1 + yz]]
    if (!m.c.is_zero()) return alternating_word<ExactComplex>(first, {(m.a - one) / m.c, m.c, (m.d - one) / m.c});
    if (m.a == one && m.d == one) return alternating_word<ExactComplex>(first, {m.b, 0, 0});
    return std::nullopt;
  }
  // [[1 + yz, y], [x + z(1 + xy), 1 + xy]]
  if (!m.b.is_zero()) return alternating_word<ExactComplex>(first, {(m.d - one) / m.b, m.b, (m.a - one) / m.b});
  if (m.a == one && m.d == one) return alternating_word<ExactComplex>(first, {m.c, 0, 0});
  return std::nullopt;
}

/// At most four factors for any constant matrix:
///   I                -> empty word
///   L(c) or U(b)     -> one factor
///   c != 0           -> U((a-1)/c) L(c) U((d-1)/c)
///   c = 0, b != 0    -> L((d-1)/b) U(b) L((a-1)/b)
///   diag(a, 1/a)     -> U(a-1) L(1) U(1/a - 1) L(-a)
inline ExactFactorization factor_constant(const ExactSL2& m) {
  check_unimodular(m);
  const ExactComplex one(1);
  Word<ExactComplex> w;
  if (m == ExactSL2::identity(one)) {
  } else if (m.a == one && m.d == one && m.b.is_zero()) {
    w = alternating_word<ExactComplex>(Side::lower, {m.c});
  } else if (m.a == one && m.d == one && m.c.is_zero()) {
    w = alternating_word<ExactComplex>(Side::upper, {m.b});
  } else if (!m.c.is_zero()) {
    w = *try_three_factor(m, Side::upper);
  } else if (!m.b.is_zero()) {
    w = *try_three_factor(m, Side::lower);
  } else {
    w = alternating_word<ExactComplex>(Side::upper, {m.a - one, one, one / m.a - one, -m.a});
  }
  return detail::verified_exact(std::move(w), m);
}

/// [[1, b], [c, 1 + bc]] = L(c-1) · I · L(1) · U(b), with the identity slot
/// written as U(0) so the word alternates L U L U.
inline ExactFactorization factor_unit_corner(const ExactComplex& b, const ExactComplex& c, const ExactComplex& d) {
  const ExactComplex one(1);
  ExactSL2 target{one, b, c, d};
  require(target.det() == one, "NOT_UNIMODULAR", "need d = 1 + bc when a = 1");
  return detail::verified_exact(alternating_word<ExactComplex>(Side::lower, {c - one, 0, one, b}), target);
}

/// [[a, 0], [c, 1/a]] = L((c-1)/a) U(a-1) L(1) U(1/a - 1).
inline ExactFactorization factor_offdiag_zero(const ExactComplex& a, const ExactComplex& c) {
  require(!a.is_zero(), "ZERO_PARAMETER", "diagonal entry a must be nonzero");
  const ExactComplex one(1);
  ExactSL2 target{a, 0, c, one / a};
  return detail::verified_exact(alternating_word<ExactComplex>(Side::lower, {(c - one) / a, a - one, one, one / a - one}),
                                target);
}

// Constants shaped like an entry, for padding words of any entry kind.
inline ExactComplex constant_like(const ExactComplex&, long v) { return ExactComplex(v); }
inline ApproxComplex constant_like(const ApproxComplex&, long v) { return ApproxComplex(static_cast<double>(v)); }
inline MultiPoly constant_like(const MultiPoly& p, long v) { return MultiPoly::constant(p.nvars(), v); }
inline FunctionHandle constant_like(const FunctionHandle&, long v) {
  return {std::to_string(v), [v](ApproxComplex, ApproxComplex) { return ApproxComplex(static_cast<double>(v)); }};
}

inline ExactComplex shifted(const ExactComplex& g, long v) { return g + ExactComplex(v); }
inline ApproxComplex shifted(const ApproxComplex& g, long v) { return g + static_cast<double>(v); }
inline MultiPoly shifted(const MultiPoly& g, long v) { return g + ExactComplex(v); }
inline FunctionHandle shifted(const FunctionHandle& g, long v) {
  auto fn = g.fn;
  return {"(" + g.name + ")" + (v < 0 ? "" : "+") + std::to_string(v),
          [fn, v](ApproxComplex z, ApproxComplex w) { return fn(z, w) + static_cast<double>(v); }};
}

/// s(g_1) s'(g_2) ... -> s(g_1 + 1) s'(0) s(-1) s'(g_2) ...
/// The inserted U(1)·I·U(-1) (or its lower analogue) leaves the product
/// unchanged, and the constant -1 in the third slot keeps the coordinate
/// vector off the singular set S_{N+2}.
template <class T>
Word<T> pad_avoid_singular(const Word<T>& w) {
  require(!w.empty(), "EMPTY_WORD", "padding needs at least one factor");
  require(is_alternating(w), "NOT_ALTERNATING", "padding needs an alternating word");
  const Side first = w[0].side;
  Word<T> out;
  out.factors.reserve(w.size() + 2);
  out.factors.push_back({first, shifted(w[0].entry, 1)});
  out.factors.push_back({opposite(first), constant_like(w[0].entry, 0)});
  out.factors.push_back({first, constant_like(w[0].entry, -1)});
  out.factors.insert(out.factors.end(), w.factors.begin() + 1, w.factors.end());
  return out;
}

/// 1 + Σ_{i=2}^{n} (K(i) + 3).
inline long factor_count_bound(int n, const std::map<int, long>& k_values) {
  require(n >= 2, "BAD_N", "the bound needs n >= 2");
  long total = 1;
  for (int i = 2; i <= n; ++i) {
    auto it = k_values.find(i);
    require(it != k_values.end(), "MISSING_K", "missing K value for i = " + std::to_string(i));
    total += it->second + 3;
  }
  return total;
}

}  // namespace unipotent
