#pragma once

/// Elementary factors and words.
///
/// L(g) = [[1, 0], [g, 1]] and U(g) = [[1, g], [0, 1]]. A word is an
/// ordered product of such factors, evaluated left to right; the empty word
/// is the identity. Sides are stored per factor, so both the lower-first
/// words of the product map and upper-first words such as U·L·U·L are
/// plain words.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unipotent/error.hpp"
#include "unipotent/multipoly.hpp"
#include "unipotent/scalar.hpp"
#include "unipotent/sl2.hpp"

namespace unipotent {

enum class Side { lower, upper };

inline Side opposite(Side s) { return s == Side::lower ? Side::upper : Side::lower; }
inline char side_letter(Side s) { return s == Side::lower ? 'L' : 'U'; }

/// An evaluable entry g(z, w), used for transcendental or merely continuous
/// entries. Only numeric evaluation is possible.
struct FunctionHandle {
  std::string name;
  std::function<ApproxComplex(ApproxComplex, ApproxComplex)> fn;

  ApproxComplex operator()(ApproxComplex z, ApproxComplex w) const { return fn(z, w); }
};

template <class T>
struct Factor {
  Side side;
  T entry;

  friend bool operator==(const Factor& x, const Factor& y) { return x.side == y.side && x.entry == y.entry; }
};

template <class T>
Factor<T> lower(T g) { return {Side::lower, std::move(g)}; }
template <class T>
Factor<T> upper(T g) { return {Side::upper, std::move(g)}; }

template <class T>
SL2<T> elementary(Side side, const T& g) {
  if (side == Side::lower) return {one_like(g), zero_like(g), g, one_like(g)};
  return {one_like(g), g, zero_like(g), one_like(g)};
}

template <class T>
struct Word {
  std::vector<Factor<T>> factors;

  std::size_t size() const noexcept { return factors.size(); }
  bool empty() const noexcept { return factors.empty(); }
  const Factor<T>& operator[](std::size_t k) const { return factors[k]; }
  auto begin() const { return factors.begin(); }
  auto end() const { return factors.end(); }

  /// Concatenation: the product of the result is the product of the parts.
  friend Word operator+(Word x, const Word& y) {
    x.factors.insert(x.factors.end(), y.factors.begin(), y.factors.end());
    return x;
  }

  friend bool operator==(const Word& x, const Word& y) { return x.factors == y.factors; }
};

template <class T>
bool is_alternating(const Word<T>& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k].side == w[k - 1].side) return false;
  return true;
}

/// Alternating word with entries g_1..g_N starting on `first`.
template <class T>
Word<T> alternating_word(Side first, std::vector<T> entries) {
  Word<T> w;
  Side s = first;
  for (auto& g : entries) {
    w.factors.push_back({s, std::move(g)});
    s = opposite(s);
  }
  return w;
}

/// Reversed order, negated entries: eval(w) * eval(inverse(w)) = I.
template <class T>
Word<T> inverse(const Word<T>& w) {
  Word<T> r;
  r.factors.reserve(w.size());
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) r.factors.push_back({it->side, -it->entry});
  return r;
}

/// m · L(g) or m · U(g) without a full matrix product.
template <class T>
void right_multiply(SL2<T>& m, Side side, const T& g) {
  if (side == Side::lower) {
    m.a += m.b * g;
    m.c += m.d * g;
  } else {
    m.b += m.a * g;
    m.d += m.c * g;
  }
}

/// Left-to-right product over a scalar ring; `like` shapes the identity.
template <class T>
SL2<T> evaluate(const Word<T>& w, const T& like) {
  SL2<T> m = SL2<T>::identity(like);
  for (const auto& f : w) right_multiply(m, f.side, f.entry);
  return m;
}

inline ExactSL2 evaluate(const Word<ExactComplex>& w) { return evaluate(w, ExactComplex(1)); }

inline ApproxSL2 evaluate(const Word<ApproxComplex>& w) {
  ApproxSL2 m = evaluate(w, ApproxComplex(1));
  check_unimodular(m);
  return m;
}

/// Symbolic product in the polynomial ring with `nvars` variables.
inline PolySL2 expand(const Word<MultiPoly>& w, std::size_t nvars) {
  for (const auto& f : w)
    require(f.entry.nvars() == nvars, "VARIABLE_COUNT_MISMATCH", "word entry has wrong variable count");
  return evaluate(w, MultiPoly(nvars));
}

/// Substitutes a point into every polynomial entry, then multiplies.
template <class S>
SL2<S> evaluate_at(const Word<MultiPoly>& w, std::span<const S> point) {
  Word<S> numeric;
  numeric.factors.reserve(w.size());
  for (const auto& f : w) numeric.factors.push_back({f.side, f.entry.eval(point)});
  return evaluate(numeric);
}

/// Numeric product of a word whose entries are functions of (z, w).
inline ApproxSL2 evaluate_at(const Word<FunctionHandle>& word, ApproxComplex z, ApproxComplex w) {
  Word<ApproxComplex> numeric;
  numeric.factors.reserve(word.size());
  for (const auto& f : word) {
    ApproxComplex g = f.entry(z, w);
    if (!is_finite(g)) fail_precondition("NOT_EVALUABLE", "entry '" + f.entry.name + "' is not finite at this point");
    numeric.factors.push_back({f.side, g});
  }
  return evaluate(numeric);
}

template <class T>
Word<ApproxComplex> to_approx(const Word<T>& w) {
  Word<ApproxComplex> r;
  for (const auto& f : w) {
    if constexpr (std::is_same_v<T, ExactComplex>) r.factors.push_back({f.side, f.entry.approx()});
    else r.factors.push_back({f.side, ApproxComplex(f.entry)});
  }
  return r;
}

}  // namespace unipotent
