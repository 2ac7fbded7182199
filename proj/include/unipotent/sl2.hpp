#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "unipotent/error.hpp"
#include "unipotent/multipoly.hpp"
#include "unipotent/scalar.hpp"

namespace unipotent {

// Ring units shaped like a sample element (a MultiPoly needs its variable count).
template <class T>
T one_like(const T&) { return T(1); }
template <class T>
T zero_like(const T&) { return T(0); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.nvars(), 1); }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.nvars()); }

/// 2×2 matrix [[a, b], [c, d]] over a commutative ring. Products of
/// elementary factors always have determinant one; `check_unimodular`
/// enforces it for matrices arriving from outside.
template <class T>
struct SL2 {
  T a, b, c, d;

  static SL2 identity(const T& like) {
    return {one_like(like), zero_like(like), zero_like(like), one_like(like)};
  }

  T det() const { return a * d - b * c; }

  SL2 inverse() const { return {d, -b, -c, a}; }

  friend SL2 operator*(const SL2& x, const SL2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const SL2& x, const SL2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const SL2& x, const SL2& y) { return !(x == y); }
};

using ExactSL2 = SL2<ExactComplex>;
using ApproxSL2 = SL2<ApproxComplex>;
using PolySL2 = SL2<MultiPoly>;

inline ApproxSL2 to_approx(const ExactSL2& m) { return {m.a.approx(), m.b.approx(), m.c.approx(), m.d.approx()}; }

/// Max-entry distance, the residual used by every approximate verification.
inline double max_abs_diff(const ApproxSL2& x, const ApproxSL2& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

/// |ad - bc - 1| divided by max(1, |ad| + |bc|).
inline double det_defect(const ApproxSL2& m) {
  double scale = std::max(1.0, std::abs(m.a) * std::abs(m.d) + std::abs(m.b) * std::abs(m.c));
  return std::abs(m.a * m.d - m.b * m.c - 1.0) / scale;
}

inline constexpr double kApproxDetTolerance = 1e-10;

inline void check_unimodular(const ExactSL2& m) {
  if (m.det() != ExactComplex(1))
    fail_precondition("NOT_UNIMODULAR", "matrix determinant is " + m.det().str() + ", expected 1");
}

inline void check_unimodular(const ApproxSL2& m) {
  for (const auto& x : {m.a, m.b, m.c, m.d})
    if (!is_finite(x)) fail_verification("NON_FINITE", "matrix has a non-finite entry");
  if (det_defect(m) >= kApproxDetTolerance)
    fail_verification("DET_FAILURE", "approximate matrix determinant drifted from 1");
}

}  // namespace unipotent
