#pragma once

/// The Cohn matrix C(z, w) = [[1 + zw, z^2], [-w^2, 1 - zw]] and its
/// factorizations: a five-factor holomorphic one valid on all of C^2, and
/// the four-factor family parametrized by a free nonzero h3 off zw = 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "unipotent/error.hpp"
#include "unipotent/factorize.hpp"
#include "unipotent/scalar.hpp"
#include "unipotent/sl2.hpp"
#include "unipotent/word.hpp"

namespace unipotent {

using ExtendedComplex = std::complex<long double>;

template <class T>
SL2<T> cohn_eval(const T& z, const T& w) {
  const T one = one_like(z);
  return {one + z * w, z * z, -(w * w), one - z * w};
}

inline constexpr double kCohnResidualTolerance = 1e-10;
inline constexpr double kSeriesSwitch = 1e-3;
inline constexpr int kSeriesTerms = 12;

/// φ(u) = (e^u - 1 - u)/u^2 through its Taylor series Σ u^k/(k+2)!.
template <class C>
C exp_remainder_series(const C& u) {
  using R = typename C::value_type;
  C sum{}, power{1};
  R factorial = 2;
  for (int k = 0; k < kSeriesTerms; ++k) {
    sum += power / factorial;
    power *= u;
    factorial *= static_cast<R>(k + 3);
  }
  return sum;
}

/// h1 = (e^{zw} - 1 - zw)/w^2, entire; the series branch covers |zw| < 1e-3
/// including the line w = 0 where h1 = z^2/2.
template <class C>
C cohn_h1(const C& z, const C& w, const C& exp_zw) {
  const C u = z * w;
  if (std::abs(u) < kSeriesSwitch) return z * z * exp_remainder_series(u);
  return (exp_zw - C(1) - u) / (w * w);
}

template <class C>
C cohn_h1(const C& z, const C& w) {
  return cohn_h1(z, w, std::exp(z * w));
}

namespace detail {

/// Complex product without the inf/nan recovery of the library operator.
template <class C>
C plain_mul(const C& x, const C& y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

template <class C>
auto plain_abs(const C& x) {
  using std::sqrt;
  return sqrt(x.real() * x.real() + x.imag() * x.imag());
}

}  // namespace detail

template <class C>
struct HoloEntries {
  C h1, h2, h3, h4, H2;
};

/// Entries of C = U(h1) L(h2) U(h3) L(h4) U(H2), obtained by clearing C from
/// the left: U(-h1) makes the (1,1) entry e^{zw}, L(-h2) makes the (2,1)
/// entry 1, U(-h3) makes the (1,1) entry 1 and L(-h4) clears the (2,1) entry.
template <class C>
HoloEntries<C> cohn_holo_entries(const C& z, const C& w) {
  const C one(1);
  using detail::plain_mul;
  const C u = plain_mul(z, w);
  const C e = std::exp(u);
  HoloEntries<C> h;
  h.h1 = cohn_h1(z, w, e);
  h.h2 = -(one + plain_mul(w, w)) / e;
#ifdef UNIPOTENT_TAMPER_COHN_H2  // negative-path builds only
  h.h2 = -h.h2;
#endif
  h.h3 = e - one;
  h.h4 = one;
  const C top = plain_mul(z, z) - plain_mul(one - u, h.h1);  // (1,2) after U(-h1)
  const C bottom = (one - u) - plain_mul(h.h2, top);         // (2,2) after L(-h2)
  h.H2 = top - plain_mul(h.h3, bottom);
  return h;
}

template <class C>
Word<C> holo_word(const HoloEntries<C>& h) {
  return alternating_word<C>(Side::upper, {h.h1, h.h2, h.h3, h.h4, h.H2});
}

/// max-entry |U(h1)L(h2)U(h3)L(h4)U(H2) - C(z, w)|.
template <class C>
double holo_residual(const C& z, const C& w, const HoloEntries<C>& h) {
  using detail::plain_mul;
  // U(h1) L(h2) = [[1 + h1 h2, h1], [h2, 1]], then U(h3), L(h4), U(H2) by columns.
  C a = C(1) + plain_mul(h.h1, h.h2), b = h.h1, c = h.h2, d = C(1);
  b += plain_mul(a, h.h3);
  d += plain_mul(c, h.h3);
  a += plain_mul(b, h.h4);
  c += plain_mul(d, h.h4);
  b += plain_mul(a, h.H2);
  d += plain_mul(c, h.H2);
  const C zw = plain_mul(z, w);
  const auto worst = std::max({detail::plain_abs(a - (C(1) + zw)), detail::plain_abs(b - plain_mul(z, z)),
                               detail::plain_abs(c + plain_mul(w, w)), detail::plain_abs(d - (C(1) - zw))});
  return static_cast<double>(worst);
}

/// Five-factor holomorphic factorization at a point. Entries are evaluated
/// and verified in extended precision, then rounded for the returned word.
inline Factorization<ApproxComplex> cohn_holo_5(ApproxComplex z, ApproxComplex w) {
  require(is_finite(z) && is_finite(w), "NON_FINITE", "Cohn inputs must be finite");
  const ExtendedComplex ze(z.real(), z.imag()), we(w.real(), w.imag());
  const auto h = cohn_holo_entries(ze, we);
  const double residual = holo_residual(ze, we, h);
  auto round = [](const ExtendedComplex& x) {
    return ApproxComplex(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  };
  Factorization<ApproxComplex> f;
  f.word = alternating_word<ApproxComplex>(Side::upper, {round(h.h1), round(h.h2), round(h.h3), round(h.h4), round(h.H2)});
  f.target = cohn_eval(z, w);
  f.residual = residual;
  f.verified = residual < kCohnResidualTolerance;
  if (!f.verified) fail_verification("COHN_RESIDUAL", "five-factor Cohn product misses C(z, w) by " + std::to_string(residual));
  return f;
}

/// The four-factor family: h2 = -zw/h3, h1 = (z^2 - h3)/(1 - zw),
/// h4 = (-w^2 - h2)/(1 - zw), for any h3 != 0 off zw = 1.
template <class T>
std::array<T, 4> cohn_family_entries(const T& z, const T& w, const T& h3) {
  const T one = one_like(z);
  const T det = one - z * w;
  require(!is_zero(det), "ZW_EQUALS_ONE", "the four-factor family needs zw != 1");
  require(!is_zero(h3), "ZERO_PARAMETER", "h3 must be nonzero");
  const T h2 = -(z * w) / h3;
  return {(z * z - h3) / det, h2, h3, (-(w * w) - h2) / det};
}

inline ExactFactorization cohn_family_4(const ExactComplex& z, const ExactComplex& w, const ExactComplex& h3) {
  auto h = cohn_family_entries(z, w, h3);
  ExactFactorization f{alternating_word<ExactComplex>(Side::upper, {h[0], h[1], h[2], h[3]}), cohn_eval(z, w), false, 0};
  f.verified = evaluate(f.word) == f.target;
  if (!f.verified) fail_verification("COHN_FAMILY_MISMATCH", "four-factor Cohn product differs from C(z, w)");
  return f;
}

inline Factorization<ApproxComplex> cohn_family_4(ApproxComplex z, ApproxComplex w, ApproxComplex h3) {
  auto h = cohn_family_entries(z, w, h3);
  Factorization<ApproxComplex> f{alternating_word<ApproxComplex>(Side::upper, {h[0], h[1], h[2], h[3]}),
                                 cohn_eval(z, w), false, 0};
  f.residual = max_abs_diff(evaluate(f.word, ApproxComplex(1)), f.target);
  f.verified = f.residual < kCohnResidualTolerance;
  if (!f.verified) fail_verification("COHN_RESIDUAL", "four-factor Cohn product misses C(z, w)");
  return f;
}

/// Left-hand sides minus right-hand sides of the four relations forced by
/// U(h1)L(h2)U(h3)L(h4) = C(z, w):
///   h2 h3 = -zw,  (1-zw) h1 + h3 = z^2,  h2 + (1-zw) h4 = -w^2,
///   h1 h2 + (1-zw) h1 h4 + h3 h4 = zw.
template <class T>
std::array<T, 4> cohn_relation_defects(const T& z, const T& w, const std::array<T, 4>& h) {
  const T one = one_like(z);
  const T zw = z * w;
  const T det = one - zw;
  return {h[1] * h[2] + zw, det * h[0] + h[2] - z * z, h[1] + det * h[3] + w * w,
          h[0] * h[1] + det * h[0] * h[3] + h[2] * h[3] - zw};
}

/// Named entry functions for words read from JSON.
inline std::optional<FunctionHandle> cohn_builtin(const std::string& name) {
  auto holo = [](int k) {
    return [k](ApproxComplex z, ApproxComplex w) {
      const ExtendedComplex ze(z.real(), z.imag()), we(w.real(), w.imag());
      auto h = cohn_holo_entries(ze, we);
      const ExtendedComplex v[] = {h.h1, h.h2, h.h3, h.h4, h.H2};
      return ApproxComplex(static_cast<double>(v[k].real()), static_cast<double>(v[k].imag()));
    };
  };
  static const char* names[] = {"cohn.h1", "cohn.h2", "cohn.h3", "cohn.h4", "cohn.H2"};
  for (int k = 0; k < 5; ++k)
    if (name == names[k]) return FunctionHandle{name, holo(k)};
  if (name == "exp_zw") return FunctionHandle{name, [](ApproxComplex z, ApproxComplex w) { return std::exp(z * w); }};
  return std::nullopt;
}

}  // namespace unipotent
