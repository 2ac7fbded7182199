#pragma once

/// Exact and approximate complex scalars.
///
/// `ExactComplex` is a Gaussian rational with canonical GMP parts; equality
/// is structural. `ApproxComplex` is `std::complex<double>`.

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "unipotent/error.hpp"

namespace unipotent {

using Rational = mpq_class;
using ApproxComplex = std::complex<double>;

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "p", "p/q" or a finite decimal "p.ddd" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s = detail::trim(text);
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  Rational r;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    require(detail::is_digits(num) && detail::is_digits(den), "BAD_SCALAR",
            "malformed rational '" + s + "'");
    mpz_class d(den);
    require(d != 0, "BAD_SCALAR", "zero denominator in '" + s + "'");
    r = Rational(mpz_class(num), d);
    r.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    require((whole.empty() || detail::is_digits(whole)) && (frac.empty() || detail::is_digits(frac)) &&
                !(whole.empty() && frac.empty()),
            "BAD_SCALAR", "malformed decimal '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(whole.empty() ? "0" : whole);
    digits = digits * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
    r = Rational(digits, scale);
    r.canonicalize();
  } else {
    require(detail::is_digits(body), "BAD_SCALAR", "malformed rational '" + s + "'");
    r = Rational(mpz_class(body));
  }
  return negative ? Rational(-r) : r;
}

/// Always "p/q", including q = 1.
inline std::string rational_string(Rational r) {
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long re) : re_(re) {}  // NOLINT
  ExactComplex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactComplex i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  ApproxComplex approx() const { return {re_.get_d(), im_.get_d()}; }

  ExactComplex operator-() const { return {-re_, -im_}; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  ExactComplex& operator/=(const ExactComplex& o) {
    if (o.is_zero()) fail_precondition("DIVISION_BY_ZERO", "exact division by zero");
    Rational n = o.norm();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  /// "3/2", "-1/1i", "1/2+3/4i"; always p/q parts.
  std::string str() const {
    if (is_real()) return rational_string(re_);
    std::string im = rational_string(im_) + "i";
    if (sgn(re_) == 0) return im;
    return rational_string(re_) + (sgn(im_) > 0 ? "+" : "") + im;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactComplex& x) { return os << x.str(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

namespace detail {

/// Splits "a+bi" style text into real and imaginary token strings.
inline std::pair<std::string, std::string> split_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  require(!s.empty(), "BAD_SCALAR", "empty scalar");
  if (s.back() != 'i') return {s, "0"};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re, im};
}

}  // namespace detail

/// Parses "3", "-1/2", "2i", "1/2-3/4i", "0.25+i" exactly.
inline ExactComplex parse_exact(std::string_view text) {
  auto [re, im] = detail::split_complex(text);
  return {parse_rational(re), parse_rational(im)};
}

/// Parses the same grammar into doubles; accepts exponents ("1e-3").
inline ApproxComplex parse_approx(std::string_view text) {
  auto [re, im] = detail::split_complex(text);
  auto to_double = [&](const std::string& tok) {
    if (tok.find('/') != std::string::npos) return parse_rational(tok).get_d();
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == tok.size() && std::isfinite(v), "BAD_SCALAR",
            "malformed number '" + std::string(text) + "'");
    return v;
  };
  return {to_double(re), to_double(im)};
}

inline bool is_zero(const ExactComplex& x) { return x.is_zero(); }
inline bool is_zero(const ApproxComplex& x) { return x == ApproxComplex{}; }

inline bool is_finite(const ApproxComplex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

}  // namespace unipotent
