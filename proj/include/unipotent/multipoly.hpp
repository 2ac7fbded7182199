#pragma once

/// Sparse multivariate polynomials over the Gaussian rationals.
///
/// Terms live in a map keyed by exponent vector under graded-lexicographic
/// order, zero coefficients are never stored, and so two polynomials are
/// mathematically equal iff they compare equal structurally. Variables are
/// 0-based internally and printed 1-based (`z1`, `z2`, ...).

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unipotent/error.hpp"
#include "unipotent/scalar.hpp"

namespace unipotent {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic: lower total degree first, ties broken lexicographically.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, ExactComplex, GradedLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const ExactComplex& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  /// The coordinate function z_{var+1}.
  static MultiPoly variable(std::size_t nvars, std::size_t var) {
    require(var < nvars, "INDEX_OUT_OF_RANGE", "variable index out of range");
    Exponent e(nvars, 0);
    e[var] = 1;
    MultiPoly p(nvars);
    p.add_term(std::move(e), ExactComplex(1));
    return p;
  }

  static MultiPoly monomial(Exponent exp, const ExactComplex& c) {
    MultiPoly p(exp.size());
    p.add_term(std::move(exp), c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }

  /// Value of the constant term (zero when absent).
  ExactComplex constant_term() const {
    auto it = terms_.find(Exponent(nvars_, 0));
    return it == terms_.end() ? ExactComplex{} : it->second;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
    return d;
  }

  /// Accumulates c·z^exp, dropping the term if it cancels.
  void add_term(Exponent exp, const ExactComplex& c) {
    require(exp.size() == nvars_, "VARIABLE_COUNT_MISMATCH", "exponent length differs from variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exp), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend MultiPoly operator*(const ExactComplex& s, const MultiPoly& p) {
    MultiPoly r(p.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  /// Polynomial plus scalar, the scalar read as a constant polynomial.
  friend MultiPoly operator+(MultiPoly p, const ExactComplex& s) {
    p.add_term(Exponent(p.nvars_, 0), s);
    return p;
  }
  friend MultiPoly operator-(MultiPoly p, const ExactComplex& s) {
    p.add_term(Exponent(p.nvars_, 0), -s);
    return p;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Formal partial derivative with respect to z_{var+1}.
  MultiPoly diff(std::size_t var) const {
    require(var < nvars_, "INDEX_OUT_OF_RANGE", "differentiation variable out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent de = e;
      de[var] -= 1;
      r.add_term(std::move(de), ExactComplex(static_cast<long>(e[var])) * c);
    }
    return r;
  }

  /// Sets the listed variables to zero, keeping the variable count.
  MultiPoly restrict_to_zero(std::span<const std::size_t> vars) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      bool keep = std::all_of(vars.begin(), vars.end(), [&](std::size_t v) {
        require(v < nvars_, "INDEX_OUT_OF_RANGE", "restriction variable out of range");
        return e[v] == 0;
      });
      if (keep) r.terms_.emplace(e, c);
    }
    return r;
  }

  /// Same polynomial in a larger ring; new variables are appended.
  MultiPoly extend(std::size_t nvars) const {
    require(nvars >= nvars_, "VARIABLE_COUNT_MISMATCH", "cannot shrink variable count");
    MultiPoly r(nvars);
    for (const auto& [e, c] : terms_) {
      Exponent x = e;
      x.resize(nvars, 0);
      r.terms_.emplace(std::move(x), c);
    }
    return r;
  }

  /// Exact substitution.
  ExactComplex eval(std::span<const ExactComplex> point) const {
    require(point.size() == nvars_, "LENGTH_MISMATCH", "evaluation point has wrong length");
    ExactComplex sum;
    for (const auto& [e, c] : terms_) {
      ExactComplex t = c;
      for (std::size_t k = 0; k < nvars_; ++k)
        for (std::uint32_t p = 0; p < e[k]; ++p) t *= point[k];
      sum += t;
    }
    return sum;
  }

  /// Floating evaluation; coefficients are rounded to double first.
  ApproxComplex eval(std::span<const ApproxComplex> point) const {
    require(point.size() == nvars_, "LENGTH_MISMATCH", "evaluation point has wrong length");
    ApproxComplex sum{};
    for (const auto& [e, c] : terms_) {
      ApproxComplex t = c.approx();
      for (std::size_t k = 0; k < nvars_; ++k)
        for (std::uint32_t p = 0; p < e[k]; ++p) t *= point[k];
      sum += t;
    }
    return sum;
  }

  /// Human-readable form such as "1 + z2*z3" (grlex ascending).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "z" + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      std::string coef = coefficient_text(c);
      bool negative = c.is_real() && sgn(c.re()) < 0;
      if (negative) coef = coefficient_text(-c);
      std::string term;
      if (mono.empty()) term = coef;
      else if (coef == "1") term = mono;
      else term = coef + "*" + mono;
      if (first) out = negative ? "-" + term : term;
      else out += negative ? " - " + term : " + " + term;
      first = false;
    }
    return out;
  }

 private:
  static std::string coefficient_text(const ExactComplex& c) {
    if (c.is_real()) return c.re().get_str();
    return "(" + c.re().get_str() + (sgn(c.im()) >= 0 ? "+" : "") + c.im().get_str() + "i)";
  }

  void check_compatible(const MultiPoly& o) const {
    require(nvars_ == o.nvars_, "VARIABLE_COUNT_MISMATCH", "polynomials have different variable counts");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Double-coefficient copy of a MultiPoly for repeated numeric evaluation
/// (flows, numeric Jacobians).
class ApproxPoly {
 public:
  ApproxPoly() = default;
  explicit ApproxPoly(const MultiPoly& p) : nvars_(p.nvars()) {
    terms_.reserve(p.size());
    for (const auto& [e, c] : p.terms()) terms_.push_back({e, c.approx()});
  }

  std::size_t nvars() const noexcept { return nvars_; }

  ApproxComplex operator()(std::span<const ApproxComplex> point) const {
    ApproxComplex sum{};
    for (const auto& [e, c] : terms_) {
      ApproxComplex t = c;
      for (std::size_t k = 0; k < nvars_; ++k)
        for (std::uint32_t p = 0; p < e[k]; ++p) t *= point[k];
      sum += t;
    }
    return sum;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::pair<Exponent, ApproxComplex>> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace unipotent
