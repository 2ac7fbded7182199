#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "unipotent/scalar.hpp"
#include "unipotent/sl2.hpp"

namespace unipotent {

/// Seeded source of test data. Exact draws are small Gaussian rationals so
/// symbolic checks stay fast; approximate draws are uniform in a disc.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool chance(double p) { return uniform_real(0.0, 1.0) < p; }

  Rational rational(int max_num = 9, int max_den = 4) {
    Rational r(uniform_int(-max_num, max_num), uniform_int(1, max_den));
    r.canonicalize();
    return r;
  }

  /// Gaussian rational; the imaginary part is zero with probability 1/3.
  ExactComplex exact(int max_num = 9, int max_den = 4) {
    Rational re = rational(max_num, max_den);
    Rational im = chance(1.0 / 3.0) ? Rational(0) : rational(max_num, max_den);
    return {re, im};
  }

  ExactComplex nonzero_exact(int max_num = 9, int max_den = 4) {
    for (;;) {
      ExactComplex x = exact(max_num, max_den);
      if (!x.is_zero()) return x;
    }
  }

  /// Uniform point in the closed disc |x| <= radius.
  ApproxComplex in_disc(double radius) {
    double r = radius * std::sqrt(uniform_real(0.0, 1.0));
    double theta = uniform_real(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, theta);
  }

  /// Random exact SL2 matrix, covering a = 0 and b = c = 0 cases.
  ExactSL2 sl2() {
    switch (uniform_int(0, 5)) {
      case 0: {  // a = 0 forces bc = -1
        ExactComplex b = nonzero_exact();
        return {0, b, ExactComplex(-1) / b, exact()};
      }
      case 1: {  // diagonal
        ExactComplex a = nonzero_exact();
        return {a, 0, 0, ExactComplex(1) / a};
      }
      default: {
        ExactComplex a = nonzero_exact(), b = chance(0.2) ? ExactComplex() : exact(),
                     c = chance(0.2) ? ExactComplex() : exact();
        return {a, b, c, (ExactComplex(1) + b * c) / a};
      }
    }
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace unipotent
