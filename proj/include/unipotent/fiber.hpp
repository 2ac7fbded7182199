#pragma once

/// Closed-form points on the fibers Φ_N^{-1}(target).
///
/// Write Φ_N = L(z_1)·Q·M_N(z_N) with Q = M_2···M_{N-1}. For even N,
///   a = Q_1,  b = Q_2 + Q_1 z_N,  c = Q_3 + Q_1 z_1,
///   d = Q_4 + Q_2 z_1 + Q_3 z_N + Q_1 z_1 z_N,
/// and for odd N (last factor lower),
///   a = Q_1 + Q_2 z_N,  b = Q_2,  d = Q_4 + Q_2 z_1,
///   c = Q_3 + Q_1 z_1 + Q_4 z_N + Q_2 z_1 z_N.
/// Each branch fixes the interior on a level set of Q and solves the
/// boundary coordinates linearly; determinant one makes the remaining
/// equation automatic. All arithmetic is exact.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unipotent/error.hpp"
#include "unipotent/phi.hpp"
#include "unipotent/random.hpp"
#include "unipotent/scalar.hpp"
#include "unipotent/sl2.hpp"
#include "unipotent/word.hpp"

namespace unipotent {

enum class Branch { generic, nongeneric };
enum class Stratum { q1, q2 };

inline const char* branch_name(Branch b) { return b == Branch::generic ? "generic" : "nongeneric"; }

struct FiberCompletion {
  std::vector<ExactComplex> point;  // z_1..z_N
  ExactSL2 target;
  Branch branch;
  bool verified = false;
};

/// Interior coordinates z_2..z_{N-1} on a Q level set.
///   even N, q1: Q_1 = level
///   even N, q2: Q_2 = level and Q_1 = 0 (the a = 0 fiber)
///   odd N,  q2: Q_2 = level
///   odd N,  q1: Q_1 = level and Q_2 = 0 (the b = 0 fiber)
struct InteriorPoint {
  std::vector<ExactComplex> values;
  ExactComplex level;
  Stratum stratum = Stratum::q1;

  std::size_t n() const { return values.size() + 2; }
};

/// Product M_2(z_2)···M_{j}(z_j) of the lower-first template (M_2 upper).
inline ExactSL2 middle_product(std::span<const ExactComplex> interior) {
  ExactSL2 m = ExactSL2::identity(1);
  Side s = Side::upper;
  for (const auto& z : interior) {
    m = m * elementary(s, z);
    s = opposite(s);
  }
  return m;
}

inline ExactSL2 phi_value(std::span<const ExactComplex> point) {
  Word<ExactComplex> w = alternating_word(Side::lower, std::vector<ExactComplex>(point.begin(), point.end()));
  return evaluate(w);
}

inline constexpr int kInteriorResampleBudget = 64;

/// Random interior point on the requested level set: every coordinate but
/// the last one or two is drawn at random and the rest are solved from the
/// multiaffine recursion, redrawing when a linear coefficient vanishes.
inline InteriorPoint interior_sample(std::size_t n, const ExactComplex& level, Stratum stratum, Rng& rng) {
  require(n >= 4, "BAD_N", "interior sampling needs N >= 4");
  const bool even = n % 2 == 0;
  const bool two_equations = (even && stratum == Stratum::q2) || (!even && stratum == Stratum::q1);
  if (two_equations) require(!level.is_zero(), "BAD_LEVEL", "this stratum needs a nonzero level");
  const std::size_t m = n - 2;  // interior length
  const std::size_t solved = two_equations ? 2 : 1;

  for (int attempt = 0; attempt < kInteriorResampleBudget; ++attempt) {
    std::vector<ExactComplex> z(m);
    for (std::size_t k = 0; k + solved < m; ++k) z[k] = rng.exact();
    std::span<const ExactComplex> head(z.data(), m - solved);
    ExactSL2 r = middle_product(head);
    // Interior slot k (0-based) is upper for even k.
    if (!two_equations) {
      if (even) {  // ... U(s) L(t): Q_1 = R_1 + t R_2 where R = ...U(s)
        if (r.b.is_zero()) continue;
        z[m - 1] = (level - r.a) / r.b;
      } else {  // ... L(s) U(t): Q_2 = Q'_1 t + Q'_2
        if (r.a.is_zero()) continue;
        z[m - 1] = (level - r.b) / r.a;
      }
    } else {
      if (even) {  // ... U(s) L(t): R_2 = R'_1 s + R'_2 = level, then Q_1 = R_1 + t·level = 0
        if (r.a.is_zero()) continue;
        z[m - 2] = (level - r.b) / r.a;
        ExactSL2 with_s = r * elementary(Side::upper, z[m - 2]);
        z[m - 1] = -with_s.a / level;
      } else {  // ... L(s) U(t): Q'_1 = Q''_1 + s Q''_2 = level, then Q_2 = level·t + Q'_2 = 0
        if (r.b.is_zero()) continue;
        z[m - 2] = (level - r.a) / r.b;
        ExactSL2 with_s = r * elementary(Side::lower, z[m - 2]);
        z[m - 1] = -with_s.b / level;
      }
    }
    return {std::move(z), level, stratum};
  }
  fail_precondition("RESAMPLE_EXHAUSTED", "interior sampling hit a degenerate draw " +
                                              std::to_string(kInteriorResampleBudget) + " times in a row");
}

inline InteriorPoint interior_sample(std::size_t n, const ExactComplex& level, Stratum stratum, std::uint64_t seed) {
  Rng rng(seed);
  return interior_sample(n, level, stratum, rng);
}

namespace detail {

inline FiberCompletion finish(std::vector<ExactComplex> point, const ExactSL2& target, Branch branch) {
  FiberCompletion fc{std::move(point), target, branch, false};
  fc.verified = phi_value(fc.point) == target;
  if (!fc.verified) fail_verification("FIBER_MISMATCH", "completed point does not reproduce the target");
  return fc;
}

inline std::vector<ExactComplex> assemble(const ExactComplex& z1, std::span<const ExactComplex> interior,
                                          const ExactComplex& zn) {
  std::vector<ExactComplex> p;
  p.reserve(interior.size() + 2);
  p.push_back(z1);
  p.insert(p.end(), interior.begin(), interior.end());
  p.push_back(zn);
  return p;
}

}  // namespace detail

/// Even N, a != 0: z_1 = (c - Q_3)/a, z_N = (b - Q_2)/a.
inline FiberCompletion complete_generic_even(const ExactSL2& target, std::span<const ExactComplex> interior) {
  check_unimodular(target);
  const std::size_t n = interior.size() + 2;
  require(n >= 4 && n % 2 == 0, "BAD_N", "generic even completion needs even N >= 4");
  require(!target.a.is_zero(), "WRONG_BRANCH", "generic even branch needs a != 0");
  ExactSL2 q = middle_product(interior);
  require(q.a == target.a, "OFF_LEVEL_SET", "interior is not on Q1 = a");
  return detail::finish(detail::assemble((target.c - q.c) / target.a, interior, (target.b - q.b) / target.a), target,
                        Branch::generic);
}

/// a·(Q_4 + Q_2 z_1 + Q_3 z_N + Q_1 z_1 z_N - d) for an even-N point.
inline ExactComplex corner_residual(const ExactSL2& target, std::span<const ExactComplex> point) {
  const std::size_t n = point.size();
  require(n >= 4 && n % 2 == 0, "BAD_N", "the (2,2) residual is defined for even N >= 4");
  ExactSL2 q = middle_product(point.subspan(1, n - 2));
  const ExactComplex& z1 = point.front();
  const ExactComplex& zn = point.back();
  return target.a * (q.d + q.b * z1 + q.c * zn + q.a * z1 * zn - target.d);
}

/// Even N, a = 0. The prefix z_2..z_{N-2} must satisfy R_2 = b for
/// R = M_2···M_{N-2}; then z_{N-1} = -R_1/b and z_N = (d - Q_4 - b z_1)/c,
/// with z_1 a free fiber coordinate.
inline FiberCompletion complete_nongeneric_even(const ExactSL2& target, const ExactComplex& z1,
                                                std::span<const ExactComplex> prefix) {
  check_unimodular(target);
  const std::size_t n = prefix.size() + 3;
  require(n >= 4 && n % 2 == 0, "BAD_N", "non-generic even completion needs even N >= 4");
  require(target.a.is_zero(), "WRONG_BRANCH", "non-generic even branch needs a = 0");
  ExactSL2 r = middle_product(prefix);
  require(r.b == target.b, "OFF_LEVEL_SET", "prefix is not on R2 = b");
  std::vector<ExactComplex> interior(prefix.begin(), prefix.end());
  interior.push_back(-r.a / target.b);
  ExactSL2 q = r * elementary(Side::lower, interior.back());
  ExactComplex zn = (target.d - q.d - target.b * z1) / target.c;
  return detail::finish(detail::assemble(z1, interior, zn), target, Branch::nongeneric);
}

/// Odd N >= 5.
///   generic (b != 0, interior on Q_2 = b):  z_N = (a - Q_1)/b,  z_1 = (d - Q_4)/b
///   non-generic (b = 0, interior on Q_1 = a, Q_2 = 0):  z_1 free,
///                                            z_N = (c - Q_3 - a z_1)/Q_4
inline FiberCompletion complete_odd(const ExactSL2& target, std::span<const ExactComplex> interior, Branch branch,
                                    const ExactComplex& z1_choice = ExactComplex()) {
  check_unimodular(target);
  const std::size_t n = interior.size() + 2;
  require(n >= 5 && n % 2 == 1, "BAD_N", "odd completion needs odd N >= 5");
  ExactSL2 q = middle_product(interior);
  if (branch == Branch::generic) {
    require(!target.b.is_zero(), "WRONG_BRANCH", "generic odd branch needs b != 0");
    require(q.b == target.b, "OFF_LEVEL_SET", "interior is not on Q2 = b");
    return detail::finish(detail::assemble((target.d - q.d) / target.b, interior, (target.a - q.a) / target.b), target,
                          branch);
  }
  require(target.b.is_zero(), "WRONG_BRANCH", "non-generic odd branch needs b = 0");
  require(q.a == target.a && q.b.is_zero(), "OFF_LEVEL_SET", "interior is not on Q1 = a, Q2 = 0");
  ExactComplex zn = (target.c - q.c - target.a * z1_choice) / q.d;
  return detail::finish(detail::assemble(z1_choice, interior, zn), target, branch);
}

/// Moves {z_1 z_2 = α} onto {z_1 z_2 = β}.
template <class T>
std::array<T, 2> fiber_transport_dim1(const std::array<T, 2>& p, const T& alpha, const T& beta) {
  require(!is_zero(alpha) && !is_zero(beta), "ZERO_PARAMETER", "transport parameters must be nonzero");
  return {p[0], beta / alpha * p[1]};
}

/// (z_1, z_2, z_3) -> (α z_1, z_2/α, α z_3); scales z_1 + z_3 + z_1 z_2 z_3 by α.
template <class T>
std::array<T, 3> fiber_transport_dim2(const std::array<T, 3>& p, const T& alpha) {
  require(!is_zero(alpha), "ZERO_PARAMETER", "transport parameter must be nonzero");
  return {alpha * p[0], p[1] / alpha, alpha * p[2]};
}

/// z_1 + z_3 + z_1 z_2 z_3.
template <class T>
T f5_level(const std::array<T, 3>& p) {
  return p[0] + p[2] + p[0] * p[1] * p[2];
}

struct F5Point {
  ExactComplex z1, c, z2, z3;

  std::array<ExactComplex, 3> coordinates() const { return {z1, z2, z3}; }
};

/// Graph chart (z_1, c) -> (z_1, c, (c-1)/z_1, (1-z_1)/c) of
/// {z_1 + z_3 + z_1 z_2 z_3 = 1} over (C^*)^2, with c = 1 + z_1 z_2.
inline F5Point f5_param(const ExactComplex& z1, const ExactComplex& c) {
  require(!z1.is_zero() && !c.is_zero(), "ZERO_PARAMETER", "chart parameters must be nonzero");
  return {z1, c, (c - ExactComplex(1)) / z1, (ExactComplex(1) - z1) / c};
}

}  // namespace unipotent
