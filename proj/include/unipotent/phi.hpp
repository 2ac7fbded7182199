#pragma once

/// The product map Φ_N(z_1..z_N) = M_1(z_1)···M_N(z_N), with M_j lower for
/// odd j and upper for even j in the default (lower-first) template.
///
/// Polynomials produced here always live in the N-variable ring, so the
/// middle entries Q_1..Q_4 (which only involve z_2..z_{N-1}) can be combined
/// with z_1, z_N and fed to the vector fields without re-indexing.

#include <span>
#include <vector>

#include "unipotent/error.hpp"
#include "unipotent/multipoly.hpp"
#include "unipotent/sl2.hpp"
#include "unipotent/word.hpp"

namespace unipotent {

struct PhiTemplate {
  std::size_t n = 1;
  Side first = Side::lower;

  Side side_of(std::size_t j) const {  // j is 1-based
    return (j % 2 == 1) ? first : opposite(first);
  }
};

/// z_j as a polynomial in the N-variable ring (1-based j).
inline MultiPoly coordinate(std::size_t n, std::size_t j) { return MultiPoly::variable(n, j - 1); }

/// The word M_{from}(z_from) ··· M_{to}(z_to) of the template, as polynomials.
inline Word<MultiPoly> phi_subword(const PhiTemplate& t, std::size_t from, std::size_t to) {
  Word<MultiPoly> w;
  for (std::size_t j = from; j <= to; ++j) w.factors.push_back({t.side_of(j), coordinate(t.n, j)});
  return w;
}

inline Word<MultiPoly> phi_word(const PhiTemplate& t) {
  require(t.n >= 1, "BAD_N", "N must be at least 1");
  return phi_subword(t, 1, t.n);
}

/// Full symbolic entries of Φ_N.
inline PolySL2 expand_phi(const PhiTemplate& t) { return expand(phi_word(t), t.n); }

/// Q_1..Q_4 = entries of M_2···M_{N-1} (lower-first template), computed with
/// the two-step recursion
///   Q_1 = z_{k+1} Q~_2 + (1 + z_k z_{k+1}) Q~_1,   Q_2 = Q~_2 + z_k Q~_1,
///   Q_3 = z_{k+1} Q~_4 + (1 + z_k z_{k+1}) Q~_3,   Q_4 = Q~_4 + z_k Q~_3,
/// which appends U(z_k) L(z_{k+1}); an odd middle length ends with one U.
inline PolySL2 middle_q(std::size_t n) {
  require(n >= 4, "BAD_N", "middle polynomials need N >= 4");
  PolySL2 q = PolySL2::identity(MultiPoly(n));
  const MultiPoly one = MultiPoly::constant(n, 1);
  std::size_t k = 2;
  for (; k + 1 <= n - 1; k += 2) {
    const MultiPoly s = coordinate(n, k), t = coordinate(n, k + 1);
    const MultiPoly grow = one + s * t;
    q = {t * q.b + grow * q.a, q.b + s * q.a, t * q.d + grow * q.c, q.d + s * q.c};
  }
  if (k == n - 1) {
    const MultiPoly s = coordinate(n, k);
    q = {q.a, q.b + s * q.a, q.c, q.d + s * q.c};
  }
  return q;
}

/// Same entries by plain symbolic multiplication of the N-2 middle factors.
inline PolySL2 middle_q_by_product(std::size_t n) {
  require(n >= 4, "BAD_N", "middle polynomials need N >= 4");
  return expand(phi_subword(PhiTemplate{n, Side::lower}, 2, n - 1), n);
}

/// True iff every interior coordinate z_2..z_{N-1} vanishes.
template <class S>
bool in_singular_set(std::span<const S> point) {
  require(point.size() >= 4, "LENGTH_MISMATCH", "singular set is defined for N >= 4");
  for (std::size_t k = 1; k + 1 < point.size(); ++k)
    if (!is_zero(point[k])) return false;
  return true;
}

template <class S>
bool in_singular_set(std::span<const S> point, int n) {
  require(point.size() == static_cast<std::size_t>(n), "LENGTH_MISMATCH", "point length must equal N");
  return in_singular_set(point);
}

}  // namespace unipotent
