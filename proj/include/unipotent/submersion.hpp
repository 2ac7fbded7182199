#pragma once

/// Submersivity of Φ_N through its right-translated differential.
///
/// Column j of the frame is (∂Φ/∂z_j)·Φ^{-1} = A_j E_j A_j^{-1}, where
/// A_j = M_1···M_{j-1} and E_j is e21 (lower slot) or e12 (upper slot),
/// written in the sl2 basis (e21, e12, d12 = e11 - e22). Φ_N is submersive
/// at a point iff this 3×N frame has rank 3.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
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

template <class T>
struct TangentFrame {
  std::vector<std::array<T, 3>> columns;  // (e21, e12, d12) coordinates
};

/// A·E·A^{-1} coordinates for A = [[p, q], [r, s]] with det A = 1.
template <class T>
std::array<T, 3> conjugated_generator(const SL2<T>& A, Side side) {
  if (side == Side::lower) return {A.d * A.d, -(A.b * A.b), A.b * A.d};
  return {-(A.c * A.c), A.a * A.a, -(A.a * A.c)};
}

template <class T>
TangentFrame<T> sl2_jacobian(const PhiTemplate& t, std::span<const T> point) {
  require(point.size() == t.n, "LENGTH_MISMATCH", "point length must equal N");
  if constexpr (std::is_same_v<T, ApproxComplex>) {
    for (const auto& x : point)
      if (!is_finite(x)) fail_precondition("NON_FINITE", "non-finite coordinate in Jacobian point");
  }
  TangentFrame<T> frame;
  frame.columns.reserve(t.n);
  SL2<T> prefix = SL2<T>::identity(T(1));
  for (std::size_t j = 1; j <= t.n; ++j) {
    Side side = t.side_of(j);
    frame.columns.push_back(conjugated_generator(prefix, side));
    prefix = prefix * elementary(side, point[j - 1]);
  }
  return frame;
}

/// Exact rank over Q(i) by Gaussian elimination.
inline std::size_t frame_rank(const TangentFrame<ExactComplex>& f) {
  std::vector<std::vector<ExactComplex>> m(3, std::vector<ExactComplex>(f.columns.size()));
  for (std::size_t j = 0; j < f.columns.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = f.columns[j][i];
  std::size_t rank = 0;
  for (std::size_t col = 0; col < f.columns.size() && rank < 3; ++col) {
    std::size_t pivot = rank;
    while (pivot < 3 && m[pivot][col].is_zero()) ++pivot;
    if (pivot == 3) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < 3; ++i) {
      if (m[i][col].is_zero()) continue;
      ExactComplex factor = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < f.columns.size(); ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline constexpr double kNumericRankThreshold = 1e-8;

/// Numerical rank of the column-normalized frame: singular values above 1e-8
/// times the largest one.
inline std::size_t frame_rank(const TangentFrame<ApproxComplex>& f) {
  if (f.columns.empty()) return 0;
  Eigen::MatrixXcd m(3, static_cast<Eigen::Index>(f.columns.size()));
  for (std::size_t j = 0; j < f.columns.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f.columns[j][i];
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (double norm = m.col(j).norm(); norm > 0) m.col(j) /= norm;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > kNumericRankThreshold * sv(0)) ++rank;
  return rank;
}

struct LemmaViolation {
  std::vector<ExactComplex> point;
  std::size_t rank;
  bool in_singular_set;
};

struct LemmaReport {
  std::size_t n = 0;
  std::size_t generic_points = 0;   // some interior coordinate nonzero
  std::size_t singular_points = 0;  // points of S_N
  std::vector<LemmaViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Samples exact points on and off S_N and checks rank 3 exactly off S_N,
/// rank < 3 on it. Off-S_N draws zero out interior coordinates at random so
/// that sparse points near S_N are exercised too.
inline LemmaReport check_lemma_submersive(std::size_t n, std::size_t samples, std::uint64_t seed,
                                          std::size_t singular_samples = 0) {
  require(n >= 4, "BAD_N", "the submersivity lemma needs N >= 4");
  Rng rng(seed);
  PhiTemplate t{n, Side::lower};
  LemmaReport report;
  report.n = n;
  auto probe = [&](std::vector<ExactComplex> z) {
    std::span<const ExactComplex> view(z);
    bool singular = in_singular_set(view);
    std::size_t rank = frame_rank(sl2_jacobian(t, view));
    (singular ? report.singular_points : report.generic_points)++;
    if ((rank == 3) == singular) report.violations.push_back({std::move(z), rank, singular});
  };
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<ExactComplex> z(n);
    for (auto& x : z) x = rng.chance(0.4) ? ExactComplex() : rng.exact();
    std::size_t forced = 1 + static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 3));
    if (z[forced].is_zero()) z[forced] = rng.nonzero_exact();
    probe(std::move(z));
  }
  if (singular_samples == 0) singular_samples = samples;
  for (std::size_t s = 0; s < singular_samples; ++s) {
    std::vector<ExactComplex> z(n);
    z.front() = rng.chance(0.2) ? ExactComplex() : rng.exact();
    z.back() = rng.chance(0.2) ? ExactComplex() : rng.exact();
    probe(std::move(z));
  }
  return report;
}

}  // namespace unipotent
