#pragma once

/// Fiber-tangent vector fields V_kl = P_l ∂/∂z_k - P_k ∂/∂z_l and their flows.
///
/// Any such field annihilates P, so its flow preserves every level set
/// {P = const}. For the product map the generic stratum uses P = Q_1 (the
/// (1,1) entry of Φ_N for even N, indices 2 <= k < l <= N-1) and the a = 0
/// stratum uses P = Φ_N^{12}(z_1, .., z_{N-2}, 0, 0) with 1 <= k < l <= N-2.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "unipotent/error.hpp"
#include "unipotent/multipoly.hpp"
#include "unipotent/phi.hpp"
#include "unipotent/scalar.hpp"

namespace unipotent {

/// k, l are 1-based variable indices.
struct VectorFieldSpec {
  std::size_t k = 0;
  std::size_t l = 0;
  MultiPoly p;
};

inline void validate(const VectorFieldSpec& v) {
  require(v.k != v.l, "BAD_FIELD", "vector field indices must differ");
  require(v.k >= 1 && v.l >= 1 && v.k <= v.p.nvars() && v.l <= v.p.nvars(), "INDEX_OUT_OF_RANGE",
          "vector field index out of range");
}

/// V_kl(q) = P_l ∂_k q - P_k ∂_l q.
inline MultiPoly vfield_apply(const VectorFieldSpec& v, const MultiPoly& q) {
  validate(v);
  require(q.nvars() == v.p.nvars(), "VARIABLE_COUNT_MISMATCH", "field and polynomial variable counts differ");
  return v.p.diff(v.l - 1) * q.diff(v.k - 1) - v.p.diff(v.k - 1) * q.diff(v.l - 1);
}

/// P = Q_1 - a in N+1 variables, the extra last variable standing for a.
inline MultiPoly generic_level_poly(std::size_t n) {
  return middle_q(n).a.extend(n + 1) - MultiPoly::variable(n + 1, n);
}

/// P = Φ_N^{12}(z_1, .., z_{N-2}, 0, 0), which equals Q_2 on {Q_1 = 0}.
inline MultiPoly nongeneric_level_poly(std::size_t n) {
  require(n >= 4, "BAD_N", "stratum fields need N >= 4");
  const std::size_t tail[] = {n - 2, n - 1};
  return expand_phi(PhiTemplate{n, Side::lower}).b.restrict_to_zero(tail);
}

/// All V_kl, 2 <= k < l <= N-1, for a given P.
inline std::vector<VectorFieldSpec> generic_fields(std::size_t n, const MultiPoly& p) {
  std::vector<VectorFieldSpec> out;
  for (std::size_t k = 2; k <= n - 1; ++k)
    for (std::size_t l = k + 1; l <= n - 1; ++l) out.push_back({k, l, p});
  return out;
}

/// All W_kl, 1 <= k < l <= N-2.
inline std::vector<VectorFieldSpec> nongeneric_fields(std::size_t n, const MultiPoly& p) {
  std::vector<VectorFieldSpec> out;
  for (std::size_t k = 1; k <= n - 2; ++k)
    for (std::size_t l = k + 1; l <= n - 2; ++l) out.push_back({k, l, p});
  return out;
}

struct FlowResult {
  std::vector<ApproxComplex> end;
  std::size_t steps = 0;
  double drift = 0;      // |P(end) - P(start)|
  double max_drift = 0;  // max over all intermediate steps
};

/// Classical RK4 for dz_k/dt = P_l(z), dz_l/dt = -P_k(z), other coordinates
/// fixed. Integrates from 0 to t (either sign) with steps of at most `step`.
inline FlowResult flow_rk4(const VectorFieldSpec& v, std::span<const ApproxComplex> start, double t, double step) {
  validate(v);
  require(step > 0 && std::isfinite(step) && std::isfinite(t), "BAD_STEP", "flow step must be positive and finite");
  require(start.size() == v.p.nvars(), "LENGTH_MISMATCH", "start point has wrong length");
  const ApproxPoly p(v.p), pk(v.p.diff(v.k - 1)), pl(v.p.diff(v.l - 1));
  const std::size_t ik = v.k - 1, il = v.l - 1;

  FlowResult r;
  r.end.assign(start.begin(), start.end());
  const ApproxComplex level = p(r.end);
  r.steps = static_cast<std::size_t>(std::ceil(std::abs(t) / step - 1e-12));
  if (r.steps == 0) return r;
  const double h = t / static_cast<double>(r.steps);

  std::vector<ApproxComplex> y(r.end), probe(r.end.size());
  auto rate = [&](const std::vector<ApproxComplex>& z) {
    return std::pair<ApproxComplex, ApproxComplex>{pl(z), -pk(z)};
  };
  auto shifted = [&](const std::pair<ApproxComplex, ApproxComplex>& d, double scale) -> const std::vector<ApproxComplex>& {
    probe = y;
    probe[ik] += scale * d.first;
    probe[il] += scale * d.second;
    return probe;
  };
  for (std::size_t s = 0; s < r.steps; ++s) {
    auto k1 = rate(y);
    auto k2 = rate(shifted(k1, h / 2));
    auto k3 = rate(shifted(k2, h / 2));
    auto k4 = rate(shifted(k3, h));
    y[ik] += h / 6 * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
    y[il] += h / 6 * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
    if (!is_finite(y[ik]) || !is_finite(y[il])) fail_verification("FLOW_NON_FINITE", "flow left the finite range");
    r.max_drift = std::max(r.max_drift, std::abs(p(y) - level));
  }
  r.end = y;
  r.drift = std::abs(p(y) - level);
  return r;
}

}  // namespace unipotent
