#pragma once

/// Degree computations behind the four- versus five-factor dichotomy for the
/// Cohn matrix.
///
/// Off zw = 0 the four-factor fiber over (z, w) is C^*, coordinatized by h3.
/// Restricting h3 to the loop zw = D, w = r e^{iθ} gives a map C^* -> C^*
/// whose degree is a homotopy invariant. Orientation convention: fiber loops
/// are parametrized by w counterclockwise; the z-parametrization reverses it.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "unipotent/cohn.hpp"
#include "unipotent/error.hpp"
#include "unipotent/scalar.hpp"
#include "unipotent/word.hpp"

namespace unipotent {

/// Closed loop of nonzero values; the last sample connects back to the first.
struct LoopSamples {
  std::vector<ApproxComplex> values;
};

inline constexpr std::size_t kDefaultLoopSamples = 256;
inline constexpr std::size_t kMaxLoopSamples = std::size_t{1} << 16;

namespace detail {

/// Principal-branch angle increments; nullopt if some step is >= π/2.
inline std::optional<double> total_turning(const LoopSamples& loop) {
  const std::size_t n = loop.values.size();
  double total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const ApproxComplex& from = loop.values[k];
    const ApproxComplex& to = loop.values[(k + 1) % n];
    double step = std::arg(to / from);
    if (std::abs(step) >= std::numbers::pi / 2) return std::nullopt;
    total += step;
  }
  return total;
}

inline void check_nonzero(const LoopSamples& loop) {
  require(!loop.values.empty(), "EMPTY_LOOP", "loop has no samples");
  for (const auto& v : loop.values) {
    if (!is_finite(v)) fail_precondition("NON_FINITE", "loop sample is not finite");
    if (v == ApproxComplex{}) fail_precondition("ZERO_SAMPLE", "loop passes through zero");
  }
}

}  // namespace detail

/// Sum of angular increments over 2π, rounded. Requires every increment
/// below π/2 so the rounding is unambiguous.
inline int winding_number(const LoopSamples& loop) {
  detail::check_nonzero(loop);
  auto turning = detail::total_turning(loop);
  if (!turning) fail_precondition("UNDERSAMPLED_LOOP", "an angular step reached π/2; sample the loop more finely");
  return static_cast<int>(std::lround(*turning / (2 * std::numbers::pi)));
}

struct WindingResult {
  int degree = 0;
  std::size_t samples = 0;
};

/// Degree of θ -> f(θ) on [0, 2π), starting from `samples` points and
/// doubling until every increment is below π/2 (cap 2^16).
inline WindingResult wind(const std::function<ApproxComplex(double)>& f, std::size_t samples = kDefaultLoopSamples) {
  require(samples >= 3, "BAD_SAMPLES", "a loop needs at least 3 samples");
  auto degree_at = [&](std::size_t n) -> std::optional<int> {
    LoopSamples loop;
    loop.values.reserve(n);
    for (std::size_t k = 0; k < n; ++k) loop.values.push_back(f(2 * std::numbers::pi * static_cast<double>(k) / n));
    detail::check_nonzero(loop);
    if (auto turning = detail::total_turning(loop)) return static_cast<int>(std::lround(*turning / (2 * std::numbers::pi)));
    return std::nullopt;
  };
  // A degree is accepted once it is stable under doubling the sample count.
  std::optional<int> previous;
  for (std::size_t n = samples; n <= kMaxLoopSamples; n *= 2) {
    std::optional<int> degree = degree_at(n);
    if (degree && previous && *degree == *previous) return {*degree, n / 2};
    previous = degree;
  }
  fail_precondition("UNDERSAMPLED_LOOP", "loop still undersampled at 2^16 points");
}

using FiberMap = std::function<ApproxComplex(ApproxComplex z, ApproxComplex w)>;

/// Degree of h3 on the fiber zw = D, looped as w = r e^{iθ}, z = D/w.
inline WindingResult section_degree_on_fiber(const FiberMap& h3, ApproxComplex d, double radius,
                                             std::size_t samples = kDefaultLoopSamples) {
  require(d != ApproxComplex{}, "ZERO_PARAMETER", "fiber level D must be nonzero");
  require(radius > 0, "BAD_RADIUS", "loop radius must be positive");
  return wind(
      [&](double theta) {
        const ApproxComplex w = std::polar(radius, theta);
        const ApproxComplex v = h3(d / w, w);
        if (v == ApproxComplex{}) fail_precondition("SECTION_VANISHES", "h3 vanishes on the sampled fiber");
        return v;
      },
      samples);
}

/// Same fiber looped the other way round: z = r e^{iθ}, w = D/z.
inline WindingResult section_degree_z_parametrized(const FiberMap& h3, ApproxComplex d, double radius,
                                                   std::size_t samples = kDefaultLoopSamples) {
  require(d != ApproxComplex{}, "ZERO_PARAMETER", "fiber level D must be nonzero");
  require(radius > 0, "BAD_RADIUS", "loop radius must be positive");
  return wind(
      [&](double theta) {
        const ApproxComplex z = std::polar(radius, theta);
        const ApproxComplex v = h3(z, d / z);
        if (v == ApproxComplex{}) fail_precondition("SECTION_VANISHES", "h3 vanishes on the sampled fiber");
        return v;
      },
      samples);
}

/// h3 = w^2/|w|^{3/2}, extended by 0 at w = 0.
inline ApproxComplex continuous_h3(ApproxComplex, ApproxComplex w) {
  const double r = std::abs(w);
  return r == 0 ? ApproxComplex{} : w * w / std::pow(r, 1.5);
}

/// Continuous four-factor section off zw = 1:
///   h3 = w^2/|w|^{3/2},  h2 = -zw/h3 = -z |w|^{3/2}/w  (0 at w = 0),
///   h1 = (z^2 - h3)/(1 - zw),  h4 = (-w^2 - h2)/(1 - zw).
/// At w = 0 this is (z^2, 0, 0, 0).
inline std::array<ApproxComplex, 4> cohn_continuous_section(ApproxComplex z, ApproxComplex w) {
  const ApproxComplex det = 1.0 - z * w;
  require(det != ApproxComplex{}, "ZW_EQUALS_ONE", "the continuous section is defined off zw = 1");
  const double r = std::abs(w);
  const ApproxComplex h3 = continuous_h3(z, w);
  const ApproxComplex h2 = r == 0 ? ApproxComplex{} : -z * std::pow(r, 1.5) / w;
  return {(z * z - h3) / det, h2, h3, (-(w * w) - h2) / det};
}

/// (h1, h2, h3, h4) = (0, -w/z, z^2, w/z); reproduces C(z, w) wherever z != 0.
template <class T>
std::array<T, 4> section_near_d1(const T& z, const T& w) {
  require(!is_zero(z), "ZERO_PARAMETER", "the D = 1 section needs z != 0");
  return {zero_like(z), -w / z, z * z, w / z};
}

/// Product residual of a four-factor tuple against C(z, w).
inline double four_factor_residual(ApproxComplex z, ApproxComplex w, const std::array<ApproxComplex, 4>& h) {
  auto m = evaluate(alternating_word<ApproxComplex>(Side::upper, {h[0], h[1], h[2], h[3]}), ApproxComplex(1));
  return max_abs_diff(m, cohn_eval(z, w));
}

struct ContinuationDegrees {
  int w_parametrized = 0;  // loop (D/w, w), w = r e^{iθ}
  int z_parametrized = 0;  // loop (z, D/z), z = r e^{iθ}
  std::vector<double> shrinking_radii;
  std::vector<int> shrinking_degrees;  // loops inside D = 0 around (0, 0)
  int required_inside = 0;             // degree forced by shrinking to a point
};

/// Unit e^{z-w} standing in for an h3 that avoids the singular point over
/// D = 0: nonvanishing and continuous on the cross of axes.
inline ApproxComplex avoiding_axis_h3(ApproxComplex z, ApproxComplex w) { return std::exp(z - w); }

/// Degrees of h3 along the two ways of continuing the fibers zw = D into
/// D = 0, together with the degrees of an S_4-avoiding h3 on circles in
/// D = 0 (the z-axis) shrinking to the origin.
inline ContinuationDegrees axis_continuation_degrees(ApproxComplex d, double radius,
                                                     std::size_t samples = kDefaultLoopSamples,
                                                     const FiberMap& h3 = continuous_h3,
                                                     const FiberMap& inside = avoiding_axis_h3) {
  ContinuationDegrees out;
  out.w_parametrized = section_degree_on_fiber(h3, d, radius, samples).degree;
  out.z_parametrized = section_degree_z_parametrized(h3, d, radius, samples).degree;
  for (double rho = radius; rho > radius / 1000; rho /= 8) {
    out.shrinking_radii.push_back(rho);
    out.shrinking_degrees.push_back(
        wind([&](double theta) { return inside(std::polar(rho, theta), ApproxComplex{}); }, samples).degree);
  }
  out.required_inside = out.shrinking_degrees.back();
  return out;
}

struct Certificate {
  std::string claim = "no-holo-4-factorization";
  int required_degree = 0;
  std::vector<int> achieved;
  bool verdict = false;
  // evidence
  ApproxComplex probe_d;
  double radius = 0;
  std::vector<std::string> divisor_labels;
  std::vector<std::size_t> samples_used;
  int unit_degree = 0;  // e^{zw}, checked to contribute nothing
  bool absent_up_to_sign = false;
};

/// Up to units, a holomorphic h3 with h2 h3 = -zw is one of 1, z, w, zw.
/// Their fiber degrees are compared with the degree 2 forced by h3 = z^2 on
/// zw = 1; the verdict is "required degree not achieved". Whether the
/// negated degree is also absent is recorded separately.
inline Certificate holo_obstruction_certificate(ApproxComplex d, double radius,
                                                std::size_t samples = kDefaultLoopSamples,
                                                std::optional<int> required_override = std::nullopt) {
  Certificate cert;
  cert.probe_d = d;
  cert.radius = radius;
  const std::pair<const char*, FiberMap> divisors[] = {
      {"1", [](ApproxComplex, ApproxComplex) { return ApproxComplex(1); }},
      {"z", [](ApproxComplex z, ApproxComplex) { return z; }},
      {"w", [](ApproxComplex, ApproxComplex w) { return w; }},
      {"zw", [](ApproxComplex z, ApproxComplex w) { return z * w; }},
  };
  for (const auto& [label, fn] : divisors) {
    auto r = section_degree_on_fiber(fn, d, radius, samples);
    cert.divisor_labels.emplace_back(label);
    cert.achieved.push_back(r.degree);
    cert.samples_used.push_back(r.samples);
  }
  auto forced = section_degree_on_fiber([](ApproxComplex z, ApproxComplex) { return z * z; }, 1.0, radius, samples);
  cert.required_degree = required_override ? *required_override : std::abs(forced.degree);
  cert.unit_degree = section_degree_on_fiber([](ApproxComplex z, ApproxComplex w) { return std::exp(z * w); }, d,
                                             radius, samples)
                         .degree;
  auto reached = [&](int deg) { return std::find(cert.achieved.begin(), cert.achieved.end(), deg) != cert.achieved.end(); };
  cert.verdict = !reached(cert.required_degree);
  cert.absent_up_to_sign = cert.verdict && !reached(-cert.required_degree);
  return cert;
}

}  // namespace unipotent
