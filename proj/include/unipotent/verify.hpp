#pragma once

/// One-shot run of the library's acceptance properties.
///
/// Every check records pass/fail plus deterministic detail; wall-clock
/// timings live in a separate field.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unipotent/cohn.hpp"
#include "unipotent/error.hpp"
#include "unipotent/factorize.hpp"
#include "unipotent/fiber.hpp"
#include "unipotent/io.hpp"
#include "unipotent/obstruction.hpp"
#include "unipotent/phi.hpp"
#include "unipotent/random.hpp"
#include "unipotent/spray.hpp"
#include "unipotent/submersion.hpp"

namespace unipotent {

enum class Scale { quick, full };

inline const char* scale_name(Scale s) { return s == Scale::quick ? "quick" : "full"; }

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  json detail = json::object();
  std::string error_code;  // set when a check threw
  double seconds = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  Scale scale = Scale::full;
  std::vector<CriterionResult> criteria;

  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return !criteria.empty();
  }
};

struct SuiteSizes {
  std::size_t max_symbolic_n;
  std::size_t lemma_samples;
  std::size_t generic_targets;
  std::size_t nongeneric_targets;
  std::size_t constant_matrices;
  std::size_t padded_words;
  std::size_t grid_side;
  std::size_t family_samples;
  std::size_t flows;
  std::size_t max_tangency_n;
};

inline SuiteSizes suite_sizes(Scale s) {
  if (s == Scale::full) return {10, 1000, 100, 50, 1000, 200, 41, 200, 50, 8};
  return {8, 100, 20, 10, 200, 50, 21, 50, 10, 6};
}

namespace detail {

inline CriterionResult started(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline ExactSL2 random_target(Rng& rng, const std::function<bool(const ExactSL2&)>& accept) {
  for (;;) {
    ExactSL2 m = rng.sl2();
    if (accept(m)) return m;
  }
}

inline CriterionResult symbolic_unimodularity(const SuiteSizes& sz) {
  CriterionResult r = started(1, "symbolic unimodularity Q1 Q4 - Q2 Q3 = 1");
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  json per_n = json::array();
  for (std::size_t n = 4; n <= sz.max_symbolic_n; ++n) {
    PolySL2 q = middle_q(n);
    PolySL2 brute = middle_q_by_product(n);
    const bool det_one = q.det() == MultiPoly::constant(n, 1);
    const bool agree = q == brute;
    ok = ok && det_one && agree;
    per_n.push_back({{"n", n}, {"det_one", det_one}, {"recursion_matches_product", agree}});
  }
  const double elapsed = seconds_since(t0);
  r.detail = {{"per_n", per_n}, {"limit_seconds", 10}};
  r.pass = ok && elapsed < 10.0;
  return r;
}

inline CriterionResult middle_polynomials() {
  CriterionResult r = started(2, "middle polynomials for N = 4, 5");
  PolySL2 q4 = middle_q(4);
  PolySL2 q5 = middle_q(5);
  auto z = [](std::size_t n, std::size_t j) { return coordinate(n, j); };
  const MultiPoly one4 = MultiPoly::constant(4, 1);
  const bool q1 = q4.a == one4 + z(4, 2) * z(4, 3);
  const bool q2 = q4.b == z(4, 2);
  const bool p2 = q5.b == z(5, 2) + z(5, 4) + z(5, 2) * z(5, 3) * z(5, 4);
  r.detail = {{"N4_Q1", q4.a.str()}, {"N4_Q2", q4.b.str()}, {"N5_Q2", q5.b.str()}};
  r.pass = q1 && q2 && p2;
  return r;
}

inline CriterionResult submersivity(const SuiteSizes& sz, std::uint64_t seed) {
  CriterionResult r = started(3, "exact frame rank 3 off S_N, < 3 on S_N");
  bool ok = true;
  json per_n = json::array();
  for (std::size_t n = 4; n <= 7; ++n) {
    LemmaReport rep = check_lemma_submersive(n, sz.lemma_samples, seed + n, sz.lemma_samples / 4);
    ok = ok && rep.ok() && rep.generic_points == sz.lemma_samples;
    per_n.push_back({{"n", n},
                     {"generic_points", rep.generic_points},
                     {"singular_points", rep.singular_points},
                     {"violations", rep.violations.size()}});
  }
  r.detail = {{"per_n", per_n}};
  r.pass = ok;
  return r;
}

inline CriterionResult fiber_completions(const SuiteSizes& sz, std::uint64_t seed) {
  CriterionResult r = started(4, "fiber completions reproduce targets");
  Rng rng(seed);
  std::size_t generic_even = 0, nongeneric_even = 0, generic_odd = 0, nongeneric_odd = 0, corner_nonzero = 0;
  for (std::size_t k = 0; k < sz.generic_targets; ++k) {
    const std::size_t n = k % 2 == 0 ? 4 : 6;
    ExactSL2 target = random_target(rng, [](const ExactSL2& m) { return !m.a.is_zero(); });
    InteriorPoint ip = interior_sample(n, target.a, Stratum::q1, rng);
    FiberCompletion fc = complete_generic_even(target, ip.values);
    if (!corner_residual(target, fc.point).is_zero()) ++corner_nonzero;
    generic_even += fc.verified;
  }
  for (std::size_t k = 0; k < sz.nongeneric_targets; ++k) {
    const std::size_t n = k % 2 == 0 ? 4 : 6;
    ExactComplex b = rng.nonzero_exact();
    ExactSL2 target{0, b, ExactComplex(-1) / b, rng.exact()};
    std::vector<ExactComplex> prefix =
        n == 4 ? std::vector<ExactComplex>{b} : interior_sample(n - 1, b, Stratum::q2, rng).values;
    nongeneric_even += complete_nongeneric_even(target, rng.exact(), prefix).verified;
  }
  for (std::size_t k = 0; k < sz.generic_targets; ++k) {
    const std::size_t n = k % 2 == 0 ? 5 : 7;
    ExactSL2 target = random_target(rng, [](const ExactSL2& m) { return !m.b.is_zero(); });
    InteriorPoint ip = interior_sample(n, target.b, Stratum::q2, rng);
    generic_odd += complete_odd(target, ip.values, Branch::generic).verified;
  }
  for (std::size_t k = 0; k < sz.nongeneric_targets; ++k) {
    const std::size_t n = k % 2 == 0 ? 5 : 7;
    ExactComplex a = rng.nonzero_exact();
    ExactSL2 target{a, 0, rng.exact(), ExactComplex(1) / a};
    InteriorPoint ip = interior_sample(n, a, Stratum::q1, rng);
    nongeneric_odd += complete_odd(target, ip.values, Branch::nongeneric, rng.exact()).verified;
  }
  r.detail = {{"generic_even", generic_even},         {"nongeneric_even", nongeneric_even},
              {"generic_odd", generic_odd},           {"nongeneric_odd", nongeneric_odd},
              {"corner_nonzero_residuals", corner_nonzero}};
  r.pass = generic_even == sz.generic_targets && nongeneric_even == sz.nongeneric_targets &&
           generic_odd == sz.generic_targets && nongeneric_odd == sz.nongeneric_targets && corner_nonzero == 0;
  return r;
}

inline CriterionResult constant_factorization(const SuiteSizes& sz, std::uint64_t seed) {
  CriterionResult r = started(5, "constant matrices factor with at most 4 factors");
  Rng rng(seed);
  std::size_t ok = 0, max_len = 0;
  for (std::size_t k = 0; k < sz.constant_matrices; ++k) {
    ExactFactorization f = factor_constant(rng.sl2());
    max_len = std::max(max_len, f.factor_count());
    ok += f.verified && f.factor_count() <= 4;
  }
  const ExactSL2 diag{2, 0, 0, Rational(1, 2)};
  const bool rejected = !try_three_factor(diag, Side::upper) && !try_three_factor(diag, Side::lower);
  ExactFactorization d = factor_constant(diag);
  const bool accepted_at_4 = d.verified && d.factor_count() == 4;
  r.detail = {{"verified", ok},
              {"max_factor_count", max_len},
              {"diag_rejected_by_3_patterns", rejected},
              {"diag_word", to_json(d.word)}};
  r.pass = ok == sz.constant_matrices && rejected && accepted_at_4;
  return r;
}

inline CriterionResult padding(const SuiteSizes& sz, std::uint64_t seed) {
  CriterionResult r = started(6, "padding preserves products and avoids S");
  Rng rng(seed);
  std::size_t ok = 0;
  for (std::size_t k = 0; k < sz.padded_words; ++k) {
    std::vector<ExactComplex> entries(static_cast<std::size_t>(rng.uniform_int(2, 8)));
    for (auto& g : entries) g = rng.exact();
    Word<ExactComplex> w = alternating_word(rng.chance(0.5) ? Side::lower : Side::upper, entries);
    Word<ExactComplex> p = pad_avoid_singular(w);
    std::vector<ExactComplex> coords;
    for (const auto& f : p) coords.push_back(f.entry);
    const bool good = p.size() == w.size() + 2 && evaluate(p) == evaluate(w) && p[2].entry == ExactComplex(-1) &&
                      !in_singular_set(std::span<const ExactComplex>(coords));
    ok += good;
  }
  r.detail = {{"verified", ok}};
  r.pass = ok == sz.padded_words;
  return r;
}

/// z and w each range over the side x side grid on [-2, 2]^2.
inline CriterionResult cohn_holomorphic(const SuiteSizes& sz) {
  CriterionResult r = started(7, "Cohn five-factor holomorphic factorization");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<ApproxComplex> grid;
  const std::size_t side = sz.grid_side;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j)
      grid.emplace_back(-2.0 + 4.0 * static_cast<double>(i) / (side - 1), -2.0 + 4.0 * static_cast<double>(j) / (side - 1));
  double worst = 0;
  std::size_t points = 0, w_zero_points = 0;
  for (const auto& z : grid)
    for (const auto& w : grid) {
      worst = std::max(worst, cohn_holo_5(z, w).residual);
      ++points;
      w_zero_points += w == ApproxComplex{};
    }
  const double elapsed = seconds_since(t0);
  r.detail = {{"points", points},
              {"w_zero_points", w_zero_points},
              {"max_residual", worst},
              {"tolerance", kCohnResidualTolerance},
              {"limit_seconds", 5}};
  r.pass = worst < kCohnResidualTolerance && w_zero_points > 0 && elapsed < 5.0;
  return r;
}

inline CriterionResult cohn_family(const SuiteSizes& sz, std::uint64_t seed) {
  CriterionResult r = started(8, "Cohn four-factor family and its relations");
  Rng rng(seed);
  std::size_t ok = 0;
  for (std::size_t k = 0; k < sz.family_samples; ++k) {
    ExactComplex z, w;
    do {
      z = rng.exact();
      w = rng.exact();
    } while (z * w == ExactComplex(1));
    ExactComplex h3 = rng.nonzero_exact();
    ExactFactorization f = cohn_family_4(z, w, h3);
    std::array<ExactComplex, 4> h{f.word[0].entry, f.word[1].entry, f.word[2].entry, f.word[3].entry};
    bool relations = true;
    for (const auto& defect : cohn_relation_defects(z, w, h)) relations = relations && defect.is_zero();
    ok += f.verified && relations;
  }
  r.detail = {{"verified", ok}};
  r.pass = ok == sz.family_samples;
  return r;
}

inline CriterionResult degree_facts() {
  CriterionResult r = started(9, "degree facts behind the 4 versus 5 dichotomy");
  bool ok = true;
  json radii = json::array();
  for (double rad : {0.25, 1.0, 4.0}) {
    WindingResult wr = wind([rad](double t) {
      const ApproxComplex w = std::polar(rad, t);
      return continuous_h3(ApproxComplex{}, w);
    });
    radii.push_back({{"radius", rad}, {"degree", wr.degree}});
    ok = ok && wr.degree == 2;
  }
  Certificate cert = holo_obstruction_certificate(0.5, 1.0);
  const std::vector<int> expected{0, -1, 1, 0};
  ok = ok && cert.achieved == expected && cert.verdict && cert.required_degree == 2 && cert.unit_degree == 0;
  json continuation = json::array();
  for (double d : {0.1, 0.01}) {
    ContinuationDegrees c = axis_continuation_degrees(d, 1.0);
    continuation.push_back({{"D", d},
                            {"w_parametrized", c.w_parametrized},
                            {"z_parametrized", c.z_parametrized},
                            {"inside", c.required_inside}});
    bool shrinking_zero = true;
    for (int deg : c.shrinking_degrees) shrinking_zero = shrinking_zero && deg == 0;
    ok = ok && c.w_parametrized == 2 && c.z_parametrized == -2 && shrinking_zero;
  }
  r.detail = {{"continuous_h3", radii},
              {"divisor_degrees", cert.achieved},
              {"required_degree", cert.required_degree},
              {"verdict", cert.verdict},
              {"continuation", continuation}};
  r.pass = ok;
  return r;
}

inline CriterionResult flow_conservation(const SuiteSizes& sz, std::uint64_t seed) {
  CriterionResult r = started(10, "flow conservation and exact tangency");
  Rng rng(seed);
  double worst = 0;
  for (std::size_t k = 0; k < sz.flows; ++k) {
    const std::size_t n = 4 + k % 3;
    const MultiPoly p = middle_q(n).a;
    const auto fields = generic_fields(n, p);
    const auto& field = fields[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(fields.size()) - 1))];
    std::vector<ApproxComplex> start(n);
    for (auto& x : start) x = rng.in_disc(2.0 / std::sqrt(static_cast<double>(n)));
    const double t = rng.uniform_real(0.0, 1.0);
    worst = std::max(worst, flow_rk4(field, start, t, 1e-3).drift);
  }
  std::size_t fields_checked = 0, tangency_failures = 0;
  for (std::size_t n = 4; n <= sz.max_tangency_n; ++n) {
    const MultiPoly g = generic_level_poly(n);
    for (const auto& f : generic_fields(n, g)) {
      ++fields_checked;
      tangency_failures += !vfield_apply(f, g).is_zero();
    }
    const MultiPoly q = nongeneric_level_poly(n);
    for (const auto& f : nongeneric_fields(n, q)) {
      ++fields_checked;
      tangency_failures += !vfield_apply(f, q).is_zero();
    }
  }
  r.detail = {{"flows", sz.flows},
              {"max_drift", worst},
              {"tolerance", 1e-8},
              {"fields_checked", fields_checked},
              {"tangency_failures", tangency_failures}};
  r.pass = worst < 1e-8 && tangency_failures == 0;
  return r;
}

}  // namespace detail

/// Runs criteria 1-10. Exceptions inside a check become a failed entry
/// carrying the error code; nothing propagates.
inline SuiteReport verify_suite(std::uint64_t seed, Scale scale) {
  const SuiteSizes sz = suite_sizes(scale);
  SuiteReport report{seed, scale, {}};
  const std::pair<int, std::function<CriterionResult()>> checks[] = {
      {1, [&] { return detail::symbolic_unimodularity(sz); }},
      {2, [&] { return detail::middle_polynomials(); }},
      {3, [&] { return detail::submersivity(sz, seed); }},
      {4, [&] { return detail::fiber_completions(sz, seed + 4); }},
      {5, [&] { return detail::constant_factorization(sz, seed + 5); }},
      {6, [&] { return detail::padding(sz, seed + 6); }},
      {7, [&] { return detail::cohn_holomorphic(sz); }},
      {8, [&] { return detail::cohn_family(sz, seed + 8); }},
      {9, [&] { return detail::degree_facts(); }},
      {10, [&] { return detail::flow_conservation(sz, seed + 10); }},
  };
  for (const auto& [id, run] : checks) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = run();
    } catch (const Error& e) {
      res.id = id;
      res.name = "criterion " + std::to_string(id);
      res.pass = false;
      res.error_code = e.code();
      res.detail = {{"error", e.what()}};
    }
    res.seconds = detail::seconds_since(t0);
    report.criteria.push_back(std::move(res));
  }
  return report;
}

/// Report body; timings go under "timing" only.
inline json to_json(const SuiteReport& r) {
  json criteria = json::array();
  json timing = json::object();
  for (const auto& c : r.criteria) {
    json entry{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (!c.error_code.empty()) entry["code"] = c.error_code;
    criteria.push_back(std::move(entry));
    timing[std::to_string(c.id)] = c.seconds;
  }
  return {{"seed", r.seed},
          {"scale", scale_name(r.scale)},
          {"criteria", std::move(criteria)},
          {"all_pass", r.all_pass()},
          {"timing", std::move(timing)}};
}

}  // namespace unipotent
