#pragma once

/// JSON encodings.
///
///   exact scalar   ["p/q", "r/s"]          (also accepted: "p/q+r/s i")
///   approx scalar  [re, im]
///   MultiPoly      {"nvars": n, "terms": [{"exp": [..], "re": "p/q", "im": "r/s"}]}
///   SL2            {"a": s, "b": s, "c": s, "d": s}
///   Word           [{"side": "L"|"U", "entry": scalar | MultiPoly | builtin-name}]

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "unipotent/cohn.hpp"
#include "unipotent/error.hpp"
#include "unipotent/fiber.hpp"
#include "unipotent/multipoly.hpp"
#include "unipotent/obstruction.hpp"
#include "unipotent/scalar.hpp"
#include "unipotent/sl2.hpp"
#include "unipotent/submersion.hpp"
#include "unipotent/word.hpp"

namespace unipotent {

using json = nlohmann::json;

inline json to_json(const ExactComplex& x) { return json::array({rational_string(x.re()), rational_string(x.im())}); }
inline json to_json(const ApproxComplex& x) { return json::array({x.real(), x.imag()}); }

inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e}, {"re", rational_string(c.re())}, {"im", rational_string(c.im())}});
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline json to_json(const FunctionHandle& f) { return f.name; }

template <class T>
json to_json(const SL2<T>& m) {
  return {{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)}};
}

template <class T>
json to_json(const Word<T>& w) {
  json out = json::array();
  for (const auto& f : w) out.push_back({{"side", std::string(1, side_letter(f.side))}, {"entry", to_json(f.entry)}});
  return out;
}

template <class T>
json to_json(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

inline bool is_exact_scalar_json(const json& j) {
  if (j.is_string()) {
    try {
      parse_exact(j.get<std::string>());
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  return j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string();
}

inline bool is_approx_scalar_json(const json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

inline ExactComplex exact_from_json(const json& j) {
  if (j.is_string()) return parse_exact(j.get<std::string>());
  if (j.is_number_integer()) return ExactComplex(j.get<long>());
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
  fail_precondition("SCHEMA", "expected an exact scalar (\"p/q+r/s i\" or [\"p/q\", \"r/s\"]), got " + j.dump());
}

inline ApproxComplex approx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    ApproxComplex x{j[0].get<double>(), j[1].get<double>()};
    require(is_finite(x), "NON_FINITE", "approximate scalar must be finite");
    return x;
  }
  if (j.is_string()) return parse_approx(j.get<std::string>());
  if (is_exact_scalar_json(j)) return exact_from_json(j).approx();
  fail_precondition("SCHEMA", "expected a scalar, got " + j.dump());
}

inline MultiPoly poly_from_json(const json& j) {
  require(j.is_object() && j.contains("nvars") && j.contains("terms") && j["terms"].is_array(), "SCHEMA",
          "polynomial needs \"nvars\" and \"terms\"");
  MultiPoly p(j["nvars"].get<std::size_t>());
  for (const auto& t : j["terms"]) {
    require(t.contains("exp") && t["exp"].is_array(), "SCHEMA", "polynomial term needs \"exp\"");
    ExactComplex c(parse_rational(t.value("re", std::string("0"))), parse_rational(t.value("im", std::string("0"))));
    p.add_term(t["exp"].get<Exponent>(), c);
  }
  return p;
}

template <class T>
SL2<T> sl2_from_json(const json& j) {
  require(j.is_object() && j.contains("a") && j.contains("b") && j.contains("c") && j.contains("d"), "SCHEMA",
          "matrix needs keys a, b, c, d");
  auto get = [&](const char* key) {
    if constexpr (std::is_same_v<T, ExactComplex>) return exact_from_json(j[key]);
    else return approx_from_json(j[key]);
  };
  SL2<T> m{get("a"), get("b"), get("c"), get("d")};
  check_unimodular(m);
  return m;
}

using TypedWord = std::variant<Word<ExactComplex>, Word<ApproxComplex>, Word<MultiPoly>, Word<FunctionHandle>>;

/// Reads a word and picks the narrowest entry kind that holds all entries;
/// scalars are promoted to constant polynomials or constant functions when
/// mixed with those.
inline TypedWord word_from_json(const json& j) {
  require(j.is_array(), "SCHEMA", "word must be a JSON array");
  enum Kind { exact = 0, approx = 1, poly = 2, function = 3 };
  std::vector<Side> sides;
  std::vector<Kind> kinds;
  std::size_t nvars = 0;
  for (const auto& f : j) {
    require(f.is_object() && f.contains("side") && f.contains("entry"), "SCHEMA", "factor needs side and entry");
    std::string side = f["side"].get<std::string>();
    require(side == "L" || side == "U", "SCHEMA", "side must be \"L\" or \"U\"");
    sides.push_back(side == "L" ? Side::lower : Side::upper);
    const json& e = f["entry"];
    if (e.is_object()) {
      kinds.push_back(poly);
      nvars = e.value("nvars", std::size_t{0});
    } else if (is_exact_scalar_json(e) || e.is_number_integer()) {
      kinds.push_back(exact);
    } else if (is_approx_scalar_json(e)) {
      kinds.push_back(approx);
    } else if (e.is_string()) {
      require(cohn_builtin(e.get<std::string>()).has_value(), "UNKNOWN_BUILTIN",
              "unknown entry name '" + e.get<std::string>() + "'");
      kinds.push_back(function);
    } else {
      fail_precondition("SCHEMA", "unrecognized entry " + e.dump());
    }
  }
  Kind kind = exact;
  for (Kind k : kinds) kind = std::max(kind, k);
  require(!(kind == poly && std::find(kinds.begin(), kinds.end(), approx) != kinds.end()), "SCHEMA",
          "approximate scalars cannot be mixed with polynomial entries");
  require(!(kind == function && std::find(kinds.begin(), kinds.end(), poly) != kinds.end()), "SCHEMA",
          "polynomial entries cannot be mixed with function entries");

  auto build = [&](auto convert) {
    using T = decltype(convert(j[0]["entry"], exact));
    Word<T> w;
    for (std::size_t k = 0; k < j.size(); ++k) w.factors.push_back({sides[k], convert(j[k]["entry"], kinds[k])});
    return w;
  };
  if (j.empty()) return Word<ExactComplex>{};
  switch (kind) {
    case exact:
      return build([](const json& e, Kind) { return exact_from_json(e); });
    case approx:
      return build([](const json& e, Kind) { return approx_from_json(e); });
    case poly:
      return build([nvars](const json& e, Kind k) {
        return k == poly ? poly_from_json(e) : MultiPoly::constant(nvars, exact_from_json(e));
      });
    case function:
      return build([](const json& e, Kind k) -> FunctionHandle {
        if (k == function) return *cohn_builtin(e.get<std::string>());
        ApproxComplex v = approx_from_json(e);
        return {e.is_string() ? e.get<std::string>() : e.dump(), [v](ApproxComplex, ApproxComplex) { return v; }};
      });
  }
  fail_precondition("SCHEMA", "unreachable word kind");
}

inline json to_json(const FiberCompletion& fc) {
  return {{"point", to_json(fc.point)},
          {"target", to_json(fc.target)},
          {"branch", branch_name(fc.branch)},
          {"verified", fc.verified},
          {"exact", true}};
}

inline json to_json(const LemmaReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"point", to_json(v.point)}, {"rank", v.rank}, {"in_singular_set", v.in_singular_set}});
  return {{"n", r.n},
          {"generic_points", r.generic_points},
          {"singular_points", r.singular_points},
          {"violations", std::move(violations)},
          {"verified", r.ok()},
          {"exact", true}};
}

inline json to_json(const Certificate& c) {
  json probes = json::array();
  for (std::size_t k = 0; k < c.divisor_labels.size(); ++k)
    probes.push_back({{"h3", c.divisor_labels[k]}, {"degree", c.achieved[k]}, {"samples", c.samples_used[k]}});
  return {{"claim", c.claim},
          {"required_degree", c.required_degree},
          {"achieved", c.achieved},
          {"verdict", c.verdict},
          {"evidence",
           {{"D", to_json(c.probe_d)},
            {"radius", c.radius},
            {"parametrization", "w = r e^{i theta}, z = D/w, counterclockwise"},
            {"probes", std::move(probes)},
            {"unit_exp_zw_degree", c.unit_degree},
            {"absent_up_to_sign", c.absent_up_to_sign},
            {"required_from", "h3 = z^2 on zw = 1, |degree|"}}}};
}

}  // namespace unipotent
