// unipotent_cli: JSON front end for the unipotent library.
//
// Every subcommand reads its options from flags and/or --input <file.json>
// (an object keyed by option name; flags win) and writes one JSON document
// to stdout. Exit codes: 0 ok, 2 precondition, 3 verification, 4 I/O.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unipotent/unipotent.hpp"

namespace {

using namespace unipotent;

struct Options {
  json values = json::object();

  bool has(const std::string& key) const { return values.contains(key) && !values[key].is_null(); }

  const json& at(const std::string& key) const {
    require(has(key), "MISSING_OPTION", "missing required option '" + key + "'");
    return values.at(key);
  }

  long integer(const std::string& key, std::optional<long> fallback = std::nullopt) const {
    if (!has(key)) {
      require(fallback.has_value(), "MISSING_OPTION", "missing required option '" + key + "'");
      return *fallback;
    }
    const json& v = values.at(key);
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
      try {
        std::size_t used = 0;
        long x = std::stol(v.get<std::string>(), &used);
        if (used == v.get<std::string>().size()) return x;
      } catch (const std::exception&) {
      }
    }
    fail_precondition("SCHEMA", "option '" + key + "' must be an integer");
  }

  std::uint64_t seed(std::uint64_t fallback) const {
    if (!has("seed")) return fallback;
    const json& v = values.at("seed");
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    try {
      std::size_t used = 0;
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      std::uint64_t x = std::stoull(s, &used);
      if (used == s.size() && s.front() != '-') return x;
    } catch (const std::exception&) {
    }
    fail_precondition("SCHEMA", "option 'seed' must be an unsigned 64-bit integer");
  }

  double real(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    ApproxComplex x = approx_from_json(values.at(key));
    require(x.imag() == 0, "SCHEMA", "option '" + key + "' must be real");
    return x.real();
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = values.at(key);
    require(v.is_string(), "SCHEMA", "option '" + key + "' must be a string");
    return v.get<std::string>();
  }

  bool flag(const std::string& key) const { return has(key) && values.at(key).get<bool>(); }

  /// A list given as a JSON array or as a comma-separated string.
  std::vector<json> list(const std::string& key) const {
    const json& v = at(key);
    if (v.is_array()) return {v.begin(), v.end()};
    require(v.is_string(), "SCHEMA", "option '" + key + "' must be a list");
    std::vector<json> out;
    std::stringstream ss(v.get<std::string>());
    for (std::string item; std::getline(ss, item, ',');) out.emplace_back(item);
    return out;
  }

  std::vector<ExactComplex> exact_list(const std::string& key) const {
    std::vector<ExactComplex> out;
    for (const auto& j : list(key)) out.push_back(exact_from_json(j));
    return out;
  }

  ExactSL2 exact_matrix(const std::string& key) const {
    const json& v = at(key);
    if (v.is_object()) return sl2_from_json<ExactComplex>(v);
    auto entries = exact_list(key);
    require(entries.size() == 4, "SCHEMA", "option '" + key + "' needs four entries a,b,c,d");
    ExactSL2 m{entries[0], entries[1], entries[2], entries[3]};
    check_unimodular(m);
    return m;
  }
};

std::size_t dimension(const Options& o, long minimum) {
  long n = o.integer("n");
  require(n >= minimum, "BAD_N", "n must be at least " + std::to_string(minimum));
  require(n <= 64, "BAD_N", "n is capped at 64");
  return static_cast<std::size_t>(n);
}

Side side_option(const Options& o, const std::string& key) {
  std::string s = o.text(key, "L");
  require(s == "L" || s == "U", "SCHEMA", "option '" + key + "' must be L or U");
  return s == "L" ? Side::lower : Side::upper;
}

json poly_entry(const MultiPoly& p) { return {{"poly", to_json(p)}, {"str", p.str()}}; }

json cmd_expand(const Options& o) {
  const std::size_t n = dimension(o, 1);
  PhiTemplate t{n, side_option(o, "first")};
  PolySL2 phi = expand_phi(t);
  json out{{"n", n},
           {"first", std::string(1, side_letter(t.first))},
           {"phi", {{"a", poly_entry(phi.a)}, {"b", poly_entry(phi.b)}, {"c", poly_entry(phi.c)}, {"d", poly_entry(phi.d)}}},
           {"phi_det_one", phi.det() == MultiPoly::constant(n, 1)},
           {"exact", true}};
  if (n >= 4 && t.first == Side::lower) {
    PolySL2 q = middle_q(n);
    out["middle"] = {{"Q1", poly_entry(q.a)},
                     {"Q2", poly_entry(q.b)},
                     {"Q3", poly_entry(q.c)},
                     {"Q4", poly_entry(q.d)},
                     {"det_one", q.det() == MultiPoly::constant(n, 1)},
                     {"matches_product", q == middle_q_by_product(n)}};
  }
  return out;
}

json cmd_jacobian(const Options& o) {
  const std::size_t n = dimension(o, 1);
  PhiTemplate t{n, side_option(o, "first")};
  json out{{"n", n}};
  if (o.flag("approx")) {
    std::vector<ApproxComplex> point;
    for (const auto& j : o.list("point")) point.push_back(approx_from_json(j));
    auto frame = sl2_jacobian<ApproxComplex>(t, point);
    out["columns"] = json::array();
    for (const auto& col : frame.columns) out["columns"].push_back(to_json(std::vector<ApproxComplex>(col.begin(), col.end())));
    out["rank"] = frame_rank(frame);
    out["rank_threshold"] = kNumericRankThreshold;
    out["exact"] = false;
    if (n >= 4) out["in_singular_set"] = in_singular_set(std::span<const ApproxComplex>(point));
    return out;
  }
  auto point = o.exact_list("point");
  auto frame = sl2_jacobian<ExactComplex>(t, point);
  out["columns"] = json::array();
  for (const auto& col : frame.columns) out["columns"].push_back(to_json(std::vector<ExactComplex>(col.begin(), col.end())));
  out["rank"] = frame_rank(frame);
  out["exact"] = true;
  if (n >= 4) out["in_singular_set"] = in_singular_set(std::span<const ExactComplex>(point));
  return out;
}

json cmd_lemma_check(const Options& o, bool& failed) {
  const std::size_t n = dimension(o, 4);
  const long samples = o.integer("samples", 100);
  const long singular = o.integer("singular_samples", 0);
  require(samples >= 0 && singular >= 0, "SCHEMA", "sample counts must be non-negative");
  LemmaReport r = check_lemma_submersive(n, static_cast<std::size_t>(samples), o.seed(0), static_cast<std::size_t>(singular));
  failed = !r.ok();
  return to_json(r);
}

json cmd_fiber_solve(const Options& o) {
  const std::size_t n = dimension(o, 4);
  const ExactSL2 target = o.exact_matrix("target");
  Rng rng(o.seed(0));
  const bool even = n % 2 == 0;
  Branch branch = (even ? !target.a.is_zero() : !target.b.is_zero()) ? Branch::generic : Branch::nongeneric;
  if (o.has("branch")) {
    std::string b = o.text("branch", "");
    require(b == "generic" || b == "nongeneric", "SCHEMA", "branch must be generic or nongeneric");
    branch = b == "generic" ? Branch::generic : Branch::nongeneric;
  }
  const ExactComplex z1 = o.has("z1") ? exact_from_json(o.at("z1")) : ExactComplex();
  json out = json::object();
  FiberCompletion fc;
  if (even && branch == Branch::generic) {
    std::vector<ExactComplex> interior =
        o.has("interior") ? o.exact_list("interior") : interior_sample(n, target.a, Stratum::q1, rng).values;
    require(interior.size() == n - 2, "LENGTH_MISMATCH", "interior needs N-2 values");
    fc = complete_generic_even(target, interior);
    out["corner_residual"] = to_json(corner_residual(target, fc.point));
  } else if (even) {
    std::vector<ExactComplex> prefix;
    if (o.has("prefix")) prefix = o.exact_list("prefix");
    else if (n == 4) prefix = {target.b};
    else prefix = interior_sample(n - 1, target.b, Stratum::q2, rng).values;
    require(prefix.size() == n - 3, "LENGTH_MISMATCH", "prefix needs N-3 values");
    fc = complete_nongeneric_even(target, z1, prefix);
  } else {
    std::vector<ExactComplex> interior;
    if (o.has("interior")) interior = o.exact_list("interior");
    else if (branch == Branch::generic) interior = interior_sample(n, target.b, Stratum::q2, rng).values;
    else interior = interior_sample(n, target.a, Stratum::q1, rng).values;
    require(interior.size() == n - 2, "LENGTH_MISMATCH", "interior needs N-2 values");
    fc = complete_odd(target, interior, branch, z1);
  }
  json body = to_json(fc);
  body.update(out);
  return body;
}

json factorization_json(const ExactFactorization& f) {
  return {{"word", to_json(f.word)},
          {"target", to_json(f.target)},
          {"factor_count", f.factor_count()},
          {"verified", f.verified},
          {"exact", true}};
}

json cmd_factor_const(const Options& o) {
  const ExactSL2 m = o.exact_matrix("target");
  json out = factorization_json(factor_constant(m));
  auto three = [&](Side first) -> json {
    auto w = try_three_factor(m, first);
    return w ? to_json(*w) : json(nullptr);
  };
  out["three_factor"] = {{"upper_first", three(Side::upper)}, {"lower_first", three(Side::lower)}};
  return out;
}

const std::array<std::pair<ApproxComplex, ApproxComplex>, 3> kProbePoints{{
    {{0.3, 0.0}, {-0.7, 0.0}},
    {{1.0, 1.0}, {0.5, 0.0}},
    {{-1.0, 0.0}, {0.0, 2.0}},
}};

json cmd_pad(const Options& o) {
  const json& raw = o.at("word");
  json parsed = raw.is_string() ? json::parse(raw.get<std::string>(), nullptr, false) : raw;
  require(!parsed.is_discarded(), "SCHEMA", "option 'word' is not valid JSON");
  TypedWord word = word_from_json(parsed);
  return std::visit(
      [](const auto& w) -> json {
        using W = std::decay_t<decltype(w)>;
        auto padded = pad_avoid_singular(w);
        json out{{"word", to_json(padded)}, {"factor_count", padded.size()}, {"third_entry_is_minus_one", true}};
        if constexpr (std::is_same_v<W, Word<ExactComplex>>) {
          out["verified"] = evaluate(padded) == evaluate(w);
          out["product"] = to_json(evaluate(padded));
          out["exact"] = true;
        } else if constexpr (std::is_same_v<W, Word<MultiPoly>>) {
          const std::size_t nvars = w[0].entry.nvars();
          out["verified"] = expand(padded, nvars) == expand(w, nvars);
          out["exact"] = true;
        } else if constexpr (std::is_same_v<W, Word<ApproxComplex>>) {
          double residual = max_abs_diff(evaluate(padded), evaluate(w));
          out["residual"] = residual;
          out["verified"] = residual < kApproxDetTolerance;
          out["exact"] = false;
        } else {
          double residual = 0;
          for (const auto& [z, x] : kProbePoints)
            residual = std::max(residual, max_abs_diff(evaluate_at(padded, z, x), evaluate_at(w, z, x)));
          out["residual"] = residual;
          out["verified"] = residual < kApproxDetTolerance;
          out["exact"] = false;
        }
        if (!out["verified"].get<bool>()) fail_verification("PAD_MISMATCH", "padded word changed the product");
        return out;
      },
      word);
}

json cmd_cohn(const Options& o) {
  const std::string section = o.text("section", "");
  if (o.has("h3")) {
    if (o.flag("approx")) {
      auto f = cohn_family_4(approx_from_json(o.at("z")), approx_from_json(o.at("w")), approx_from_json(o.at("h3")));
      return {{"factorization", "four-factor family"},
              {"word", to_json(f.word)},
              {"target", to_json(f.target)},
              {"residual", f.residual},
              {"verified", f.verified},
              {"exact", false}};
    }
    const ExactComplex z = exact_from_json(o.at("z")), w = exact_from_json(o.at("w"));
    auto f = cohn_family_4(z, w, exact_from_json(o.at("h3")));
    std::array<ExactComplex, 4> h{f.word[0].entry, f.word[1].entry, f.word[2].entry, f.word[3].entry};
    bool relations = true;
    for (const auto& d : cohn_relation_defects(z, w, h)) relations = relations && d.is_zero();
    if (!relations) fail_verification("COHN_RELATIONS", "four-factor entries violate a defining relation");
    return {{"factorization", "four-factor family"},
            {"word", to_json(f.word)},
            {"target", to_json(f.target)},
            {"relations_hold", relations},
            {"verified", f.verified},
            {"exact", true}};
  }
  if (section == "near-d1") {
    const ExactComplex z = exact_from_json(o.at("z")), w = exact_from_json(o.at("w"));
    auto h = section_near_d1(z, w);
    ExactSL2 product = evaluate(alternating_word<ExactComplex>(Side::upper, {h[0], h[1], h[2], h[3]}));
    return {{"factorization", "section near D = 1"},
            {"entries", to_json(std::vector<ExactComplex>(h.begin(), h.end()))},
            {"product", to_json(product)},
            {"verified", product == cohn_eval(z, w)},
            {"exact", true}};
  }
  const ApproxComplex z = approx_from_json(o.at("z")), w = approx_from_json(o.at("w"));
  if (section == "continuous") {
    auto h = cohn_continuous_section(z, w);
    const double residual = four_factor_residual(z, w, h);
    if (residual >= kCohnResidualTolerance) fail_verification("COHN_RESIDUAL", "continuous section misses C(z, w)");
    return {{"factorization", "continuous four-factor section"},
            {"entries", to_json(std::vector<ApproxComplex>(h.begin(), h.end()))},
            {"residual", residual},
            {"verified", true},
            {"exact", false}};
  }
  require(section.empty(), "SCHEMA", "section must be continuous or near-d1");
  auto f = cohn_holo_5(z, w);
  return {{"factorization", "five-factor holomorphic"},
          {"word", to_json(f.word)},
          {"target", to_json(f.target)},
          {"residual", f.residual},
          {"verified", f.verified},
          {"exact", false}};
}

FiberMap named_h3(const std::string& name) {
  static const std::map<std::string, FiberMap> table{
      {"one", [](ApproxComplex, ApproxComplex) { return ApproxComplex(1); }},
      {"z", [](ApproxComplex z, ApproxComplex) { return z; }},
      {"w", [](ApproxComplex, ApproxComplex w) { return w; }},
      {"zw", [](ApproxComplex z, ApproxComplex w) { return z * w; }},
      {"z2", [](ApproxComplex z, ApproxComplex) { return z * z; }},
      {"continuous", continuous_h3},
      {"exp_zw", [](ApproxComplex z, ApproxComplex w) { return std::exp(z * w); }},
  };
  auto it = table.find(name);
  require(it != table.end(), "UNKNOWN_BUILTIN", "h3 must be one of one, z, w, zw, z2, continuous, exp_zw");
  return it->second;
}

std::size_t sample_count(const Options& o) {
  long samples = o.integer("samples", static_cast<long>(kDefaultLoopSamples));
  require(samples >= 3 && samples <= static_cast<long>(kMaxLoopSamples), "BAD_SAMPLES",
          "samples must lie in [3, 65536]");
  return static_cast<std::size_t>(samples);
}

json cmd_winding(const Options& o) {
  if (o.has("values")) {
    LoopSamples loop;
    for (const auto& j : o.list("values")) loop.values.push_back(approx_from_json(j));
    return {{"degree", winding_number(loop)}, {"samples", loop.values.size()}, {"exact", false}};
  }
  const std::string name = o.text("h3", "continuous");
  const ApproxComplex d = o.has("D") ? approx_from_json(o.at("D")) : ApproxComplex(0.5);
  const double radius = o.real("radius", 1.0);
  const std::string param = o.text("param", "w");
  require(param == "w" || param == "z", "SCHEMA", "param must be w or z");
  WindingResult r = param == "w" ? section_degree_on_fiber(named_h3(name), d, radius, sample_count(o))
                                 : section_degree_z_parametrized(named_h3(name), d, radius, sample_count(o));
  json out{{"h3", name}, {"D", to_json(d)}, {"radius", radius}, {"param", param},
           {"degree", r.degree}, {"samples", r.samples}, {"exact", false}};
  if (o.flag("continuation")) {
    ContinuationDegrees c = axis_continuation_degrees(d, radius, sample_count(o), named_h3(name));
    out["continuation"] = {{"w_parametrized", c.w_parametrized},
                           {"z_parametrized", c.z_parametrized},
                           {"shrinking_radii", c.shrinking_radii},
                           {"shrinking_degrees", c.shrinking_degrees},
                           {"inside", c.required_inside}};
  }
  return out;
}

json cmd_certificate(const Options& o, bool& failed) {
  const ApproxComplex d = o.has("D") ? approx_from_json(o.at("D")) : ApproxComplex(0.5);
  std::optional<int> required;
  if (o.has("required")) required = static_cast<int>(o.integer("required"));
  Certificate c = holo_obstruction_certificate(d, o.real("radius", 1.0), sample_count(o), required);
  failed = !c.verdict && !required;
  return to_json(c);
}

json cmd_bound(const Options& o) {
  const long n = o.integer("n");
  std::map<int, long> k;
  const json& raw = o.at("k");
  if (raw.is_object()) {
    for (const auto& [key, v] : raw.items()) k[std::stoi(key)] = v.get<long>();
  } else {
    for (const auto& item : o.list("k")) {
      require(item.is_string(), "SCHEMA", "k entries are written i=K");
      std::string s = item.get<std::string>();
      auto eq = s.find('=');
      require(eq != std::string::npos, "SCHEMA", "k entries are written i=K");
      try {
        k[std::stoi(s.substr(0, eq))] = std::stol(s.substr(eq + 1));
      } catch (const std::exception&) {
        fail_precondition("SCHEMA", "k entry '" + s + "' is not i=K with integers");
      }
    }
  }
  require(n <= 1000000, "BAD_N", "n is too large");
  return {{"n", n}, {"bound", factor_count_bound(static_cast<int>(n), k)}};
}

json cmd_verify_suite(const Options& o, bool& failed, json& timing) {
  const std::string scale = o.text("scale", "quick");
  require(scale == "quick" || scale == "full", "SCHEMA", "scale must be quick or full");
  SuiteReport r = verify_suite(o.seed(7), scale == "quick" ? Scale::quick : Scale::full);
  failed = !r.all_pass();
  json out = to_json(r);
  timing["criteria"] = out["timing"];
  out.erase("timing");
  return out;
}

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<std::string> options;  // value options
  std::vector<std::string> flags;    // boolean flags
};

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs{
      {"expand", "expand the product map and its middle polynomials", {"n", "first"}, {}},
      {"jacobian", "tangent frame and rank at a point", {"n", "first", "point"}, {"approx"}},
      {"lemma-check", "sample the submersivity lemma", {"n", "samples", "singular_samples", "seed"}, {}},
      {"fiber-solve", "complete a fiber point over a target", {"n", "target", "interior", "prefix", "z1", "branch", "seed"}, {}},
      {"factor-const", "factor a constant SL2 matrix", {"target"}, {}},
      {"pad", "pad a word away from the singular set", {"word"}, {}},
      {"cohn", "factor the Cohn matrix at a point", {"z", "w", "h3", "section"}, {"approx"}},
      {"winding", "winding number of a section on a fiber loop", {"h3", "D", "radius", "samples", "param", "values"}, {"continuation"}},
      {"certificate", "degree obstruction certificate", {"D", "radius", "samples", "required"}, {}},
      {"bound", "factor-count bound from K values", {"n", "k"}, {}},
      {"verify-suite", "run the acceptance properties", {"seed", "scale"}, {}},
  };
  return specs;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::precondition:
      return 2;
    case ErrorKind::verification:
      return 3;
    case ErrorKind::io:
      return 4;
  }
  return 2;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::precondition:
      return "precondition";
    case ErrorKind::verification:
      return "verification";
    case ErrorKind::io:
      return "io";
  }
  return "precondition";
}

json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "IO_ERROR", "cannot open input file '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::io, "JSON_PARSE", "input file '" + path + "' is not valid JSON");
  require(j.is_object(), "SCHEMA", "input file must hold a JSON object of options");
  return j;
}

json dispatch(const std::string& name, const Options& o, bool& failed, json& timing) {
  if (name == "expand") return cmd_expand(o);
  if (name == "jacobian") return cmd_jacobian(o);
  if (name == "lemma-check") return cmd_lemma_check(o, failed);
  if (name == "fiber-solve") return cmd_fiber_solve(o);
  if (name == "factor-const") return cmd_factor_const(o);
  if (name == "pad") return cmd_pad(o);
  if (name == "cohn") return cmd_cohn(o);
  if (name == "winding") return cmd_winding(o);
  if (name == "certificate") return cmd_certificate(o, failed);
  if (name == "bound") return cmd_bound(o);
  if (name == "verify-suite") return cmd_verify_suite(o, failed, timing);
  fail_precondition("UNKNOWN_COMMAND", "unknown command '" + name + "'");
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric factorization of SL2 matrices into unipotent factors"};
  app.require_subcommand(1);
  std::string input;
  app.add_option("--input", input, "JSON file with options");

  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, std::map<std::string, std::vector<std::string>>> repeated;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, std::string> input_per_command;
  for (const auto& spec : command_specs()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--input", input_per_command[spec.name], "JSON file with options");
    for (const auto& opt : spec.options) {
      if (spec.name == "bound" && opt == "k")
        sub->add_option("--k", repeated[spec.name][opt], "K value as i=K (repeatable)");
      else
        sub->add_option("--" + opt, raw[spec.name][opt]);
    }
    for (const auto& fl : spec.flags) sub->add_flag("--" + fl, flags[spec.name][fl]);
  }

  std::string command = "unknown";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit({{"command", command}, {"error", {{"kind", "precondition"}, {"code", "SCHEMA"}, {"message", e.what()}}}});
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const CommandSpec* spec = nullptr;
  for (const auto& s : command_specs())
    if (app.got_subcommand(s.name)) spec = &s;
  command = spec->name;
  CLI::App* sub = app.get_subcommand(command);

  try {
    Options o;
    std::string path = !input_per_command[command].empty() ? input_per_command[command] : input;
    if (!path.empty()) o.values = read_input(path);
    std::set<std::string> allowed(spec->options.begin(), spec->options.end());
    allowed.insert(spec->flags.begin(), spec->flags.end());
    for (const auto& [key, value] : o.values.items())
      require(allowed.count(key) > 0, "SCHEMA", "option '" + key + "' is not accepted by " + command);
    for (const auto& opt : spec->options) {
      if (sub->count("--" + opt) == 0) continue;
      if (!repeated[command][opt].empty()) o.values[opt] = repeated[command][opt];
      else o.values[opt] = raw[command][opt];
    }
    for (const auto& fl : spec->flags)
      if (sub->count("--" + fl) > 0) o.values[fl] = true;

    bool failed = false;
    json timing = json::object();
    json result = dispatch(command, o, failed, timing);
    timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit({{"command", command}, {"options", o.values}, {"result", result}, {"timing", timing}});
    return failed ? 3 : 0;
  } catch (const Error& e) {
    emit({{"command", command}, {"error", {{"kind", kind_name(e.kind())}, {"code", e.code()}, {"message", e.what()}}}});
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    emit({{"command", command}, {"error", {{"kind", "precondition"}, {"code", "SCHEMA"}, {"message", e.what()}}}});
    return 2;
  }
}
