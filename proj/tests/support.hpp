#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "unipotent/unipotent.hpp"

namespace unipotent::testing {

inline ExactComplex X(const char* text) { return parse_exact(text); }

inline std::vector<ExactComplex> Xs(std::initializer_list<const char*> texts) {
  std::vector<ExactComplex> out;
  for (const char* t : texts) out.push_back(parse_exact(t));
  return out;
}

/// z_j (1-based) in an n-variable ring.
inline MultiPoly Z(std::size_t n, std::size_t j) { return MultiPoly::variable(n, j - 1); }

inline MultiPoly C(std::size_t n, const ExactComplex& c) { return MultiPoly::constant(n, c); }

inline MultiPoly random_poly(Rng& rng, std::size_t nvars, int max_terms = 4, int max_degree = 2) {
  MultiPoly p(nvars);
  const int terms = rng.uniform_int(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng.uniform_int(0, max_degree));
    p.add_term(e, rng.exact());
  }
  return p;
}

inline ExactSL2 M(const char* a, const char* b, const char* c, const char* d) {
  return {X(a), X(b), X(c), X(d)};
}

#define EXPECT_ERROR_CODE(stmt, expected_code)                                \
  do {                                                                        \
    try {                                                                     \
      stmt;                                                                   \
      ADD_FAILURE() << "expected error " << (expected_code);                  \
    } catch (const ::unipotent::Error& e) {                                   \
      EXPECT_EQ(e.code(), std::string(expected_code)) << e.what();            \
    }                                                                         \
  } while (0)

}  // namespace unipotent::testing
