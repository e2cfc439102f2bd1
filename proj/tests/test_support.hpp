// Shared helpers for the unit tests: seeded random elements.
#pragma once

#include <random>
#include <vector>

#include "doctest.h"
#include "qgr/cat_o.hpp"

namespace qgr::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline std::vector<Generator> random_word(std::mt19937_64& rng, const Algebra& alg, int max_len) {
  const auto gens = alg.generators();
  std::vector<Generator> w;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) w.push_back(gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(gens.size()) - 1))]);
  return w;
}

inline RawExpr random_raw(std::mt19937_64& rng, const Algebra& alg, int max_len, int max_terms = 2) {
  RawExpr out;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int c = uniform(rng, -3, 3);
    if (c == 0) c = 1;
    out.push_back({Scalar(c) * alg.params().rs(uniform(rng, -1, 1), uniform(rng, -1, 1)), random_word(rng, alg, max_len)});
  }
  return out;
}

inline Element random_element(std::mt19937_64& rng, const Algebra& alg, int max_len, int max_terms = 2) {
  return normal_form(alg, random_raw(rng, alg, max_len, max_terms));
}

}  // namespace qgr::testing

namespace doctest {
template <>
struct StringMaker<qgr::Scalar> {
  static String convert(const qgr::Scalar& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<qgr::Element> {
  static String convert(const qgr::Element& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<qgr::Tensor> {
  static String convert(const qgr::Tensor& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<qgr::ModuleVector> {
  static String convert(const qgr::ModuleVector& v) {
    std::string out = "{";
    for (const auto& [k, c] : v) out += " " + std::to_string(k) + ": " + c.to_string();
    return (out + " }").c_str();
  }
};
}  // namespace doctest
