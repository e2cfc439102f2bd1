// Independent reference computations shared by the test binaries. None of
// these go through the p-map recursions.
#pragma once

#include <functional>

#include "qgr/hopf.hpp"
#include "qgr/pairing.hpp"

namespace qgr::oracle {

inline Tensor iterate_coproduct(const Element& x, int legs) {
  Tensor t = Tensor::product_of({x});
  for (int k = 1; k < legs; ++k) t = coproduct_on_leg(t, k - 1);
  return t;
}

inline bool torus_is_zero(const TorusExp& t) {
  for (int v : t)
    if (v != 0) return false;
  return true;
}

// (f_{j_1}...f_{j_k}, x) as sum over the k-fold coproduct of x of
// prod_l (f_{j_l}, x_(l)), with (f_j, T e_i) = delta_ij (w'_j, T)/(s-r).
inline Scalar pair_by_upper_coproduct(const PairingContext& ctx, const Word& f, const Word& e) {
  const Algebra& alg = ctx.algebra();
  if (f.size() != e.size()) return Scalar(0);
  if (f.empty()) return Scalar(1);
  const Element x(alg, TermKey{{}, alg.zero_torus(), e}, Scalar(1));
  const Scalar k = (alg.params().s - alg.params().r).inverse();
  Scalar total;
  const Tensor expanded = iterate_coproduct(x, static_cast<int>(f.size()));
  for (const auto& [key, c] : expanded.terms()) {
    Scalar term = c;
    for (std::size_t l = 0; l < f.size() && !term.is_zero(); ++l) {
      const TermKey& leg = key[l];
      if (leg.e.size() != 1 || leg.e[0] != f[l]) {
        term = Scalar(0);
        break;
      }
      term *= k * ctx.torus_pairing(alg.omega_prime(f[l]), leg.t);
    }
    total += term;
  }
  return total;
}

// (y, e_{i_1}...e_{i_k}) with the k-fold coproduct of y read in reverse
// order: (y, x1 x2) = sum (y_(2), x1)(y_(1), x2), and (f_j T, e_i) =
// delta_ij/(s-r).
inline Scalar pair_by_lower_coproduct(const PairingContext& ctx, const Word& f, const Word& e) {
  const Algebra& alg = ctx.algebra();
  if (f.size() != e.size()) return Scalar(0);
  if (e.empty()) return Scalar(1);
  const Element y(alg, TermKey{f, alg.zero_torus(), {}}, Scalar(1));
  const Scalar k = (alg.params().s - alg.params().r).inverse();
  const std::size_t h = e.size();
  Scalar total;
  const Tensor expanded = iterate_coproduct(y, static_cast<int>(h));
  for (const auto& [key, c] : expanded.terms()) {
    bool ok = true;
    for (std::size_t l = 0; l < h && ok; ++l) {
      const TermKey& leg = key[h - 1 - l];
      ok = leg.f.size() == 1 && leg.f[0] == e[l];
    }
    if (ok) total += c * k.pow(static_cast<long>(h));
  }
  return total;
}

// p-maps read off from coproducts:
//   D(x) = x (x) 1 + sum p_i(x) w_i (x) e_i + ...
//   D(x) = w_zeta (x) x + sum e_i w_{zeta-a_i} (x) p'_i(x) + ...
//   D(y) = y (x) w'_zeta + sum p_i(y) (x) f_i w'_{zeta-a_i} + ...
//   D(y) = 1 (x) y + sum f_i (x) p'_i(y) w'_i + ...
inline WordCombo p_map_from_coproduct(const Algebra& alg, const Word& w, int i, bool primed, bool upper) {
  const int n = alg.n();
  Content zeta = content_of(w, n);
  WordCombo out;
  if (zeta[static_cast<std::size_t>(i - 1)] == 0) return out;
  Content rest = zeta;
  rest[static_cast<std::size_t>(i - 1)] -= 1;
  const TorusExp zero = alg.zero_torus();
  const Element x(alg, upper ? TermKey{{}, zero, w} : TermKey{w, zero, {}}, Scalar(1));
  const Tensor dx = coproduct(x);
  for (const auto& [key, c] : dx.terms()) {
    const TermKey& a = key[0];
    const TermKey& b = key[1];
    if (upper && !primed) {
      if (b.e == Word{i} && torus_is_zero(b.t) && a.t == alg.omega(i)) out[a.e] += c * alg.params().rs(alg.chi_exponents(a.t, a.e).first, alg.chi_exponents(a.t, a.e).second);
    } else if (upper && primed) {
      if (a.e == Word{i} && a.t == alg.omega_of(rest, false) && torus_is_zero(b.t)) out[b.e] += c * alg.chi(a.t, i);
    } else if (!primed) {
      if (b.f == Word{i} && b.t == alg.omega_of(rest, true) && torus_is_zero(a.t)) out[a.f] += c;
    } else {
      if (a.f == Word{i} && torus_is_zero(a.t) && b.t == alg.omega_prime(i)) out[b.f] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Number of ways to write zeta as a multiset of positive roots
// alpha_i + ... + alpha_{j-1}.
inline long kostant_count(const Content& zeta) {
  const int m = static_cast<int>(zeta.size());
  std::vector<std::pair<int, int>> roots;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) roots.emplace_back(i, j);
  std::function<long(std::size_t, Content&)> go = [&](std::size_t k, Content& left) -> long {
    bool done = true;
    for (int v : left) done = done && v == 0;
    if (done) return 1;
    if (k == roots.size()) return 0;
    long total = go(k + 1, left);
    const auto [i, j] = roots[k];
    int used = 0;
    while (true) {
      bool fits = true;
      for (int t = i; t <= j; ++t) fits = fits && left[static_cast<std::size_t>(t)] > 0;
      if (!fits) break;
      for (int t = i; t <= j; ++t) left[static_cast<std::size_t>(t)] -= 1;
      ++used;
      total += go(k + 1, left);
    }
    for (int t = i; t <= j; ++t) left[static_cast<std::size_t>(t)] += used;
    return total;
  };
  Content left = zeta;
  return go(0, left);
}

}  // namespace qgr::oracle
