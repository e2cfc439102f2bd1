#include "qgr/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qgr {

Content content_of(const Word& w, int n) {
  Content c(static_cast<std::size_t>(n - 1), 0);
  for (int i : w) c[static_cast<std::size_t>(i - 1)] += 1;
  return c;
}

int height(const Content& zeta) { return std::accumulate(zeta.begin(), zeta.end(), 0); }

std::vector<Word> words_of_content(const Content& zeta) {
  Word w;
  for (std::size_t j = 0; j < zeta.size(); ++j)
    for (int k = 0; k < zeta[j]; ++k) w.push_back(static_cast<int>(j) + 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Content> contents_up_to(int n, int max_height, int min_height) {
  std::vector<Content> out;
  Content c(static_cast<std::size_t>(n - 1), 0);
  // Odometer over [0, max_height]^(n-1).
  while (true) {
    const int h = height(c);
    if (h >= min_height && h <= max_height) out.push_back(c);
    std::size_t k = 0;
    while (k < c.size()) {
      if (++c[k] <= max_height) break;
      c[k] = 0;
      ++k;
    }
    if (k == c.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Content& a, const Content& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return out;
}

int eps_dot(int k, const Content& zeta) {
  const int n1 = static_cast<int>(zeta.size());
  const int here = k <= n1 ? zeta[static_cast<std::size_t>(k - 1)] : 0;
  const int prev = k >= 2 && k - 1 <= n1 ? zeta[static_cast<std::size_t>(k - 2)] : 0;
  return here - prev;
}

std::vector<int> eps_to_alpha(const std::vector<int>& eps) {
  std::vector<int> out(eps.size());
  int acc = 0;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    acc += eps[k];
    out[k] = acc;
  }
  return out;
}

std::vector<int> alpha_to_eps(const std::vector<int>& alpha) {
  std::vector<int> out(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) out[k] = alpha[k] - (k ? alpha[k - 1] : 0);
  return out;
}

// ---------------------------------------------------------------------------

PairingContext::PairingContext(const Algebra& alg, int height_cutoff)
    : alg_(alg), cutoff_(height_cutoff), inv_s_minus_r_((alg.params().s - alg.params().r).inverse()) {}

std::vector<int> PairingContext::lower_torus_coords(const TorusExp& t) const {
  const int n = alg_.n();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  if (alg_.kind() == Kind::gl) {
    // w'_i = a_{i+1} b_i, b_n.
    bool ok = t[0] == 0;
    for (int i = 1; i < n; ++i) ok = ok && t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(n + i - 1)];
    if (!ok) throw Error("torus part lies outside the lower Borel torus");
    for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i - 1)] = t[static_cast<std::size_t>(n + i - 1)];
  } else {
    for (int i = 0; i < n - 1; ++i)
      if (t[static_cast<std::size_t>(i)] != 0) throw Error("torus part lies outside the lower Borel torus");
    for (int i = 0; i < n - 1; ++i) c[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(n - 1 + i)];
  }
  return c;
}

std::vector<int> PairingContext::upper_torus_coords(const TorusExp& t) const {
  const int n = alg_.n();
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  if (alg_.kind() == Kind::gl) {
    // w_j = a_j b_{j+1}, a_n.
    bool ok = t[static_cast<std::size_t>(n)] == 0;
    for (int j = 1; j < n; ++j) ok = ok && t[static_cast<std::size_t>(n + j)] == t[static_cast<std::size_t>(j - 1)];
    if (!ok) throw Error("torus part lies outside the upper Borel torus");
    for (int j = 1; j <= n; ++j) d[static_cast<std::size_t>(j - 1)] = t[static_cast<std::size_t>(j - 1)];
  } else {
    for (int i = 0; i < n - 1; ++i)
      if (t[static_cast<std::size_t>(n - 1 + i)] != 0) throw Error("torus part lies outside the upper Borel torus");
    for (int i = 0; i < n - 1; ++i) d[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)];
  }
  return d;
}

Scalar PairingContext::torus_pairing_coords(const std::vector<int>& c, const std::vector<int>& d) const {
  const int n = alg_.n();
  int x = 0, y = 0;
  for (int i = 1; i < n; ++i) {
    const int ci = c[static_cast<std::size_t>(i - 1)];
    if (ci == 0) continue;
    for (int j = 1; j < n; ++j) {
      const int dj = d[static_cast<std::size_t>(j - 1)];
      if (dj == 0) continue;
      // (w'_i, w_j) = r^{<eps_j, alpha_i>} s^{<eps_{j+1}, alpha_i>}
      x += ci * dj * eps_alpha(j, i, n);
      y += ci * dj * eps_alpha(j + 1, i, n);
    }
    // (w'_i, a_n) = r^{<eps_n, alpha_i>}
    x += ci * d[static_cast<std::size_t>(n - 1)] * eps_alpha(n, i, n);
  }
  // (b_n, w_j) = s^{-<eps_n, alpha_j>}, (b_n, a_n) = 1
  const int cn = c[static_cast<std::size_t>(n - 1)];
  for (int j = 1; j < n; ++j) y -= cn * d[static_cast<std::size_t>(j - 1)] * eps_alpha(n, j, n);
  return alg_.params().rs(x, y);
}

Scalar PairingContext::torus_pairing(const TorusExp& lower, const TorusExp& upper) const {
  return torus_pairing_coords(lower_torus_coords(lower), upper_torus_coords(upper));
}

Scalar PairingContext::pair_generators(const Generator& y, const Generator& x) const {
  const int n = alg_.n();
  std::vector<int> c(static_cast<std::size_t>(n), 0), d(static_cast<std::size_t>(n), 0);
  bool y_f = false, x_e = false;
  switch (y.kind) {
    case GenKind::F: y_f = true; break;
    case GenKind::Wp: c.at(static_cast<std::size_t>(y.index - 1)) = 1; break;
    case GenKind::Wpinv: c.at(static_cast<std::size_t>(y.index - 1)) = -1; break;
    case GenKind::B:
    case GenKind::Binv:
      if (y.index != n || alg_.kind() != Kind::gl) throw Error("generator outside the lower Borel part: " + to_string(y));
      c[static_cast<std::size_t>(n - 1)] = y.kind == GenKind::B ? 1 : -1;
      break;
    default: throw Error("generator outside the lower Borel part: " + to_string(y));
  }
  switch (x.kind) {
    case GenKind::E: x_e = true; break;
    case GenKind::W: d.at(static_cast<std::size_t>(x.index - 1)) = 1; break;
    case GenKind::Winv: d.at(static_cast<std::size_t>(x.index - 1)) = -1; break;
    case GenKind::A:
    case GenKind::Ainv:
      if (x.index != n || alg_.kind() != Kind::gl) throw Error("generator outside the upper Borel part: " + to_string(x));
      d[static_cast<std::size_t>(n - 1)] = x.kind == GenKind::A ? 1 : -1;
      break;
    default: throw Error("generator outside the upper Borel part: " + to_string(x));
  }
  if (y_f && x_e) return y.index == x.index ? inv_s_minus_r_ : Scalar(0);
  if (y_f || x_e) return Scalar(0);
  return torus_pairing_coords(c, d);
}

// ---------------------------------------------------------------------------
// p-maps. Coefficients depend on the content before / after the removed
// letter.

namespace {

void add_to(WordCombo& out, Word&& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(std::move(w), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

// Removes letter i at each position p, weighting by rs(exponents) computed
// from the content strictly before (use_prefix) or strictly after p.
template <typename Exps>
WordCombo remove_letter(const Algebra& alg, const WordCombo& in, int i, bool use_prefix, Exps exps) {
  const int n = alg.n();
  WordCombo out;
  for (const auto& [w, c] : in) {
    Content total = content_of(w, n);
    Content prefix(static_cast<std::size_t>(n - 1), 0);
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == i) {
        Content ctx = prefix;
        if (!use_prefix) {
          for (std::size_t k = 0; k < ctx.size(); ++k) ctx[k] = total[k] - prefix[k];
          ctx[static_cast<std::size_t>(i - 1)] -= 1;
        }
        auto [x, y] = exps(ctx);
        Word rest(w);
        rest.erase(rest.begin() + static_cast<long>(p));
        add_to(out, std::move(rest), c * alg.params().rs(x, y));
      }
      prefix[static_cast<std::size_t>(w[p] - 1)] += 1;
    }
  }
  return out;
}

}  // namespace

WordCombo PairingContext::p_upper(const WordCombo& x, int i, bool primed) const {
  if (!primed)
    return remove_letter(alg_, x, i, false, [&](const Content& z) { return std::pair{eps_dot(i, z), eps_dot(i + 1, z)}; });
  return remove_letter(alg_, x, i, true, [&](const Content& z) { return std::pair{-eps_dot(i + 1, z), -eps_dot(i, z)}; });
}

WordCombo PairingContext::p_lower(const WordCombo& y, int i, bool primed) const {
  if (!primed)
    return remove_letter(alg_, y, i, true, [&](const Content& z) { return std::pair{eps_dot(i, z), eps_dot(i + 1, z)}; });
  return remove_letter(alg_, y, i, false, [&](const Content& z) { return std::pair{-eps_dot(i + 1, z), -eps_dot(i, z)}; });
}

Element PairingContext::p_map(const Element& x, int i, bool primed) const {
  bool upper = true, lower = true;
  std::optional<Content> zeta;
  WordCombo combo;
  for (const auto& [k, c] : x.terms()) {
    if (std::any_of(k.t.begin(), k.t.end(), [](int v) { return v != 0; }))
      throw Error("p-map needs an element without torus part");
    if (!k.f.empty()) upper = false;
    if (!k.e.empty()) lower = false;
    const Word& w = k.f.empty() ? k.e : k.f;
    const Content z = content_of(w, alg_.n());
    if (zeta && *zeta != z) throw Error("p-map needs a homogeneous element");
    zeta = z;
    combo[w] += c;
  }
  if (!upper && !lower) throw Error("p-map needs an element of U^+ or U^-");
  const WordCombo out = upper ? p_upper(combo, i, primed) : p_lower(combo, i, primed);
  Element res(alg_);
  for (const auto& [w, c] : out) res.add_term(upper ? TermKey{{}, alg_.zero_torus(), w} : TermKey{w, alg_.zero_torus(), {}}, c);
  return res;
}

Scalar PairingContext::pair_words(const Word& f, const Word& e, PairingRoute route) const {
  if (f.size() != e.size() || content_of(f, alg_.n()) != content_of(e, alg_.n())) return Scalar(0);
  WordCombo combo;
  switch (route) {
    case PairingRoute::peel_left_f:
      combo[e] = Scalar(1);
      for (int j : f) combo = p_upper(combo, j, true);
      break;
    case PairingRoute::peel_right_f:
      combo[e] = Scalar(1);
      for (auto it = f.rbegin(); it != f.rend(); ++it) combo = p_upper(combo, *it, false);
      break;
    case PairingRoute::peel_left_e:
      combo[f] = Scalar(1);
      for (int i : e) combo = p_lower(combo, i, false);
      break;
    case PairingRoute::peel_right_e:
      combo[f] = Scalar(1);
      for (auto it = e.rbegin(); it != e.rend(); ++it) combo = p_lower(combo, *it, true);
      break;
  }
  auto it = combo.find(Word{});
  if (it == combo.end()) return Scalar(0);
  return it->second * inv_s_minus_r_.pow(static_cast<long>(f.size()));
}

Scalar PairingContext::pair(const Element& y, const Element& x, PairingRoute route) const {
  Scalar total;
  for (const auto& [ky, cy] : y.terms()) {
    if (!ky.e.empty()) throw Error("left argument must lie in the lower Borel part");
    const auto c = lower_torus_coords(ky.t);
    for (const auto& [kx, cx] : x.terms()) {
      if (!kx.f.empty()) throw Error("right argument must lie in the upper Borel part");
      const auto d = upper_torus_coords(kx.t);
      const Scalar w = pair_words(ky.f, kx.e, route);
      if (w.is_zero()) continue;
      // T E = chi_T(E) E T, then (F T', E T) = (F, E)(T', T).
      auto [cx_r, cx_s] = alg_.chi_exponents(kx.t, kx.e);
      total += cy * cx * w * alg_.params().rs(cx_r, cx_s) * torus_pairing_coords(c, d);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Graded bases

std::shared_ptr<GradedBasis> PairingContext::build_basis(const Content& zeta) const {
  auto gb = std::make_shared<GradedBasis>();
  gb->zeta = zeta;
  gb->e_words = words_of_content(zeta);
  gb->f_words = gb->e_words;
  for (std::size_t k = 0; k < gb->e_words.size(); ++k) {
    gb->e_index[gb->e_words[k]] = static_cast<int>(k);
    gb->f_index[gb->f_words[k]] = static_cast<int>(k);
  }
  const std::size_t N = gb->e_words.size();
  gb->gram = zero_matrix(N, N);
  const Scalar scale = inv_s_minus_r_.pow(height(zeta));
  // For each e-word, walk f-word prefixes applying p'_j.
  for (std::size_t col = 0; col < N; ++col) {
    struct Frame {
      Word prefix;
      WordCombo combo;
    };
    std::vector<Frame> stack;
    stack.push_back({{}, {{gb->e_words[col], Scalar(1)}}});
    const int h = height(zeta);
    while (!stack.empty()) {
      Frame fr = std::move(stack.back());
      stack.pop_back();
      if (static_cast<int>(fr.prefix.size()) == h) {
        auto it = fr.combo.find(Word{});
        if (it != fr.combo.end()) gb->gram[static_cast<std::size_t>(gb->f_index.at(fr.prefix))][col] = it->second * scale;
        continue;
      }
      const Content used = content_of(fr.prefix, alg_.n());
      for (int j = 1; j < alg_.n(); ++j) {
        if (used[static_cast<std::size_t>(j - 1)] >= zeta[static_cast<std::size_t>(j - 1)]) continue;
        WordCombo next = p_upper(fr.combo, j, true);
        if (next.empty()) continue;
        Word p = fr.prefix;
        p.push_back(j);
        stack.push_back({std::move(p), std::move(next)});
      }
    }
  }
  gb->e_reps = independent_columns(gb->gram);
  gb->rank = static_cast<int>(gb->e_reps.size());
  Matrix restricted = zero_matrix(N, gb->e_reps.size());
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t k = 0; k < gb->e_reps.size(); ++k) restricted[a][k] = gb->gram[a][static_cast<std::size_t>(gb->e_reps[k])];
  gb->f_reps = independent_rows(restricted);
  Matrix sub = zero_matrix(gb->f_reps.size(), gb->e_reps.size());
  for (std::size_t a = 0; a < gb->f_reps.size(); ++a)
    for (std::size_t k = 0; k < gb->e_reps.size(); ++k)
      sub[a][k] = gb->gram[static_cast<std::size_t>(gb->f_reps[a])][static_cast<std::size_t>(gb->e_reps[k])];
  // sub[a][k] = (F_a, E_k); dual vectors v_k = sum_a inv[k][a] F_a need
  // sum_a inv[k][a] sub[a][l] = delta_{kl}, i.e. inv = sub^-1 with rows k.
  gb->inverse = gb->rank ? inverse(sub) : Matrix{};
  return gb;
}

std::shared_ptr<const GradedBasis> PairingContext::graded_basis(const Content& zeta) const {
  if (static_cast<int>(zeta.size()) != alg_.n() - 1) throw Error("content has the wrong length");
  for (int z : zeta)
    if (z < 0) throw Error("content must lie in Q^+");
  if (height(zeta) > cutoff_)
    throw CutoffExceeded("height " + std::to_string(height(zeta)) + " exceeds the configured cutoff " + std::to_string(cutoff_));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bases_.find(zeta);
    if (it != bases_.end()) return it->second;
  }
  auto gb = build_basis(zeta);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = bases_.emplace(zeta, std::move(gb));
  return it->second;
}

DualPair PairingContext::dual_bases(const Content& zeta) const {
  const auto gb = graded_basis(zeta);
  DualPair dp;
  dp.zeta = zeta;
  const TorusExp zero = alg_.zero_torus();
  for (int k = 0; k < gb->rank; ++k) {
    dp.u.emplace_back(alg_, TermKey{{}, zero, gb->e_words[static_cast<std::size_t>(gb->e_reps[static_cast<std::size_t>(k)])]}, Scalar(1));
    Element v(alg_);
    for (int a = 0; a < gb->rank; ++a)
      v.add_term(TermKey{gb->f_words[static_cast<std::size_t>(gb->f_reps[static_cast<std::size_t>(a)])], zero, {}},
                 gb->inverse[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)]);
    dp.v.push_back(std::move(v));
  }
  return dp;
}

std::vector<Scalar> PairingContext::e_coordinates(const Word& e) const {
  const auto gb = graded_basis(content_of(e, alg_.n()));
  const std::size_t col = static_cast<std::size_t>(gb->e_index.at(e));
  std::vector<Scalar> out(static_cast<std::size_t>(gb->rank));
  for (int k = 0; k < gb->rank; ++k)
    for (int a = 0; a < gb->rank; ++a) {
      const Scalar& g = gb->gram[static_cast<std::size_t>(gb->f_reps[static_cast<std::size_t>(a)])][col];
      if (!g.is_zero()) out[static_cast<std::size_t>(k)] += gb->inverse[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] * g;
    }
  return out;
}

std::vector<Scalar> PairingContext::f_coordinates(const Word& f) const {
  const auto gb = graded_basis(content_of(f, alg_.n()));
  const std::size_t row = static_cast<std::size_t>(gb->f_index.at(f));
  std::vector<Scalar> out(static_cast<std::size_t>(gb->rank));
  for (int k = 0; k < gb->rank; ++k) {
    const Scalar& g = gb->gram[row][static_cast<std::size_t>(gb->e_reps[static_cast<std::size_t>(k)])];
    if (g.is_zero()) continue;
    for (int a = 0; a < gb->rank; ++a) out[static_cast<std::size_t>(a)] += g * gb->inverse[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
  }
  return out;
}

namespace {

// Representative words with coefficients for one word.
std::vector<std::pair<Word, Scalar>> reduced_word(const PairingContext& ctx, const Word& w, bool upper) {
  if (w.empty()) return {{w, Scalar(1)}};
  const auto gb = ctx.graded_basis(content_of(w, ctx.algebra().n()));
  const auto coords = upper ? ctx.e_coordinates(w) : ctx.f_coordinates(w);
  std::vector<std::pair<Word, Scalar>> out;
  for (int k = 0; k < gb->rank; ++k) {
    const Scalar& c = coords[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const int idx = upper ? gb->e_reps[static_cast<std::size_t>(k)] : gb->f_reps[static_cast<std::size_t>(k)];
    out.emplace_back(upper ? gb->e_words[static_cast<std::size_t>(idx)] : gb->f_words[static_cast<std::size_t>(idx)], c);
  }
  return out;
}

}  // namespace

Element PairingContext::reduce(const Element& x) const {
  Element out(alg_);
  for (const auto& [k, c] : x.terms()) {
    const auto fs = reduced_word(*this, k.f, false);
    const auto es = reduced_word(*this, k.e, true);
    for (const auto& [fw, fc] : fs)
      for (const auto& [ew, ec] : es) out.add_term(TermKey{fw, k.t, ew}, c * fc * ec);
  }
  return out;
}

Tensor PairingContext::reduce(const Tensor& x) const {
  Tensor out(alg_, x.rank());
  for (const auto& [key, c] : x.terms()) {
    std::vector<Element> legs;
    for (const auto& leg : key) legs.push_back(reduce(Element(alg_, leg, Scalar(1))));
    out += Tensor::product_of(legs) * c;
  }
  return out;
}

// ---------------------------------------------------------------------------

Scalar f_form(const Params& params, const std::vector<int>& lambda_eps, const std::vector<int>& mu_eps) {
  if (lambda_eps.size() != mu_eps.size()) throw Error("weights of different length");
  int x = 0, y = 0;
  for (std::size_t i = 0; i < lambda_eps.size(); ++i)
    for (std::size_t j = 0; j < mu_eps.size(); ++j) {
      const int e = lambda_eps[i] * mu_eps[j];
      if (i > j) x += e;
      if (i < j) y -= e;
    }
  return params.rs(x, y);
}

Scalar f_form_via_pairing(const PairingContext& ctx, const std::vector<int>& lambda_eps, const std::vector<int>& mu_eps) {
  return ctx.torus_pairing_coords(eps_to_alpha(mu_eps), eps_to_alpha(lambda_eps)).inverse();
}

}  // namespace qgr
