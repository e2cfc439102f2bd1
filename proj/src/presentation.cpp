#include "qgr/presentation.hpp"

#include <algorithm>
#include <random>

namespace qgr {

std::string to_string(Kind kind) { return kind == Kind::gl ? "gl" : "sl"; }

Kind parse_kind(const std::string& text) {
  if (text == "gl") return Kind::gl;
  if (text == "sl") return Kind::sl;
  throw Error("unknown algebra kind '" + text + "' (expected gl or sl)");
}

// ---------------------------------------------------------------------------
// Params

Params Params::generic() {
  Params p;
  p.u = Scalar::u();
  p.v = Scalar::v();
  p.r = Scalar::r();
  p.s = Scalar::s();
  p.has_roots = true;
  p.symbolic = true;
  return p;
}

Params Params::at(const mpq_class& u0, const mpq_class& v0) {
  if (u0 == 0 || v0 == 0) throw Error("specialization needs nonzero u and v");
  if (u0 * u0 == v0 * v0) throw Error("specialization violates r != s");
  Params p;
  p.u = Scalar(u0);
  p.v = Scalar(v0);
  p.r = Scalar(mpq_class(u0 * u0));
  p.s = Scalar(mpq_class(v0 * v0));
  p.has_roots = true;
  return p;
}

std::vector<Params> seeded_points(int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    const long num = 1 + static_cast<long>(rng() % 9);
    const long den = 1 + static_cast<long>(rng() % 5);
    mpq_class q(num, den);
    q.canonicalize();
    return (rng() & 1) ? mpq_class(-q) : q;
  };
  std::vector<Params> out;
  while (static_cast<int>(out.size()) < count) {
    const mpq_class u0 = draw(), v0 = draw();
    if (u0 * u0 != v0 * v0) out.push_back(Params::at(u0, v0));
  }
  return out;
}

Params Params::numeric(const mpq_class& r0, const mpq_class& s0) {
  if (r0 == 0 || s0 == 0 || r0 == s0) throw Error("numeric parameters need nonzero r != s");
  Params p;
  p.r = Scalar(r0);
  p.s = Scalar(s0);
  return p;
}

Scalar Params::rs(int x, int y) const {
  if (symbolic) return Scalar::monomial(2 * x, 2 * y);
  return r.pow(x) * s.pow(y);
}

Scalar Params::half_power(long k) const {
  if (!has_roots) throw Error("half powers of r/s need square roots of the parameters");
  if (symbolic) return qgr::half_power(k);
  return (u / v).pow(k);
}

std::string Params::describe() const {
  if (symbolic) return "generic";
  if (has_roots) return "u=" + u.rational_value().get_str() + ",v=" + v.rational_value().get_str();
  return "r=" + r.rational_value().get_str() + ",s=" + s.rational_value().get_str();
}

// ---------------------------------------------------------------------------
// Generators and keys

std::string to_string(const Generator& g) {
  const std::string i = std::to_string(g.index);
  switch (g.kind) {
    case GenKind::E: return "e" + i;
    case GenKind::F: return "f" + i;
    case GenKind::A: return "a" + i;
    case GenKind::Ainv: return "a" + i + "^-1";
    case GenKind::B: return "b" + i;
    case GenKind::Binv: return "b" + i + "^-1";
    case GenKind::W: return "w" + i;
    case GenKind::Winv: return "w" + i + "^-1";
    case GenKind::Wp: return "w'" + i;
    case GenKind::Wpinv: return "w'" + i + "^-1";
  }
  return "?";
}

namespace {

bool word_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace

bool operator<(const TermKey& x, const TermKey& y) {
  if (x.f != y.f) return word_less(x.f, y.f);
  if (x.t != y.t) return x.t < y.t;
  return word_less(x.e, y.e);
}

int eps_alpha(int i, int j, int n) {
  if (j == n) return i == n ? 1 : 0;
  return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(int n, Kind kind, Params params) : n_(n), kind_(kind), params_(std::move(params)) {
  if (n < 2) throw Error("n must be at least 2 (got " + std::to_string(n) + ")");
  inv_r_minus_s_ = (params_.r - params_.s).inverse();
  const int T = torus_size();
  chi_r_.assign(T, std::vector<int>(n_, 0));
  chi_s_.assign(T, std::vector<int>(n_, 0));
  for (int j = 1; j < n_; ++j) {
    if (kind_ == Kind::gl) {
      for (int i = 1; i <= n_; ++i) {
        chi_r_[i - 1][j] = eps_alpha(i, j, n_);
        chi_s_[n_ + i - 1][j] = eps_alpha(i, j, n_);
      }
    } else {
      for (int i = 1; i < n_; ++i) {
        chi_r_[i - 1][j] = eps_alpha(i, j, n_);
        chi_s_[i - 1][j] = eps_alpha(i + 1, j, n_);
        chi_r_[n_ - 1 + i - 1][j] = eps_alpha(i + 1, j, n_);
        chi_s_[n_ - 1 + i - 1][j] = eps_alpha(i, j, n_);
      }
    }
  }
}

std::shared_ptr<const Algebra> build_algebra(int n, Kind kind, Params params) {
  return std::make_shared<const Algebra>(n, kind, std::move(params));
}

TorusExp Algebra::omega(int j) const {
  TorusExp t = zero_torus();
  if (kind_ == Kind::gl) {
    t[j - 1] += 1;
    t[n_ + j] += 1;
  } else {
    t[j - 1] = 1;
  }
  return t;
}

TorusExp Algebra::omega_prime(int j) const {
  TorusExp t = zero_torus();
  if (kind_ == Kind::gl) {
    t[j] += 1;
    t[n_ + j - 1] += 1;
  } else {
    t[n_ - 1 + j - 1] = 1;
  }
  return t;
}

TorusExp Algebra::omega_of(const std::vector<int>& zeta, bool primed) const {
  TorusExp t = zero_torus();
  for (int j = 1; j < n_; ++j) {
    if (zeta[j - 1] == 0) continue;
    const TorusExp w = primed ? omega_prime(j) : omega(j);
    for (int k = 0; k < torus_size(); ++k) t[k] += zeta[j - 1] * w[k];
  }
  return t;
}

bool Algebra::is_torus(const Generator& g) const { return g.kind != GenKind::E && g.kind != GenKind::F; }

TorusExp Algebra::torus_of(const Generator& g) const {
  TorusExp t = zero_torus();
  const bool gl_kind = g.kind == GenKind::A || g.kind == GenKind::Ainv || g.kind == GenKind::B || g.kind == GenKind::Binv;
  const bool sl_kind = g.kind == GenKind::W || g.kind == GenKind::Winv || g.kind == GenKind::Wp || g.kind == GenKind::Wpinv;
  if ((gl_kind && kind_ != Kind::gl) || (sl_kind && kind_ != Kind::sl) || (!gl_kind && !sl_kind))
    throw Error("generator " + to_string(g) + " is not a torus generator of this algebra");
  const int top = gl_kind ? n_ : n_ - 1;
  if (g.index < 1 || g.index > top) throw Error("generator index out of range: " + to_string(g));
  switch (g.kind) {
    case GenKind::A: t[g.index - 1] = 1; break;
    case GenKind::Ainv: t[g.index - 1] = -1; break;
    case GenKind::B: t[n_ + g.index - 1] = 1; break;
    case GenKind::Binv: t[n_ + g.index - 1] = -1; break;
    case GenKind::W: t[g.index - 1] = 1; break;
    case GenKind::Winv: t[g.index - 1] = -1; break;
    case GenKind::Wp: t[n_ - 1 + g.index - 1] = 1; break;
    case GenKind::Wpinv: t[n_ - 1 + g.index - 1] = -1; break;
    default: break;
  }
  return t;
}

std::pair<int, int> Algebra::chi_exponents(const TorusExp& t, int j) const {
  int x = 0, y = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == 0) continue;
    x += t[k] * chi_r_[k][j];
    y += t[k] * chi_s_[k][j];
  }
  return {x, y};
}

std::pair<int, int> Algebra::chi_exponents(const TorusExp& t, const Word& w) const {
  int x = 0, y = 0;
  for (int j : w) {
    auto [dx, dy] = chi_exponents(t, j);
    x += dx;
    y += dy;
  }
  return {x, y};
}

Scalar Algebra::chi(const TorusExp& t, int j) const {
  auto [x, y] = chi_exponents(t, j);
  return params_.rs(x, y);
}

std::vector<Generator> Algebra::generators() const {
  std::vector<Generator> out;
  for (int i = 1; i < n_; ++i) out.push_back({GenKind::E, i});
  for (int i = 1; i < n_; ++i) out.push_back({GenKind::F, i});
  if (kind_ == Kind::gl) {
    for (int i = 1; i <= n_; ++i) {
      out.push_back({GenKind::A, i});
      out.push_back({GenKind::Ainv, i});
    }
    for (int i = 1; i <= n_; ++i) {
      out.push_back({GenKind::B, i});
      out.push_back({GenKind::Binv, i});
    }
  } else {
    for (int i = 1; i < n_; ++i) {
      out.push_back({GenKind::W, i});
      out.push_back({GenKind::Winv, i});
    }
    for (int i = 1; i < n_; ++i) {
      out.push_back({GenKind::Wp, i});
      out.push_back({GenKind::Wpinv, i});
    }
  }
  return out;
}

namespace {

Generator inverse_of(const Generator& g) {
  switch (g.kind) {
    case GenKind::A: return {GenKind::Ainv, g.index};
    case GenKind::Ainv: return {GenKind::A, g.index};
    case GenKind::B: return {GenKind::Binv, g.index};
    case GenKind::Binv: return {GenKind::B, g.index};
    case GenKind::W: return {GenKind::Winv, g.index};
    case GenKind::Winv: return {GenKind::W, g.index};
    case GenKind::Wp: return {GenKind::Wpinv, g.index};
    case GenKind::Wpinv: return {GenKind::Wp, g.index};
    default: throw Error("generator has no inverse: " + to_string(g));
  }
}

bool positive_torus(const Generator& g) {
  return g.kind == GenKind::A || g.kind == GenKind::B || g.kind == GenKind::W || g.kind == GenKind::Wp;
}

Generator E(int i) { return {GenKind::E, i}; }
Generator F(int i) { return {GenKind::F, i}; }

}  // namespace

std::vector<Relation> Algebra::defining_relations() const {
  std::vector<Relation> out;
  const Scalar& r = params_.r;
  const Scalar& s = params_.s;
  std::vector<Generator> torus;
  for (const auto& g : generators())
    if (is_torus(g) && positive_torus(g)) torus.push_back(g);

  for (std::size_t x = 0; x < torus.size(); ++x) {
    const Generator& g = torus[x];
    out.push_back({"torus inverse " + to_string(g), {{1, {g, inverse_of(g)}}, {-1, {}}}});
    out.push_back({"torus inverse " + to_string(inverse_of(g)), {{1, {inverse_of(g), g}}, {-1, {}}}});
    for (std::size_t y = x + 1; y < torus.size(); ++y) {
      const Generator& h = torus[y];
      out.push_back({"torus commute " + to_string(g) + "," + to_string(h), {{1, {g, h}}, {-1, {h, g}}}});
    }
  }
  for (const auto& g : torus) {
    for (int j = 1; j < n_; ++j) {
      const Scalar c = chi(torus_of(g), j);
      out.push_back({"torus-e " + to_string(g) + "," + to_string(E(j)), {{1, {g, E(j)}}, {-c, {E(j), g}}}});
      out.push_back({"torus-f " + to_string(g) + "," + to_string(F(j)), {{1, {g, F(j)}}, {-c.inverse(), {F(j), g}}}});
    }
  }
  auto k_word = [&](int i, bool primed) -> std::vector<Generator> {
    if (kind_ == Kind::sl) return {{primed ? GenKind::Wp : GenKind::W, i}};
    return primed ? std::vector<Generator>{{GenKind::A, i + 1}, {GenKind::B, i}}
                  : std::vector<Generator>{{GenKind::A, i}, {GenKind::B, i + 1}};
  };
  for (int i = 1; i < n_; ++i) {
    for (int j = 1; j < n_; ++j) {
      RawExpr ex{{1, {E(i), F(j)}}, {-1, {F(j), E(i)}}};
      if (i == j) {
        ex.push_back({-inv_r_minus_s_, k_word(i, false)});
        ex.push_back({inv_r_minus_s_, k_word(i, true)});
      }
      out.push_back({"ef commutator " + to_string(E(i)) + "," + to_string(F(j)), ex});
    }
  }
  for (int i = 1; i < n_; ++i) {
    for (int j = i + 2; j < n_; ++j) {
      out.push_back({"far commute " + to_string(E(i)) + "," + to_string(E(j)), {{1, {E(i), E(j)}}, {-1, {E(j), E(i)}}}, true});
      out.push_back({"far commute " + to_string(F(i)) + "," + to_string(F(j)), {{1, {F(i), F(j)}}, {-1, {F(j), F(i)}}}, true});
    }
  }
  const Scalar rs_sum = r + s, rs_prod = r * s;
  const Scalar rs_inv_sum = r.inverse() + s.inverse(), rs_inv_prod = (r * s).inverse();
  for (int i = 1; i + 1 < n_; ++i) {
    const int k = i + 1;
    const std::string tag = std::to_string(i) + "," + std::to_string(k);
    out.push_back({"cubic e " + tag + " first",
                   {{1, {E(i), E(i), E(k)}}, {-rs_sum, {E(i), E(k), E(i)}}, {rs_prod, {E(k), E(i), E(i)}}},
                   true});
    out.push_back({"cubic e " + tag + " second",
                   {{1, {E(i), E(k), E(k)}}, {-rs_sum, {E(k), E(i), E(k)}}, {rs_prod, {E(k), E(k), E(i)}}},
                   true});
    out.push_back({"cubic f " + tag + " first",
                   {{1, {F(i), F(i), F(k)}}, {-rs_inv_sum, {F(i), F(k), F(i)}}, {rs_inv_prod, {F(k), F(i), F(i)}}},
                   true});
    out.push_back({"cubic f " + tag + " second",
                   {{1, {F(i), F(k), F(k)}}, {-rs_inv_sum, {F(k), F(i), F(k)}}, {rs_inv_prod, {F(k), F(k), F(i)}}},
                   true});
  }
  return out;
}

std::string Algebra::describe() const {
  return to_string(kind_) + "_" + std::to_string(n_) + " (" + params_.describe() + ")";
}

// ---------------------------------------------------------------------------
// Element

namespace {

void accumulate(Element::Terms& terms, const TermKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

void accumulate(Element::Terms& terms, TermKey&& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

TorusExp add_torus(const TorusExp& a, const TorusExp& b) {
  TorusExp out(a);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

// acc := acc * f_j.
void right_mul_f(const Algebra& alg, Element::Terms& acc, int j) {
  const Params& P = alg.params();
  const TorusExp K = alg.omega(j), Kp = alg.omega_prime(j);
  Element::Terms out;
  for (const auto& [key, c] : acc) {
    auto [x, y] = alg.chi_exponents(key.t, j);
    TermKey main{key.f, key.t, key.e};
    main.f.push_back(j);
    accumulate(out, std::move(main), c * P.rs(-x, -y));
    for (std::size_t p = 0; p < key.e.size(); ++p) {
      if (key.e[p] != j) continue;
      Word left(key.e.begin(), key.e.begin() + static_cast<long>(p));
      Word rest(key.e);
      rest.erase(rest.begin() + static_cast<long>(p));
      const Scalar base = c * alg.inv_r_minus_s();
      auto [kx, ky] = alg.chi_exponents(K, left);
      accumulate(out, TermKey{key.f, add_torus(key.t, K), rest}, base * P.rs(-kx, -ky));
      auto [qx, qy] = alg.chi_exponents(Kp, left);
      accumulate(out, TermKey{key.f, add_torus(key.t, Kp), rest}, -(base * P.rs(-qx, -qy)));
    }
  }
  acc.swap(out);
}

}  // namespace

Element multiply_keys(const Algebra& alg, const TermKey& x, const TermKey& y) {
  Element::Terms acc;
  acc.emplace(x, Scalar(1));
  for (int j : y.f) right_mul_f(alg, acc, j);
  Element out(alg);
  const bool trivial_torus = std::all_of(y.t.begin(), y.t.end(), [](int v) { return v == 0; });
  for (const auto& [key, c] : acc) {
    TermKey k = key;
    Scalar coeff = c;
    if (!trivial_torus) {
      auto [tx, ty] = alg.chi_exponents(y.t, key.e);
      coeff *= alg.params().rs(-tx, -ty);
      k.t = add_torus(k.t, y.t);
    }
    k.e.insert(k.e.end(), y.e.begin(), y.e.end());
    out.add_term(k, coeff);
  }
  return out;
}

Element::Element(const Algebra& alg, TermKey key, const Scalar& c) : alg_(&alg) {
  if (!c.is_zero()) terms_.emplace(std::move(key), c);
}

Element Element::scalar(const Algebra& alg, const Scalar& c) { return Element(alg, TermKey{{}, alg.zero_torus(), {}}, c); }

Element Element::e(const Algebra& alg, int i) {
  if (i < 1 || i >= alg.n()) throw Error("e index out of range");
  return Element(alg, TermKey{{}, alg.zero_torus(), {i}}, Scalar(1));
}

Element Element::f(const Algebra& alg, int i) {
  if (i < 1 || i >= alg.n()) throw Error("f index out of range");
  return Element(alg, TermKey{{i}, alg.zero_torus(), {}}, Scalar(1));
}

Element Element::torus(const Algebra& alg, const TorusExp& t) { return Element(alg, TermKey{{}, t, {}}, Scalar(1)); }

Element Element::gen(const Algebra& alg, const Generator& g) {
  if (g.kind == GenKind::E) return e(alg, g.index);
  if (g.kind == GenKind::F) return f(alg, g.index);
  return torus(alg, alg.torus_of(g));
}

void Element::check_same(const Element& o) const {
  if (alg_ != o.alg_) throw Error("elements belong to different algebras");
}

void Element::add_term(const TermKey& key, const Scalar& c) { accumulate(terms_, key, c); }

Element& Element::operator+=(const Element& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element out(*this);
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

Element operator*(const Element& x, const Element& y) {
  x.check_same(y);
  const Algebra& alg = *x.alg_;
  Element out(alg);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      const Scalar c = cx * cy;
      for (const auto& [k, v] : multiply_keys(alg, kx, ky).terms_) accumulate(out.terms_, k, c * v);
    }
  }
  return out;
}

bool operator==(const Element& x, const Element& y) { return x.alg_ == y.alg_ && x.terms_ == y.terms_; }

std::string key_to_string(const TermKey& key) {
  std::vector<std::string> parts;
  auto word = [](char tag, const std::vector<int>& w) {
    std::string out(1, tag);
    out += '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(w[i]);
    }
    return out + "]";
  };
  if (!key.f.empty()) parts.push_back(word('f', key.f));
  if (std::any_of(key.t.begin(), key.t.end(), [](int v) { return v != 0; })) parts.push_back(word('t', key.t));
  if (!key.e.empty()) parts.push_back(word('e', key.e));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string();
    const std::string ks = key_to_string(k);
    if (ks != "1") out += " * " + ks;
  }
  return out;
}

Element word_element(const Algebra& alg, const std::vector<Generator>& word) {
  Element out = Element::one(alg);
  for (const auto& g : word) out = out * Element::gen(alg, g);
  return out;
}

Element normal_form(const Algebra& alg, const RawExpr& expr) {
  Element out(alg);
  for (const auto& term : expr) out += word_element(alg, term.word) * term.coeff;
  return out;
}

std::vector<std::pair<Relation, Element>> relation_residuals(const Algebra& alg) {
  std::vector<std::pair<Relation, Element>> out;
  for (auto& rel : alg.defining_relations()) {
    Element res = normal_form(alg, rel.expr);
    out.emplace_back(std::move(rel), std::move(res));
  }
  return out;
}

Element omega_lambda(const Algebra& alg, const std::vector<int>& lambda_alpha, bool primed) {
  const int n = alg.n();
  if (static_cast<int>(lambda_alpha.size()) != n) throw Error("weight must have n alpha-coordinates");
  if (alg.kind() == Kind::sl && lambda_alpha[n - 1] != 0)
    throw Error("weight lies outside the root lattice span; w_lambda needs the gl torus");
  std::vector<int> zeta(lambda_alpha.begin(), lambda_alpha.end() - 1);
  TorusExp t = alg.omega_of(zeta, primed);
  if (alg.kind() == Kind::gl) {
    if (primed)
      t[2 * n - 1] += lambda_alpha[n - 1];
    else
      t[n - 1] += lambda_alpha[n - 1];
  }
  return Element::torus(alg, t);
}

}  // namespace qgr
