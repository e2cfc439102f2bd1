#include "qgr/morphisms.hpp"

#include <random>

#include "qgr/error.hpp"

namespace qgr {

namespace {

const Element& image_of(const PresentationMorphism& m, const std::string& g) {
  auto it = m.images.find(g);
  if (it == m.images.end()) throw Error("no image for generator " + g + " under " + m.name);
  return it->second;
}

std::string word_text(const SourceWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) out += (out.empty() ? "" : " ") + g;
  return out;
}

SourceWord names_of(const std::vector<Generator>& word) {
  SourceWord out;
  for (const auto& g : word) out.push_back(to_string(g));
  return out;
}

SourceExpr concat(const SourceExpr& a, const SourceExpr& b) {
  SourceExpr out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// left * x * right, termwise.
SourceExpr sandwich(const SourceWord& left, const SourceExpr& x, const SourceWord& right, const Scalar& c) {
  SourceExpr out;
  for (const auto& t : x) {
    SourceWord w = left;
    w.insert(w.end(), t.word.begin(), t.word.end());
    w.insert(w.end(), right.begin(), right.end());
    out.push_back({t.coeff * c, std::move(w)});
  }
  return out;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }
std::string inv(const std::string& g) { return g + "^-1"; }

}  // namespace

Element apply_morphism(const PresentationMorphism& m, const SourceWord& w) {
  Element out = Element::one(*m.target);
  for (const auto& g : w) out = out * image_of(m, g);
  return out;
}

Element apply_morphism(const PresentationMorphism& m, const SourceExpr& x) {
  Element out(*m.target);
  for (const auto& t : x) out += apply_morphism(m, t.word) * t.coeff;
  return out;
}

Element apply_morphism(const PresentationMorphism& m, const Element& x) {
  Element out(*m.target);
  for (const auto& [key, c] : x.terms()) out += apply_morphism(m, names_of(key_to_word(x.algebra(), key))) * c;
  return out;
}

std::vector<Generator> key_to_word(const Algebra& alg, const TermKey& key) {
  std::vector<Generator> out;
  for (int j : key.f) out.push_back({GenKind::F, j});
  const int n = alg.n();
  for (std::size_t k = 0; k < key.t.size(); ++k) {
    const int e = key.t[k];
    if (e == 0) continue;
    Generator g{};
    const int pos = static_cast<int>(k);
    if (alg.kind() == Kind::gl) {
      g = pos < n ? Generator{e > 0 ? GenKind::A : GenKind::Ainv, pos + 1}
                  : Generator{e > 0 ? GenKind::B : GenKind::Binv, pos - n + 1};
    } else {
      g = pos < n - 1 ? Generator{e > 0 ? GenKind::W : GenKind::Winv, pos + 1}
                      : Generator{e > 0 ? GenKind::Wp : GenKind::Wpinv, pos - n + 2};
    }
    for (int c = 0; c < (e > 0 ? e : -e); ++c) out.push_back(g);
  }
  for (int j : key.e) out.push_back({GenKind::E, j});
  return out;
}

SourcePresentation presentation_of(const Algebra& alg) {
  SourcePresentation p;
  p.name = alg.describe();
  for (const auto& g : alg.generators()) {
    p.generators.push_back(to_string(g));
    if (alg.is_torus(g)) {
      const TorusExp t = alg.torus_of(g);
      TorusExp neg = t;
      for (int& x : neg) x = -x;
      p.inverse_of[to_string(g)] = word_text(names_of(key_to_word(alg, TermKey{{}, neg, {}})));
    }
    std::vector<SourceCoproductTerm> terms;
    const Tensor d = coproduct(Element::gen(alg, g));
    for (const auto& [key, c] : d.terms())
      terms.push_back({c, names_of(key_to_word(alg, key[0])), names_of(key_to_word(alg, key[1]))});
    p.coproducts[to_string(g)] = std::move(terms);
  }
  for (const auto& rel : alg.defining_relations()) {
    SourceRelation r{rel.name, {}, rel.serre};
    for (const auto& t : rel.expr) r.expr.push_back({t.coeff, names_of(t.word)});
    p.relations.push_back(std::move(r));
  }
  return p;
}

SourcePresentation multiparameter_presentation(int n, const Params& params) {
  if (n < 2) throw Error("n must be at least 2");
  const Scalar& r = params.r;
  const Scalar& s = params.s;
  SourcePresentation p;
  p.name = "multiparameter n=" + std::to_string(n);
  std::vector<std::string> torus;
  for (int i = 1; i < n; ++i) {
    p.generators.push_back(idx("E", i));
    p.generators.push_back(idx("F", i));
  }
  for (int i = 1; i <= n; ++i)
    for (const std::string base : {"K", "L"}) {
      const std::string g = idx(base, i);
      for (const std::string& h : {g, inv(g)}) {
        p.generators.push_back(h);
        torus.push_back(h);
      }
      p.inverse_of[g] = inv(g);
      p.inverse_of[inv(g)] = g;
    }

  // Group-likes commute; inverse pairs multiply to 1.
  for (std::size_t a = 0; a < torus.size(); ++a)
    for (std::size_t b = a + 1; b < torus.size(); ++b) {
      if (p.inverse_of[torus[a]] == torus[b]) continue;
      p.relations.push_back({"group-likes commute " + torus[a] + " " + torus[b],
                             {{Scalar(1), {torus[a], torus[b]}}, {Scalar(-1), {torus[b], torus[a]}}}});
    }
  for (const auto& g : torus)
    p.relations.push_back({g + " " + p.inverse_of[g] + " = 1", {{Scalar(1), {g, p.inverse_of[g]}}, {Scalar(-1), {}}}});

  for (int j = 1; j <= n; ++j)
    for (int i = 1; i < n; ++i) {
      const std::string K = idx("K", j), L = idx("L", j), E = idx("E", i), F = idx("F", i);
      p.relations.push_back({K + " " + E, {{1, {K, E}}, {-r.pow(-delta(i, j)) * s.pow(-delta(i, j - 1)), {E, K}}}});
      p.relations.push_back({K + " " + F, {{1, {K, F}}, {-r.pow(delta(i, j)) * s.pow(delta(i, j - 1)), {F, K}}}});
      p.relations.push_back({L + " " + E, {{1, {L, E}}, {-r.pow(delta(i, j - 1)) * s.pow(delta(i, j)), {E, L}}}});
      p.relations.push_back({L + " " + F, {{1, {L, F}}, {-r.pow(-delta(i, j - 1)) * s.pow(-delta(i, j)), {F, L}}}});
    }

  const Scalar lam_inv = r.inverse() * s;
  for (int i = 1; i < n; ++i) {
    const std::string E = idx("E", i), F = idx("F", i);
    const SourceWord group = {idx("L", i + 1), idx("K", i + 1), inv(idx("L", i)), inv(idx("K", i))};
    p.relations.push_back({E + " " + F + " commutator",
                           {{1, {E, F}},
                            {-lam_inv, {F, E}},
                            {-(lam_inv - Scalar(1)), group},
                            {lam_inv - Scalar(1), {}}}});
    for (int j = 1; j < n; ++j) {
      if (j == i) continue;
      const std::string Fj = idx("F", j);
      p.relations.push_back({E + " " + Fj, {{1, {E, Fj}}, {-r.pow(delta(i, j + 1)) * s.pow(-delta(i, j - 1)), {Fj, E}}}});
    }
  }

  // ad(X_i)(y) = X_i y - G y G^-1 X_i with G the group-like in Delta(X_i).
  auto ad = [&](const std::string& x, const SourceWord& g, const SourceWord& g_inv, const SourceExpr& y) {
    return concat(sandwich({x}, y, {}, Scalar(1)), sandwich(g, y, [&] {
                    SourceWord w = g_inv;
                    w.push_back(x);
                    return w;
                  }(), Scalar(-1)));
  };
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (i == j) continue;
      const int power = (i - j == 1 || j - i == 1) ? 2 : 1;
      const SourceWord gl = {idx("L", i + 1), inv(idx("L", i))}, gl_inv = {idx("L", i), inv(idx("L", i + 1))};
      const SourceWord gk = {idx("K", i + 1), inv(idx("K", i))}, gk_inv = {idx("K", i), inv(idx("K", i + 1))};
      SourceExpr ye = {{1, {idx("E", j)}}}, yf = {{1, {idx("F", j)}}};
      for (int k = 0; k < power; ++k) {
        ye = ad(idx("E", i), gl, gl_inv, ye);
        yf = ad(idx("F", i), gk, gk_inv, yf);
      }
      const std::string tag = std::to_string(i) + " " + std::to_string(j);
      p.relations.push_back({"adjoint Serre E" + tag, ye, true});
      p.relations.push_back({"adjoint Serre F" + tag, yf, true});
    }

  for (const auto& g : torus) p.coproducts[g] = {{Scalar(1), {g}, {g}}};
  for (int i = 1; i < n; ++i) {
    p.coproducts[idx("E", i)] = {{Scalar(1), {idx("E", i)}, {}},
                                 {Scalar(1), {idx("L", i + 1), inv(idx("L", i))}, {idx("E", i)}}};
    p.coproducts[idx("F", i)] = {{Scalar(1), {idx("F", i)}, {}},
                                 {Scalar(1), {idx("K", i + 1), inv(idx("K", i))}, {idx("F", i)}}};
  }
  return p;
}

PresentationMorphism multiparameter_map(const Algebra& gl) {
  if (gl.kind() != Kind::gl) throw Error("the multiparameter map lands in the gl algebra");
  const int n = gl.n();
  const Scalar& r = gl.params().r;
  const Scalar& s = gl.params().s;
  PresentationMorphism m;
  m.name = "phi";
  m.target = &gl;
  auto torus_pair = [&](const std::string& g, TorusExp t) {
    m.images.emplace(g, Element::torus(gl, t));
    for (int& x : t) x = -x;
    m.images.emplace(inv(g), Element::torus(gl, t));
  };
  for (int i = 1; i <= n; ++i) {
    TorusExp L = gl.zero_torus(), K = gl.zero_torus();
    for (int k = 1; k < i; ++k) {
      L[static_cast<std::size_t>(k - 1)] += 1;      // a_k
      K[static_cast<std::size_t>(n + k - 1)] -= 1;  // b_k^-1
    }
    for (int k = i + 1; k <= n; ++k) {
      L[static_cast<std::size_t>(n + k - 1)] -= 1;  // b_k^-1
      K[static_cast<std::size_t>(k - 1)] += 1;      // a_k
    }
    torus_pair(idx("L", i), L);
    torus_pair(idx("K", i), K);
  }
  for (int i = 1; i < n; ++i) {
    m.images.emplace(idx("E", i), Element::e(gl, i) * (-(s.inverse()) * (r - s).pow(2)));
    TorusExp wp = gl.omega_prime(i);
    for (int& x : wp) x = -x;
    m.images.emplace(idx("F", i), Element::torus(gl, wp) * Element::f(gl, i));
  }
  return m;
}

PresentationMorphism rank_one_map(const Algebra& source, const Algebra& target) {
  if (source.n() != 2 || target.n() != 2 || source.kind() != Kind::sl || target.kind() != Kind::sl)
    throw Error("the rank-one map is defined between sl_2 algebras");
  const Params& a = source.params();
  const Params& b = target.params();
  if (!(a.r * b.s == b.r * a.s)) throw Error("the rank-one map needs r s^-1 = r' s'^-1");
  PresentationMorphism m;
  m.name = "rank-one";
  m.target = &target;
  for (const auto& g : target.generators()) {
    Element x = Element::gen(target, g);
    if (g.kind == GenKind::F) x *= a.r.inverse() * b.r;
    m.images.emplace(to_string(g), std::move(x));
  }
  return m;
}

void check_morphism(Report& report, const SourcePresentation& source, const PresentationMorphism& m,
                    const PairingContext* ctx) {
  int missing = 0;
  for (const auto& g : source.generators) missing += m.images.count(g) ? 0 : 1;
  report.add("image table covers every generator", missing == 0, std::to_string(missing) + " generators without image");
  if (missing) return;
  for (const auto& rel : source.relations) {
    Element res = apply_morphism(m, rel.expr);
    if (rel.serre && ctx) res = ctx->reduce(res);
    report.add("relation " + rel.name, res.is_zero(), res.to_string());
  }
  for (const auto& [g, h] : source.inverse_of) {
    const Element res = apply_morphism(m, SourceWord{g, h}) - Element::one(*m.target);
    report.add("image of " + g + " is invertible", res.is_zero(), res.to_string());
  }
  for (const auto& [g, terms] : source.coproducts) {
    Tensor rhs(*m.target, 2);
    for (const auto& t : terms)
      rhs += Tensor::product_of({apply_morphism(m, t.left), apply_morphism(m, t.right)}) * t.coeff;
    const Tensor d = coproduct(image_of(m, g)) - rhs;
    report.add("coproduct of " + g, d.is_zero(), d.to_string());
  }
}

namespace {

void sl2_point(Report& report, const mpq_class& r0, const mpq_class& s0, const mpq_class& t0, bool prefix) {
  Algebra source(2, Kind::sl, Params::numeric(r0, s0));
  Algebra target(2, Kind::sl, Params::numeric(mpq_class(r0 * t0), mpq_class(s0 * t0)));
  const PresentationMorphism m = rank_one_map(source, target);
  Report local;
  check_morphism(local, presentation_of(source), m, nullptr);
  const std::string at = "(r,s,t)=(" + r0.get_str() + "," + s0.get_str() + "," + t0.get_str() + ") ";
  for (auto& e : local.entries) report.entries.push_back({(prefix ? at : "") + e.label, e.pass, e.residual});
}

}  // namespace

Report sl2_iso_check_at(const mpq_class& r0, const mpq_class& s0, const mpq_class& t0) {
  Report report;
  report.command = "iso-check";
  report.config = {{"which", "sl2"}, {"r", r0.get_str()}, {"s", s0.get_str()}, {"t", t0.get_str()}};
  sl2_point(report, r0, s0, t0, false);
  return report;
}

Report sl2_iso_check(int count, unsigned long long seed) {
  Report report;
  report.command = "iso-check";
  report.config = {{"which", "sl2"}, {"random_points", std::to_string(count)}, {"seed", std::to_string(seed)},
                   {"grid", "r in {2,3,5}, s in {7,11,13}, t in {-5,1/3,2}"}};
  for (const mpq_class& r0 : {mpq_class(2), mpq_class(3), mpq_class(5)})
    for (const mpq_class& s0 : {mpq_class(7), mpq_class(11), mpq_class(13)})
      for (const mpq_class& t0 : {mpq_class(-5), mpq_class(1, 3), mpq_class(2)}) sl2_point(report, r0, s0, t0, true);
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    mpq_class q(1 + static_cast<long>(rng() % 23), 1 + static_cast<long>(rng() % 7));
    q.canonicalize();
    return (rng() & 1) ? mpq_class(-q) : q;
  };
  for (int k = 0; k < count;) {
    const mpq_class r0 = draw(), s0 = draw(), t0 = draw();
    if (r0 == s0) continue;
    sl2_point(report, r0, s0, t0, true);
    ++k;
  }
  return report;
}

std::vector<mpq_class> image_grading(const Algebra& gl, const PresentationMorphism& m) {
  // Rows: torus exponents that must have degree 0.
  std::vector<std::vector<mpq_class>> rows;
  auto add_row = [&](const TorusExp& t) { rows.emplace_back(t.begin(), t.end()); };
  for (int j = 1; j < gl.n(); ++j) {
    add_row(gl.omega(j));
    add_row(gl.omega_prime(j));
  }
  for (const auto& [g, x] : m.images)
    for (const auto& [key, c] : x.terms()) add_row(key.t);
  // Reduced row echelon form; the kernel is spanned by one vector per free
  // column.
  const std::size_t cols = static_cast<std::size_t>(gl.torus_size());
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const mpq_class lead = rows[rank][c];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == rank || rows[q][c] == 0) continue;
      const mpq_class f = rows[q][c];
      for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[rank][k];
    }
    pivot_of_col[c] = static_cast<int>(rank++);
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -rows[static_cast<std::size_t>(pivot_of_col[c])][free];
    if (v[0] != 0) {
      const mpq_class a = v[0];
      for (auto& x : v) x /= a;
      return v;
    }
  }
  return {};
}

Report chm_relation_transport(int n) {
  Algebra gl(n, Kind::gl);
  PairingContext ctx(gl);
  Report report;
  report.command = "iso-check";
  report.config = {{"which", "chm"}, {"n", std::to_string(n)}, {"params", gl.params().describe()}};
  const SourcePresentation source = multiparameter_presentation(n, gl.params());
  const PresentationMorphism phi = multiparameter_map(gl);
  check_morphism(report, source, phi, &ctx);

  for (int i = 1; i < n; ++i) {
    const std::string is = std::to_string(i), js = std::to_string(i + 1);
    const Element w = apply_morphism(phi, SourceWord{inv("L" + is), "L" + js}) - Element::torus(gl, gl.omega(i));
    report.add("w" + is + " = phi(L" + is + "^-1 L" + js + ")", w.is_zero(), w.to_string());
    const Element wp =
        apply_morphism(phi, SourceWord{"K" + is, inv("K" + js)}) - Element::torus(gl, gl.omega_prime(i));
    report.add("w'" + is + " = phi(K" + is + " K" + js + "^-1)", wp.is_zero(), wp.to_string());
  }

  const Scalar& r = gl.params().r;
  const Scalar& s = gl.params().s;
  if (n == 2) {
    // Explicit preimages of the generators of U_{r,s}(gl_2).
    const std::vector<std::pair<std::string, SourceExpr>> pre = {
        {"e1", {{-s * (r - s).pow(-2), {"E1"}}}},
        {"f1", {{1, {"K1", inv("K2"), "F1"}}}},
        {"a1", {{1, {"L2"}}}},
        {"a1^-1", {{1, {inv("L2")}}}},
        {"a2", {{1, {"K1"}}}},
        {"a2^-1", {{1, {inv("K1")}}}},
        {"b1", {{1, {inv("K2")}}}},
        {"b1^-1", {{1, {"K2"}}}},
        {"b2", {{1, {inv("L1")}}}},
        {"b2^-1", {{1, {"L1"}}}},
    };
    int covered = 0;
    for (const auto& g : gl.generators()) {
      for (const auto& [name, expr] : pre) {
        if (name != to_string(g)) continue;
        const Element d = apply_morphism(phi, expr) - Element::gen(gl, g);
        report.add(name + " lies in the image", d.is_zero(), d.to_string());
        ++covered;
      }
    }
    report.add("every generator has a preimage", covered == static_cast<int>(gl.generators().size()),
               std::to_string(covered) + " of " + std::to_string(gl.generators().size()));
  } else {
    const std::vector<mpq_class> ell = image_grading(gl, phi);
    std::string text;
    for (const auto& x : ell) text += (text.empty() ? "" : ",") + x.get_str();
    report.add("torus grading vanishing on the image with a1 of degree 1", !ell.empty(), "none exists");
    if (!ell.empty()) {
      auto degree = [&](const std::vector<Generator>& word) {
        mpq_class d = 0;
        for (const auto& g : word)
          if (gl.is_torus(g)) {
            const TorusExp t = gl.torus_of(g);
            for (std::size_t k = 0; k < t.size(); ++k) d += ell[k] * t[k];
          }
        return d;
      };
      int inhomogeneous = 0;
      for (const auto& rel : gl.defining_relations()) {
        if (rel.expr.empty()) continue;
        const mpq_class d0 = degree(rel.expr.front().word);
        for (const auto& t : rel.expr) inhomogeneous += degree(t.word) == d0 ? 0 : 1;
      }
      report.add("grading (" + text + ") is compatible with every defining relation", inhomogeneous == 0,
                 std::to_string(inhomogeneous) + " inhomogeneous terms");
      int nonzero = 0;
      for (const auto& [g, x] : phi.images)
        for (const auto& [key, c] : x.terms()) nonzero += degree(key_to_word(gl, key)) == 0 ? 0 : 1;
      report.add("every image term has degree 0", nonzero == 0, std::to_string(nonzero) + " terms");
      report.add("a1 has degree 1, so it is not in the image", degree({{GenKind::A, 1}}) == 1, "degree differs");
    }
  }
  return report;
}

}  // namespace qgr
