#include <deque>

#include "doctest.h"
#include "qgr/presentation.hpp"
#include "test_support.hpp"

using namespace qgr;

namespace {

int ip(int i, int j, int n) {  // <eps_i, alpha_j>, alpha_n = eps_n
  if (j == n) return i == n;
  return (i == j) - (i == j + 1);
}

// t e_i = c e_i t for a single torus generator t (inverse kinds give 1/c).
Scalar torus_e_factor(const Algebra& alg, const Generator& t, int i) {
  const int n = alg.n();
  const Scalar r = alg.params().r, s = alg.params().s;
  auto pw = [](const Scalar& x, int k) { return x.pow(k); };
  switch (t.kind) {
    case GenKind::A: return pw(r, ip(t.index, i, n));
    case GenKind::Ainv: return pw(r, -ip(t.index, i, n));
    case GenKind::B: return pw(s, ip(t.index, i, n));
    case GenKind::Binv: return pw(s, -ip(t.index, i, n));
    case GenKind::W: return pw(r, ip(t.index, i, n)) * pw(s, ip(t.index + 1, i, n));
    case GenKind::Winv: return pw(r, -ip(t.index, i, n)) * pw(s, -ip(t.index + 1, i, n));
    case GenKind::Wp: return pw(r, ip(t.index + 1, i, n)) * pw(s, ip(t.index, i, n));
    case GenKind::Wpinv: return pw(r, -ip(t.index + 1, i, n)) * pw(s, -ip(t.index, i, n));
    default: break;
  }
  FAIL("not a torus generator");
  return Scalar(0);
}

int rank_of(const Generator& g) {
  if (g.kind == GenKind::F) return 0;
  if (g.kind == GenKind::E) return 2;
  return 1;
}

// Straightening by repeated local rewriting of the leftmost out-of-order
// adjacent pair; independent of the library's right-multiplication scheme.
Element oracle_normal_form(const Algebra& alg, const RawExpr& expr) {
  const int n = alg.n();
  std::deque<RawTerm> work(expr.begin(), expr.end());
  Element out(alg);
  while (!work.empty()) {
    RawTerm t = work.front();
    work.pop_front();
    if (t.coeff.is_zero()) continue;
    std::size_t p = 0;
    for (; p + 1 < t.word.size(); ++p)
      if (rank_of(t.word[p]) > rank_of(t.word[p + 1])) break;
    if (p + 1 >= t.word.size()) {
      TermKey key{{}, alg.zero_torus(), {}};
      for (const auto& g : t.word) {
        if (g.kind == GenKind::F) key.f.push_back(g.index);
        else if (g.kind == GenKind::E) key.e.push_back(g.index);
        else {
          const auto te = alg.torus_of(g);
          for (std::size_t k = 0; k < te.size(); ++k) key.t[k] += te[k];
        }
      }
      out.add_term(key, t.coeff);
      continue;
    }
    const Generator x = t.word[p], y = t.word[p + 1];
    std::vector<Generator> pre(t.word.begin(), t.word.begin() + static_cast<long>(p));
    std::vector<Generator> post(t.word.begin() + static_cast<long>(p) + 2, t.word.end());
    auto with = [&](std::vector<Generator> mid) {
      std::vector<Generator> w = pre;
      w.insert(w.end(), mid.begin(), mid.end());
      w.insert(w.end(), post.begin(), post.end());
      return w;
    };
    if (x.kind == GenKind::E && y.kind == GenKind::F) {
      work.push_back({t.coeff, with({y, x})});
      if (x.index == y.index) {
        const int i = x.index;
        const Scalar c = t.coeff / (alg.params().r - alg.params().s);
        std::vector<Generator> K, Kp;
        if (alg.kind() == Kind::gl) {
          K = {{GenKind::A, i}, {GenKind::B, i + 1}};
          Kp = {{GenKind::A, i + 1}, {GenKind::B, i}};
        } else {
          K = {{GenKind::W, i}};
          Kp = {{GenKind::Wp, i}};
        }
        work.push_back({c, with(K)});
        work.push_back({-c, with(Kp)});
      }
    } else if (x.kind == GenKind::E) {
      // e_i t = c^{-1} t e_i
      work.push_back({t.coeff / torus_e_factor(alg, y, x.index), with({y, x})});
    } else {
      // t f_j = c^{-1} f_j t
      (void)n;
      work.push_back({t.coeff / torus_e_factor(alg, x, y.index), with({y, x})});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("building algebras") {
  CHECK_THROWS_AS(build_algebra(1, Kind::sl), Error);
  auto sl2 = build_algebra(2, Kind::sl);
  CHECK(sl2->generators().size() == 6);
  auto gl3 = build_algebra(3, Kind::gl);
  int es = 0, fs = 0, torus = 0;
  for (const auto& g : gl3->generators()) {
    if (g.kind == GenKind::E) ++es;
    else if (g.kind == GenKind::F) ++fs;
    else ++torus;
  }
  CHECK(es == 2);
  CHECK(fs == 2);
  CHECK(torus == 12);
}

TEST_CASE("straightening examples") {
  const Scalar r = Scalar::r(), s = Scalar::s();
  Algebra gl3(3, Kind::gl);
  const Generator a1{GenKind::A, 1}, e1{GenKind::E, 1}, f2{GenKind::F, 2};
  CHECK(word_element(gl3, {a1, e1}) == word_element(gl3, {e1, a1}) * r);
  CHECK(word_element(gl3, {e1, f2}) == word_element(gl3, {f2, e1}));
  CHECK(word_element(gl3, {a1, {GenKind::Ainv, 1}}) == Element::one(gl3));

  Algebra sl2(2, Kind::sl);
  const Generator e{GenKind::E, 1}, f{GenKind::F, 1}, w{GenKind::W, 1}, wp{GenKind::Wp, 1};
  const Element comm = normal_form(sl2, {{1, {e, f}}, {-1, {f, e}}});
  CHECK(comm == (Element::gen(sl2, w) - Element::gen(sl2, wp)) * (r - s).inverse());
  CHECK(word_element(sl2, {w, e}) == word_element(sl2, {e, w}) * (r / s));

  const Element ef = Element::e(gl3, 1) * Element::f(gl3, 1) - Element::f(gl3, 1) * Element::e(gl3, 1);
  const Element k = word_element(gl3, {{GenKind::A, 1}, {GenKind::B, 2}}) - word_element(gl3, {{GenKind::A, 2}, {GenKind::B, 1}});
  CHECK(ef == k * (r - s).inverse());
  CHECK(Element::one(gl3) * ef == ef);
}

TEST_CASE("text form") {
  Algebra sl2(2, Kind::sl);
  const Element x = Element::f(sl2, 1) * Element::gen(sl2, {GenKind::W, 1}) * Element::e(sl2, 1);
  CHECK(x.to_string() == "(1) * f[1] * t[1 0] * e[1]");
  CHECK(Element(sl2).to_string() == "0");
  CHECK(Element::one(sl2).to_string() == "(1)");
}

TEST_CASE("defining relations: straightening kills the non-cubic ones") {
  for (int n : {2, 3, 4}) {
    for (Kind kind : {Kind::gl, Kind::sl}) {
      Algebra alg(n, kind);
      int serre = 0;
      for (const auto& [rel, res] : relation_residuals(alg)) {
        if (rel.serre) {
          ++serre;
          CHECK_MESSAGE(!res.is_zero(), rel.name);
        } else {
          CHECK_MESSAGE(res.is_zero(), rel.name);
        }
      }
      // far commutations (two sides) plus four cubic relations per adjacent pair
      CHECK(serre == (n - 2) * (n - 3) + 4 * (n - 2));
    }
  }
  Algebra gl3(3, Kind::gl);
  for (const auto& [rel, res] : relation_residuals(gl3))
    if (rel.name == "cubic e 1,2 first") CHECK(res.size() == 3);
}

TEST_CASE("straightening agrees with a local rewriting oracle") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    for (Kind kind : {Kind::gl, Kind::sl}) {
      Algebra alg(n, kind);
      for (int trial = 0; trial < 40; ++trial) {
        const RawExpr x = testing::random_raw(rng, alg, 6);
        CHECK(normal_form(alg, x) == oracle_normal_form(alg, x));
      }
    }
  }
}

TEST_CASE("associativity and confluence on random words") {
  std::mt19937_64 rng(12);
  Algebra alg(3, Kind::gl);
  for (int trial = 0; trial < 30; ++trial) {
    const RawExpr x = testing::random_raw(rng, alg, 6), y = testing::random_raw(rng, alg, 6);
    RawExpr xy;
    for (const auto& a : x)
      for (const auto& b : y) {
        std::vector<Generator> w = a.word;
        w.insert(w.end(), b.word.begin(), b.word.end());
        xy.push_back({a.coeff * b.coeff, w});
      }
    CHECK(normal_form(alg, x) * normal_form(alg, y) == normal_form(alg, xy));
    const Element z = testing::random_element(rng, alg, 3);
    const Element X = normal_form(alg, x), Y = normal_form(alg, y);
    CHECK((X * Y) * z == X * (Y * z));
  }
}

TEST_CASE("torus conjugation closed form") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 4}) {
    for (Kind kind : {Kind::gl, Kind::sl}) {
      Algebra alg(n, kind);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> zeta(n - 1);
        for (int& z : zeta) z = testing::uniform(rng, -3, 3);
        auto pairing = [&](int i) {  // <eps_i, zeta>
          int acc = 0;
          for (int j = 1; j < n; ++j) acc += zeta[j - 1] * ip(i, j, n);
          return acc;
        };
        const Element w = Element::torus(alg, alg.omega_of(zeta, false));
        const Element wp = Element::torus(alg, alg.omega_of(zeta, true));
        for (int i = 1; i < n; ++i) {
          const Element e = Element::e(alg, i), f = Element::f(alg, i);
          const Params& P = alg.params();
          CHECK(w * e == e * w * P.rs(-pairing(i + 1), -pairing(i)));
          CHECK(w * f == f * w * P.rs(pairing(i + 1), pairing(i)));
          CHECK(wp * e == e * wp * P.rs(-pairing(i), -pairing(i + 1)));
          CHECK(wp * f == f * wp * P.rs(pairing(i), pairing(i + 1)));
        }
      }
    }
  }
}

TEST_CASE("the sl relations hold for the gl images of w_j, w'_j") {
  for (int n : {2, 3, 4}) {
    Algebra sl(n, Kind::sl), gl(n, Kind::gl);
    auto image = [&](const Generator& g) -> std::vector<Generator> {
      switch (g.kind) {
        case GenKind::W: return {{GenKind::A, g.index}, {GenKind::B, g.index + 1}};
        case GenKind::Winv: return {{GenKind::Ainv, g.index}, {GenKind::Binv, g.index + 1}};
        case GenKind::Wp: return {{GenKind::A, g.index + 1}, {GenKind::B, g.index}};
        case GenKind::Wpinv: return {{GenKind::Ainv, g.index + 1}, {GenKind::Binv, g.index}};
        default: return {g};
      }
    };
    for (const auto& rel : sl.defining_relations()) {
      RawExpr mapped;
      for (const auto& t : rel.expr) {
        std::vector<Generator> w;
        for (const auto& g : t.word) {
          const auto im = image(g);
          w.insert(w.end(), im.begin(), im.end());
        }
        mapped.push_back({t.coeff, w});
      }
      if (!rel.serre) CHECK_MESSAGE(normal_form(gl, mapped).is_zero(), rel.name);
    }
  }
}

TEST_CASE("omega_lambda") {
  Algebra gl2(2, Kind::gl);
  CHECK(omega_lambda(gl2, {1, 0}, false) == Element::torus(gl2, gl2.omega(1)));
  CHECK(omega_lambda(gl2, {0, 0}, false) == Element::one(gl2));
  // eps_1 = alpha_1 + alpha_2
  CHECK(omega_lambda(gl2, {1, 1}, false) == Element::torus(gl2, gl2.omega(1)) * Element::gen(gl2, {GenKind::A, 2}));
  CHECK(omega_lambda(gl2, {1, 1}, true) == Element::torus(gl2, gl2.omega_prime(1)) * Element::gen(gl2, {GenKind::B, 2}));
  Algebra sl2(2, Kind::sl);
  CHECK_THROWS_AS(omega_lambda(sl2, {1, 1}, false), Error);
}
