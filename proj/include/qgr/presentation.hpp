// Type A root data and the triangular normal form F-word * torus * E-word for
// the two-parameter algebras U_{r,s}(gl_n) and U_{r,s}(sl_n).
#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qgr/scalar.hpp"

namespace qgr {

enum class Kind { gl, sl };

std::string to_string(Kind kind);
Kind parse_kind(const std::string& text);

/// Values of the structure parameters. Symbolic parameters use r = u^2,
/// s = v^2 in Q(u, v); the other constructors put rational numbers in their
/// place so that the same code can be rerun at a point.
struct Params {
  Scalar r;
  Scalar s;
  /// Square roots u, v of r, s when known (needed for half powers of r/s).
  bool has_roots = false;
  Scalar u;
  Scalar v;
  bool symbolic = false;

  static Params generic();
  /// r = u0^2, s = v0^2.
  static Params at(const mpq_class& u0, const mpq_class& v0);
  /// Arbitrary nonzero rationals r != s without square roots.
  static Params numeric(const mpq_class& r0, const mpq_class& s0);

  /// r^x s^y.
  Scalar rs(int x, int y) const;
  /// (r s^-1)^(k/2); requires has_roots.
  Scalar half_power(long k) const;
  std::string describe() const;
};

/// `count` points (u0, v0) drawn from a seeded generator, with small
/// numerators and denominators and u0^2 != v0^2.
std::vector<Params> seeded_points(int count, unsigned long long seed);

/// Index words; letters are root indices 1..n-1.
using Word = std::vector<int>;
/// Exponent vector over the torus generators: [a_1..a_n, b_1..b_n] for gl,
/// [w_1..w_{n-1}, w'_1..w'_{n-1}] for sl.
using TorusExp = std::vector<int>;

enum class GenKind { E, F, A, Ainv, B, Binv, W, Winv, Wp, Wpinv };

struct Generator {
  GenKind kind;
  int index;
  friend bool operator==(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

/// Key of a normal-form monomial f-word * torus * e-word.
struct TermKey {
  Word f;
  TorusExp t;
  Word e;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Fixed total order: f-word length then lex, torus lex, e-word length then
/// lex.
bool operator<(const TermKey& x, const TermKey& y);

/// Linear combination of words in the generators, before normal ordering.
struct RawTerm {
  Scalar coeff;
  std::vector<Generator> word;
};
using RawExpr = std::vector<RawTerm>;

/// One defining relation, written as an expression equal to zero.
struct Relation {
  std::string name;
  RawExpr expr;
  /// Serre-type relations are not killed by straightening; they vanish in
  /// the quotient by the pairing radical.
  bool serre = false;
};

class Algebra {
 public:
  Algebra(int n, Kind kind, Params params = Params::generic());

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  const Params& params() const { return params_; }
  int rank() const { return n_ - 1; }
  int torus_size() const { return kind_ == Kind::gl ? 2 * n_ : 2 * (n_ - 1); }

  TorusExp zero_torus() const { return TorusExp(torus_size(), 0); }
  /// w_j (gl: a_j b_{j+1}) and w'_j (gl: a_{j+1} b_j).
  TorusExp omega(int j) const;
  TorusExp omega_prime(int j) const;
  /// w_zeta = prod w_j^{zeta_j}, zeta in alpha-coordinates of length n-1.
  TorusExp omega_of(const std::vector<int>& zeta, bool primed) const;
  /// Exponent vector of a torus generator.
  TorusExp torus_of(const Generator& g) const;
  bool is_torus(const Generator& g) const;

  /// Exponents (x, y) with T e_j = r^x s^y e_j T.
  std::pair<int, int> chi_exponents(const TorusExp& t, int j) const;
  /// Same for the product over the letters of an e-word.
  std::pair<int, int> chi_exponents(const TorusExp& t, const Word& w) const;
  Scalar chi(const TorusExp& t, int j) const;

  /// 1/(r - s).
  const Scalar& inv_r_minus_s() const { return inv_r_minus_s_; }

  std::vector<Generator> generators() const;
  std::vector<Relation> defining_relations() const;

  std::string describe() const;

 private:
  int n_;
  Kind kind_;
  Params params_;
  Scalar inv_r_minus_s_;
  // chi exponents of each torus coordinate against each e_j.
  std::vector<std::vector<int>> chi_r_, chi_s_;
};

/// Checks n >= 2 and builds the algebra.
std::shared_ptr<const Algebra> build_algebra(int n, Kind kind, Params params = Params::generic());

/// <eps_i, alpha_j> with alpha_n = eps_n; indices are 1-based.
int eps_alpha(int i, int j, int n);

class Element {
 public:
  using Terms = std::map<TermKey, Scalar>;

  explicit Element(const Algebra& alg) : alg_(&alg) {}
  Element(const Algebra& alg, TermKey key, const Scalar& c);

  static Element one(const Algebra& alg) { return scalar(alg, Scalar(1)); }
  static Element scalar(const Algebra& alg, const Scalar& c);
  static Element e(const Algebra& alg, int i);
  static Element f(const Algebra& alg, int i);
  static Element torus(const Algebra& alg, const TorusExp& t);
  static Element gen(const Algebra& alg, const Generator& g);

  const Algebra& algebra() const { return *alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const TermKey& key, const Scalar& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  Element operator-() const;
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(Element x, const Scalar& c) { return x *= c; }
  friend Element operator*(const Scalar& c, Element x) { return x *= c; }
  friend Element operator*(const Element& x, const Element& y);
  friend bool operator==(const Element& x, const Element& y);

  /// Applies a scalar map to every coefficient (used for specialization).
  template <typename Fn>
  Element map_coefficients(Fn&& fn) const {
    Element out(*alg_);
    for (const auto& [k, c] : terms_) out.add_term(k, fn(c));
    return out;
  }

  std::string to_string() const;

 private:
  void check_same(const Element& o) const;

  const Algebra* alg_;
  Terms terms_;
};

/// Text of a single normal-form key: "f[..] * t[..] * e[..]" with empty parts
/// omitted; "1" for the unit key.
std::string key_to_string(const TermKey& key);

/// Normal form of a key-by-key product.
Element multiply_keys(const Algebra& alg, const TermKey& x, const TermKey& y);

Element normal_form(const Algebra& alg, const RawExpr& expr);
Element word_element(const Algebra& alg, const std::vector<Generator>& word);

/// Each defining relation normal-formed.
std::vector<std::pair<Relation, Element>> relation_residuals(const Algebra& alg);

/// w_lambda (or w'_lambda) for lambda in alpha-coordinates of length n with
/// alpha_n = eps_n: prod w_j^{lambda_j} * a_n^{lambda_n} (b_n when primed).
Element omega_lambda(const Algebra& alg, const std::vector<int>& lambda_alpha, bool primed);

}  // namespace qgr
