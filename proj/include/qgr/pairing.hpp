// The Hopf pairing between the lower and upper Borel parts, the p-maps, the
// f-form, and graded bases of U^+_zeta / U^-_{-zeta} modulo the radical of
// the pairing.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qgr/hopf.hpp"
#include "qgr/matrix.hpp"
#include "qgr/presentation.hpp"

namespace qgr {

/// Element of Q^+ in alpha-coordinates (length n-1).
using Content = std::vector<int>;
/// Linear combination of raw words.
using WordCombo = std::map<Word, Scalar>;

Content content_of(const Word& w, int n);
int height(const Content& zeta);
/// All words of the given content, sorted (lexicographically).
std::vector<Word> words_of_content(const Content& zeta);
/// All zeta in Q^+ with height between lo and hi, in a fixed order.
std::vector<Content> contents_up_to(int n, int max_height, int min_height = 0);
/// <eps_k, zeta> for zeta in alpha-coordinates.
int eps_dot(int k, const Content& zeta);

/// Recursion used to evaluate (F-word, E-word).
enum class PairingRoute {
  peel_left_f,   // (f_i y, x) = (s-r)^-1 (y, p'_i(x))
  peel_right_f,  // (y f_i, x) = (s-r)^-1 (y, p_i(x))
  peel_left_e,   // (y, e_i x) = (s-r)^-1 (p_i(y), x)
  peel_right_e,  // (y, x e_i) = (s-r)^-1 (p'_i(y), x)
};

struct GradedBasis {
  Content zeta;
  std::vector<Word> e_words;
  std::vector<Word> f_words;
  /// gram[a][b] = (f_words[a], e_words[b]).
  Matrix gram;
  int rank = 0;
  /// Representative indices into e_words / f_words.
  std::vector<int> e_reps;
  std::vector<int> f_reps;
  /// Inverse of gram restricted to (f_reps, e_reps).
  Matrix inverse;
  std::map<Word, int> e_index;
  std::map<Word, int> f_index;
};

/// Biorthogonal bases: (v[j], u[k]) = delta_{jk}.
struct DualPair {
  Content zeta;
  std::vector<Element> u;
  std::vector<Element> v;
};

class PairingContext {
 public:
  explicit PairingContext(const Algebra& alg, int height_cutoff = 8);

  const Algebra& algebra() const { return alg_; }
  int height_cutoff() const { return cutoff_; }

  /// Values on generators of the two Borel parts; W / Wp kinds stand for
  /// w_j / w'_j in either kind of algebra, B(n) for b_n and A(n) for a_n.
  Scalar pair_generators(const Generator& y, const Generator& x) const;

  /// Coordinates of a torus exponent in the lower (w'_1..w'_{n-1}, b_n) or
  /// upper (w_1..w_{n-1}, a_n) Borel torus; throws when outside it.
  std::vector<int> lower_torus_coords(const TorusExp& t) const;
  std::vector<int> upper_torus_coords(const TorusExp& t) const;
  /// (T', T) from the bicharacter on coordinates.
  Scalar torus_pairing_coords(const std::vector<int>& lower, const std::vector<int>& upper) const;
  Scalar torus_pairing(const TorusExp& lower, const TorusExp& upper) const;

  Scalar pair_words(const Word& f, const Word& e, PairingRoute route = PairingRoute::peel_left_f) const;
  /// Bilinear extension to y in the lower Borel part and x in the upper one.
  Scalar pair(const Element& y, const Element& x, PairingRoute route = PairingRoute::peel_left_f) const;

  /// p_i / p'_i on combinations of e-words (upper) or f-words (lower).
  WordCombo p_upper(const WordCombo& x, int i, bool primed) const;
  WordCombo p_lower(const WordCombo& y, int i, bool primed) const;
  /// p-map on a homogeneous element of U^+ or U^- (no torus part).
  Element p_map(const Element& x, int i, bool primed) const;

  /// Memoized; throws CutoffExceeded above the height cutoff.
  std::shared_ptr<const GradedBasis> graded_basis(const Content& zeta) const;
  DualPair dual_bases(const Content& zeta) const;

  /// x = sum_k (v_k, x) u_k: coordinates of an e-word in the u-basis.
  std::vector<Scalar> e_coordinates(const Word& e) const;
  /// y = sum_k (y, u_k) v_k, rewritten in the representative f-words.
  std::vector<Scalar> f_coordinates(const Word& f) const;

  /// Rewrites every f-word and e-word of every term through the
  /// representatives, giving a canonical form modulo the radical.
  Element reduce(const Element& x) const;
  Tensor reduce(const Tensor& x) const;

 private:
  std::shared_ptr<GradedBasis> build_basis(const Content& zeta) const;

  const Algebra& alg_;
  int cutoff_;
  Scalar inv_s_minus_r_;
  mutable std::mutex mu_;
  mutable std::map<Content, std::shared_ptr<const GradedBasis>> bases_;
};

/// f(lambda, mu) from the closed form on eps-coordinates: product of
/// f(eps_i, eps_j)^{lambda_i mu_j} with s^-1 (i<j), 1 (i=j), r (i>j).
Scalar f_form(const Params& params, const std::vector<int>& lambda_eps, const std::vector<int>& mu_eps);
/// Same value computed as (w'_mu, w_lambda)^-1 through the torus pairing of
/// a gl algebra.
Scalar f_form_via_pairing(const PairingContext& ctx, const std::vector<int>& lambda_eps, const std::vector<int>& mu_eps);

/// alpha-coordinates (alpha_n = eps_n) of a weight given in eps-coordinates.
std::vector<int> eps_to_alpha(const std::vector<int>& eps);
std::vector<int> alpha_to_eps(const std::vector<int>& alpha);

}  // namespace qgr
