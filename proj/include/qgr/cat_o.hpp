// Weights, torus characters and truncated Verma modules.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgr/pairing.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Integral weight in eps-coordinates.
struct Weight {
  std::vector<int> eps;

  /// alpha_k = eps_1 + ... + eps_k, with alpha_n = eps_n read as the last
  /// entry.
  std::vector<int> alpha() const { return eps_to_alpha(eps); }
  static Weight from_alpha(const std::vector<int>& alpha) { return {alpha_to_eps(alpha)}; }
  /// lambda - zeta for zeta in Q^+ (alpha-coordinates of length n-1).
  Weight minus(const Content& zeta) const;
  std::string to_string() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Value of lambda-hat on a torus element: a_i -> r^{lambda_i},
/// b_i -> s^{lambda_i}, w_j -> r^{lambda_j} s^{lambda_{j+1}},
/// w'_j -> r^{lambda_{j+1}} s^{lambda_j}.
Scalar weight_character(const Algebra& alg, const Weight& lambda, const TorusExp& t);

/// Pairwise comparison of the characters of all zeta in the root lattice with
/// coordinates in [-bound, bound], evaluated on every w_j and w'_j.
Report character_injectivity_check(const Algebra& alg, int bound);

/// Sparse vector over a module basis.
using ModuleVector = std::map<int, Scalar>;
/// Column images of the basis vectors.
using Operator = std::vector<ModuleVector>;
/// One operator per generator of the algebra (including inverses of the
/// group-likes).
using GeneratorMatrices = std::vector<std::pair<Generator, Operator>>;

void add_to(ModuleVector& v, int index, const Scalar& c);
ModuleVector apply_operator(const Operator& op, const ModuleVector& v);
ModuleVector scaled(const ModuleVector& v, const Scalar& c);
ModuleVector combine(const ModuleVector& a, const ModuleVector& b, const Scalar& cb = Scalar(1));

struct ModuleBasisVector {
  /// Representative f-word applied to the highest weight vector.
  Word word;
  Content zeta;
  Weight weight;
};

/// M(lambda) truncated at depth D: basis f_w v_lambda for representative
/// f-words w of height <= D. Actions are computed by straightening and
/// dropping every component deeper than D.
class WeightModule {
 public:
  WeightModule(const PairingContext& ctx, Weight lambda, int depth);

  const PairingContext& context() const { return *ctx_; }
  const Algebra& algebra() const { return ctx_->algebra(); }
  const Weight& highest_weight() const { return lambda_; }
  int depth() const { return depth_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ModuleBasisVector>& basis() const { return basis_; }
  int depth_of(int index) const { return height(basis_[static_cast<std::size_t>(index)].zeta); }
  /// Index of the representative word, or -1.
  int index_of(const Word& rep) const;
  /// Indices of the layer of content zeta.
  std::vector<int> layer(const Content& zeta) const;

  static ModuleVector unit(int index) { return {{index, Scalar(1)}}; }
  /// y v_lambda for y in U^- (torus parts act by the character; any term
  /// with an e-word annihilates v_lambda).
  ModuleVector vector_of(const Element& y) const;
  /// x . m by straightening x f_w into normal form.
  ModuleVector act(const Element& x, const ModuleVector& m) const;
  /// Generator matrix (computed once).
  const Operator& generator(const Generator& g) const;
  const Operator& e(int i) const { return generator({GenKind::E, i}); }
  const Operator& f(int i) const { return generator({GenKind::F, i}); }
  /// Diagonal operator of a torus element.
  Operator torus(const TorusExp& t) const;
  /// Applies generators right to left, as the word g_1 ... g_k acts.
  ModuleVector act_word(const std::vector<Generator>& word, const ModuleVector& m) const;
  GeneratorMatrices generator_matrices() const;

  std::string to_string(const ModuleVector& m) const;

 private:
  const PairingContext* ctx_;
  Weight lambda_;
  int depth_;
  std::vector<ModuleBasisVector> basis_;
  std::map<Word, int> index_;
  std::vector<std::pair<Generator, Operator>> gens_;
};

/// Every defining relation, applied through the generator matrices to
/// every basis vector of depth <= D - max(2, f-letters in the relation),
/// gives 0. The bound keeps every intermediate vector inside the truncation.
Report module_relation_audit(const WeightModule& m);
Report module_relation_audit(const WeightModule& m, const GeneratorMatrices& mats);

}  // namespace qgr
