// Theta, the braiding R = Theta o f~ o P on tensor products of truncated
// modules, the Yang-Baxter and hexagon checks, and the quantum Casimir.
#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qgr/cat_o.hpp"
#include "qgr/hopf.hpp"
#include "qgr/pairing.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Theta_zeta = sum_k v_k (x) u_k and its coproducts, memoized per zeta.
class ThetaOperator {
 public:
  explicit ThetaOperator(const PairingContext& ctx) : ctx_(ctx) {}
  const PairingContext& context() const { return ctx_; }
  const Algebra& algebra() const { return ctx_.algebra(); }

  /// Zero tensor when zeta has a negative entry; CutoffExceeded above the
  /// height cutoff.
  const Tensor& theta(const Content& zeta) const;
  /// sum_k u_k (x) v_k.
  const Tensor& theta_op(const Content& zeta) const;
  /// Coproduct applied to leg 0 or leg 1 of theta(zeta) (rank 3).
  const Tensor& theta_coproduct(const Content& zeta, int leg) const;
  /// Coproduct applied to leg 0 of theta_op(zeta) (rank 3).
  const Tensor& theta_op_coproduct(const Content& zeta) const;

 private:
  const Tensor& cached(int slot, const Content& zeta) const;

  const PairingContext& ctx_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, Content>, Tensor> cache_;
};

/// Cached action of normal-form keys on the basis of one module.
class ModuleActions {
 public:
  explicit ModuleActions(const WeightModule& m) : m_(m) {}
  const WeightModule& module() const { return m_; }
  const ModuleVector& act_key(const TermKey& key, int index) const;

 private:
  const WeightModule& m_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<TermKey, int>, ModuleVector> cache_;
};

/// Vector in a tensor product of modules: multi-index of basis indices.
using TensorVector = std::map<std::vector<int>, Scalar>;
void add_to(TensorVector& v, const std::vector<int>& index, const Scalar& c);

/// A tensor vector together with the module sitting on each leg.
struct TensorState {
  std::vector<const ModuleActions*> legs;
  TensorVector vec;

  static TensorState basis(std::vector<const ModuleActions*> legs, std::vector<int> index);
  /// Sum of basis depths across legs.
  int depth_of(const std::vector<int>& index) const;
  std::string to_string() const;
};
bool same_vector(const TensorState& a, const TensorState& b);
TensorState difference(const TensorState& a, const TensorState& b);

/// Algebra tensor of rank legs.size() acting on the given legs.
TensorState apply_tensor(const TensorState& x, const Tensor& t, const std::vector<int>& legs);
/// Iterated coproduct of x acting on every leg.
TensorState apply_coproduct(const TensorState& x, const Element& g);
TensorState swap_legs(const TensorState& x, int a, int b);
/// m_a (x) m_b |-> f(wt m_a, wt m_b) m_a (x) m_b on legs a, b.
TensorState apply_ftilde(const TensorState& x, int a, int b);
/// Scales each basis tensor by f(sum of weights on `left`, sum on `right`).
TensorState apply_ftilde_groups(const TensorState& x, const std::vector<int>& left, const std::vector<int>& right);
/// Sum over zeta of Theta_zeta with v on leg a and u on leg b.
TensorState apply_theta(const ThetaOperator& th, const TensorState& x, int a, int b);
TensorState apply_theta_zeta(const ThetaOperator& th, const TensorState& x, int a, int b, const Content& zeta);
/// Sum of (coproduct on leg `which` of Theta) on three legs.
TensorState apply_theta_coproduct(const ThetaOperator& th, const TensorState& x, int which);
/// Sum of (coproduct on leg 0 of Theta^op) on three legs.
TensorState apply_theta_op_coproduct(const ThetaOperator& th, const TensorState& x);
/// Torus element acting on one leg.
TensorState apply_torus(const TensorState& x, int leg, const TorusExp& t);
/// R on legs (a, a+1): Theta o f~ o P.
TensorState apply_R(const ThetaOperator& th, const TensorState& x, int a);

/// f~ scalar f(lambda, mu).
Scalar ftilde_scalar(const Params& params, const Weight& lambda, const Weight& mu);

/// Matrix of R: M' (x) M -> M (x) M' on basis pairs of combined depth <=
/// budget.
struct BraidMap {
  const WeightModule* first = nullptr;   // M'
  const WeightModule* second = nullptr;  // M
  int budget = 0;
  std::vector<std::pair<std::vector<int>, TensorVector>> columns;
};

/// Throws Error when budget > min depth - 2.
BraidMap build_R(const ThetaOperator& th, const ModuleActions& mp, const ModuleActions& m, int budget);
/// Delta(x) R = R Delta(x) for every generator x on basis pairs of combined
/// depth <= budget.
Report intertwining_check(const ThetaOperator& th, const ModuleActions& mp, const ModuleActions& m, int budget);
/// Theta minus its weight-zero part strictly lowers the first-leg weight,
/// and the zero part is f~ o P.
Report unitriangularity_check(const BraidMap& r);

/// Torus commutation and the e_i / f_i recursions for Theta_zeta with
/// height(zeta) <= max_height, compared in the algebra modulo the radical.
Report theta_identities_check(const ThetaOperator& th, int max_height);

/// R12 R23 R12 = R23 R12 R23 on basis triples of combined depth <= budget.
Report qybe_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget);
/// R12 R23 = (1 (x) D)(Theta) f~' P12 P23 and R23 R12 = (D (x) 1)(Theta)
/// f~'' P23 P12 on basis triples of combined depth <= budget.
Report hexagon_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget);

/// Coproducts of x in U^+_gamma and y in U^-_{-gamma} through the dual
/// bases, for all words of height <= max_height.
Report coproduct_dual_basis_check(const ThetaOperator& th, int max_height);
/// Coproduct of Theta_gamma as sums of products of leg-embedded Thetas,
/// height(gamma) <= max_height.
Report theta_coproduct_check(const ThetaOperator& th, int max_height);
/// (D (x) 1)(Theta^op) f~31 f~32 = Theta^f_31 Theta^f_32 and the commutation
/// of f~31 f~32 with Theta_12, on triples of combined depth <= budget.
Report theta_op_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget);
/// f~12 Theta_13 = Theta_13 (1 (x) w_eta (x) 1) f~12 and the f~23 analogue,
/// for height(eta) <= budget.
Report ftilde_theta_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget);

/// 2 rho in eps-coordinates: (n+1-2j)_j.
std::vector<int> two_rho(int n);
/// g(lambda) = (r/s)^{<lambda + 2 rho, lambda>/2}.
Scalar casimir_g(const Params& params, const Weight& lambda);
/// sum over height(zeta) <= max_height of sum_k S(v_k) u_k.
Element casimir_element(const ThetaOperator& th, int max_height);
/// Omega Xi commutes with the generators, the shift identities, the
/// recurrence of g, and Omega Xi = g(lambda) on basis vectors of depth <=
/// budget.
Report casimir_check(const ThetaOperator& th, const ModuleActions& m, int budget);

}  // namespace qgr
