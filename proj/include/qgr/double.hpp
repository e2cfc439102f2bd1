// The double built from the two Borel parts and the pairing, modelled
// inside the full algebra: a (x) b stands for the product a b.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgr/hopf.hpp"
#include "qgr/pairing.hpp"
#include "qgr/report.hpp"

namespace qgr {

/// Rank-2 tensor whose first leg lies in the upper Borel part and second
/// leg in the lower one.
using DoubleElement = Tensor;

/// Bilinear form (y, x) used by the cross relation; defaults to the pairing.
using PairingFn = std::function<Scalar(const Element& y, const Element& x)>;

struct NamedElement {
  std::string name;
  Element value;
};

/// e_i, w_i^{+-1} (and a_n^{+-1} for gl), resp. f_i, w'_i^{+-1} (b_n^{+-1}).
std::vector<NamedElement> upper_borel_generators(const Algebra& alg);
std::vector<NamedElement> lower_borel_generators(const Algebra& alg);

/// (1 (x) b)(a (x) 1) = sum (S(b_(1)), a_(1)) (b_(3), a_(3)) a_(2) (x) b_(2).
DoubleElement cross_product(const PairingContext& ctx, const Element& b, const Element& a);
DoubleElement cross_product(const Algebra& alg, const PairingFn& pairing, const Element& b, const Element& a);

/// (a (x) b)(a' (x) b') = a (1 (x) b)(a' (x) 1) b'.
DoubleElement double_product(const PairingContext& ctx, const DoubleElement& x, const DoubleElement& y);

/// a (x) b |-> a b.
Element double_to_algebra(const DoubleElement& x);

/// Tensor coalgebra: (a (x) b) |-> (a_(1) (x) b_(1)) (x) (a_(2) (x) b_(2)),
/// returned as a rank-4 tensor with legs a_(1), b_(1), a_(2), b_(2).
Tensor double_coproduct(const DoubleElement& x);

/// Every pair (lower generator b, upper generator a): the image of
/// cross_product(b, a) minus b a; then the same for `random_pairs` seeded
/// pairs of generator words of length <= 3.
Report verify_double_iso(const PairingContext& ctx, int random_pairs = 0, unsigned long long seed = 1);
Report verify_double_iso(const Algebra& alg, const PairingFn& pairing, int random_pairs = 0, unsigned long long seed = 1);

}  // namespace qgr
