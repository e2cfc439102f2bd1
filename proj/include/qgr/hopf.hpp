// Coproduct, counit and antipode, with tensors of normal-form monomials.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgr/presentation.hpp"

namespace qgr {

/// Finite sum of coeff * (k_1 (x) ... (x) k_rank) with each leg a normal-form
/// key.
class Tensor {
 public:
  using Key = std::vector<TermKey>;
  using Terms = std::map<Key, Scalar>;

  Tensor(const Algebra& alg, int rank) : alg_(&alg), rank_(rank) {}
  /// legs[0] (x) legs[1] (x) ...
  static Tensor product_of(const std::vector<Element>& legs);
  static Tensor one(const Algebra& alg, int rank);

  const Algebra& algebra() const { return *alg_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const Scalar& c);
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& c);
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
  friend Tensor operator*(Tensor x, const Scalar& c) { return x *= c; }
  /// Leg-wise product.
  friend Tensor operator*(const Tensor& x, const Tensor& y);
  friend bool operator==(const Tensor& x, const Tensor& y);

  std::string to_string() const;

 private:
  void check_same(const Tensor& o) const;

  const Algebra* alg_;
  int rank_;
  Terms terms_;
};

Tensor coproduct(const Element& x);
/// k = 2: coproduct; k = 3: (coproduct (x) 1) after coproduct.
Tensor iterated_coproduct(const Element& x, int k);
/// Applies the coproduct to one leg (0-based), raising the rank by one.
Tensor coproduct_on_leg(const Tensor& x, int leg);
/// Applies the counit to one leg, lowering the rank by one.
Tensor counit_on_leg(const Tensor& x, int leg);
/// Multiplies the legs of a tensor together in order.
Element multiply_legs(const Tensor& x);
/// Swaps legs i and j.
Tensor permute_legs(const Tensor& x, const std::vector<int>& order);

Scalar counit(const Element& x);
Element antipode(const Element& x);
Element antipode_inverse(const Element& x);

/// Ring map on generators extended multiplicatively to keys.
Tensor coproduct_of_key(const Algebra& alg, const TermKey& key);

}  // namespace qgr
