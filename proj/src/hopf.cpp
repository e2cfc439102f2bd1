#include "qgr/hopf.hpp"

namespace qgr {

namespace {

void accumulate(Tensor::Terms& terms, Tensor::Key&& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

// Expands the tensor product of per-leg elements into terms.
void expand_into(Tensor::Terms& out, const std::vector<Element>& legs, const Scalar& c) {
  std::vector<Element::Terms::const_iterator> it;
  for (const auto& leg : legs) {
    if (leg.is_zero()) return;
    it.push_back(leg.terms().begin());
  }
  while (true) {
    Tensor::Key key;
    Scalar coeff = c;
    for (std::size_t l = 0; l < legs.size(); ++l) {
      key.push_back(it[l]->first);
      coeff *= it[l]->second;
    }
    accumulate(out, std::move(key), coeff);
    std::size_t l = legs.size();
    while (l > 0) {
      --l;
      if (++it[l] != legs[l].terms().end()) break;
      it[l] = legs[l].terms().begin();
      if (l == 0) return;
    }
    if (legs.empty()) return;
  }
}

bool is_unit_key(const TermKey& k) {
  if (!k.f.empty() || !k.e.empty()) return false;
  for (int v : k.t)
    if (v != 0) return false;
  return true;
}

}  // namespace

Tensor Tensor::product_of(const std::vector<Element>& legs) {
  if (legs.empty()) throw Error("tensor needs at least one leg");
  Tensor out(legs[0].algebra(), static_cast<int>(legs.size()));
  expand_into(out.terms_, legs, Scalar(1));
  return out;
}

Tensor Tensor::one(const Algebra& alg, int rank) {
  return product_of(std::vector<Element>(static_cast<std::size_t>(rank), Element::one(alg)));
}

void Tensor::check_same(const Tensor& o) const {
  if (alg_ != o.alg_ || rank_ != o.rank_) throw Error("tensor algebra or rank mismatch");
}

void Tensor::add_term(const Key& key, const Scalar& c) {
  Key k(key);
  accumulate(terms_, std::move(k), c);
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Tensor operator*(const Tensor& x, const Tensor& y) {
  x.check_same(y);
  Tensor out(*x.alg_, x.rank_);
  std::vector<Element> legs;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      legs.clear();
      for (int l = 0; l < x.rank_; ++l) legs.push_back(multiply_keys(*x.alg_, kx[l], ky[l]));
      expand_into(out.terms_, legs, cx * cy);
    }
  }
  return out;
}

bool operator==(const Tensor& x, const Tensor& y) {
  return x.alg_ == y.alg_ && x.rank_ == y.rank_ && x.terms_ == y.terms_;
}

std::string Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.to_string() + " * (";
    for (std::size_t l = 0; l < k.size(); ++l) {
      if (l) out += " ⊗ ";
      out += key_to_string(k[l]);
    }
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

Tensor coproduct_of_key(const Algebra& alg, const TermKey& key) {
  const TorusExp zero = alg.zero_torus();
  Tensor acc = Tensor::one(alg, 2);
  for (int j : key.f) {
    Tensor d(alg, 2);
    d.add_term({TermKey{{}, zero, {}}, TermKey{{j}, zero, {}}}, 1);
    d.add_term({TermKey{{j}, zero, {}}, TermKey{{}, alg.omega_prime(j), {}}}, 1);
    acc = acc * d;
  }
  {
    Tensor d(alg, 2);
    d.add_term({TermKey{{}, key.t, {}}, TermKey{{}, key.t, {}}}, 1);
    acc = acc * d;
  }
  for (int j : key.e) {
    Tensor d(alg, 2);
    d.add_term({TermKey{{}, zero, {j}}, TermKey{{}, zero, {}}}, 1);
    d.add_term({TermKey{{}, alg.omega(j), {}}, TermKey{{}, zero, {j}}}, 1);
    acc = acc * d;
  }
  return acc;
}

Tensor coproduct(const Element& x) {
  const Algebra& alg = x.algebra();
  Tensor out(alg, 2);
  for (const auto& [k, c] : x.terms()) out += coproduct_of_key(alg, k) * c;
  return out;
}

Tensor coproduct_on_leg(const Tensor& x, int leg) {
  const Algebra& alg = x.algebra();
  if (leg < 0 || leg >= x.rank()) throw Error("leg out of range");
  Tensor out(alg, x.rank() + 1);
  for (const auto& [k, c] : x.terms()) {
    const Tensor d = coproduct_of_key(alg, k[leg]);
    for (const auto& [dk, dc] : d.terms()) {
      Tensor::Key nk;
      for (int l = 0; l < x.rank(); ++l) {
        if (l == leg) {
          nk.push_back(dk[0]);
          nk.push_back(dk[1]);
        } else {
          nk.push_back(k[l]);
        }
      }
      out.add_term(nk, c * dc);
    }
  }
  return out;
}

Tensor iterated_coproduct(const Element& x, int k) {
  if (k != 2 && k != 3) throw Error("iterated coproduct supports k = 2 or 3");
  Tensor d = coproduct(x);
  return k == 2 ? d : coproduct_on_leg(d, 0);
}

Tensor counit_on_leg(const Tensor& x, int leg) {
  if (x.rank() < 2) throw Error("counit on leg needs rank >= 2");
  Tensor out(x.algebra(), x.rank() - 1);
  for (const auto& [k, c] : x.terms()) {
    if (!k[leg].f.empty() || !k[leg].e.empty()) continue;
    Tensor::Key nk;
    for (int l = 0; l < x.rank(); ++l)
      if (l != leg) nk.push_back(k[l]);
    out.add_term(nk, c);
  }
  return out;
}

Element multiply_legs(const Tensor& x) {
  const Algebra& alg = x.algebra();
  Element out(alg);
  for (const auto& [k, c] : x.terms()) {
    Element prod(alg, k[0], c);
    for (int l = 1; l < x.rank(); ++l) prod = prod * Element(alg, k[l], Scalar(1));
    out += prod;
  }
  return out;
}

Tensor permute_legs(const Tensor& x, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != x.rank()) throw Error("permutation size mismatch");
  Tensor out(x.algebra(), x.rank());
  for (const auto& [k, c] : x.terms()) {
    Tensor::Key nk;
    for (int l : order) nk.push_back(k[l]);
    out.add_term(nk, c);
  }
  return out;
}

Scalar counit(const Element& x) {
  Scalar out;
  for (const auto& [k, c] : x.terms())
    if (k.f.empty() && k.e.empty()) out += c;
  return out;
}

namespace {

TorusExp negated(const TorusExp& t) {
  TorusExp out(t);
  for (int& v : out) v = -v;
  return out;
}

// Anti-multiplicative extension of a map on generators.
template <typename OnE, typename OnF>
Element anti_extend(const Element& x, OnE on_e, OnF on_f) {
  const Algebra& alg = x.algebra();
  Element out(alg);
  for (const auto& [k, c] : x.terms()) {
    if (is_unit_key(k)) {
      out.add_term(k, c);
      continue;
    }
    Element prod = Element::scalar(alg, c);
    for (auto it = k.e.rbegin(); it != k.e.rend(); ++it) prod = prod * on_e(*it);
    prod = prod * Element::torus(alg, negated(k.t));
    for (auto it = k.f.rbegin(); it != k.f.rend(); ++it) prod = prod * on_f(*it);
    out += prod;
  }
  return out;
}

}  // namespace

Element antipode(const Element& x) {
  const Algebra& alg = x.algebra();
  return anti_extend(
      x,
      [&](int i) { return -(Element::torus(alg, negated(alg.omega(i))) * Element::e(alg, i)); },
      [&](int i) { return -(Element::f(alg, i) * Element::torus(alg, negated(alg.omega_prime(i)))); });
}

Element antipode_inverse(const Element& x) {
  const Algebra& alg = x.algebra();
  return anti_extend(
      x,
      [&](int i) { return -(Element::e(alg, i) * Element::torus(alg, negated(alg.omega(i)))); },
      [&](int i) { return -(Element::torus(alg, negated(alg.omega_prime(i))) * Element::f(alg, i)); });
}

}  // namespace qgr
