#include "qgr/double.hpp"

#include <random>

namespace qgr {

namespace {

TorusExp negated(TorusExp t) {
  for (int& v : t) v = -v;
  return t;
}

std::vector<NamedElement> borel_generators(const Algebra& alg, bool upper) {
  std::vector<NamedElement> out;
  const std::string w = upper ? "w" : "w'";
  for (int i = 1; i < alg.n(); ++i) {
    const std::string idx = std::to_string(i);
    const TorusExp t = upper ? alg.omega(i) : alg.omega_prime(i);
    out.push_back({(upper ? "e" : "f") + idx, upper ? Element::e(alg, i) : Element::f(alg, i)});
    out.push_back({w + idx, Element::torus(alg, t)});
    out.push_back({w + idx + "^-1", Element::torus(alg, negated(t))});
  }
  if (alg.kind() == Kind::gl) {
    const int n = alg.n();
    const std::string g = (upper ? "a" : "b") + std::to_string(n);
    out.push_back({g, Element::gen(alg, {upper ? GenKind::A : GenKind::B, n})});
    out.push_back({g + "^-1", Element::gen(alg, {upper ? GenKind::Ainv : GenKind::Binv, n})});
  }
  return out;
}

}  // namespace

std::vector<NamedElement> upper_borel_generators(const Algebra& alg) { return borel_generators(alg, true); }
std::vector<NamedElement> lower_borel_generators(const Algebra& alg) { return borel_generators(alg, false); }

DoubleElement cross_product(const Algebra& alg, const PairingFn& pairing, const Element& b, const Element& a) {
  const Tensor da = iterated_coproduct(a, 3);
  const Tensor db = iterated_coproduct(b, 3);
  DoubleElement out(alg, 2);
  for (const auto& [kb, cb] : db.terms()) {
    const Element sb1 = antipode(Element(alg, kb[0], Scalar(1)));
    const Element b3(alg, kb[2], Scalar(1));
    for (const auto& [ka, ca] : da.terms()) {
      const Scalar left = pairing(sb1, Element(alg, ka[0], Scalar(1)));
      if (left.is_zero()) continue;
      const Scalar right = pairing(b3, Element(alg, ka[2], Scalar(1)));
      if (right.is_zero()) continue;
      out.add_term({ka[1], kb[1]}, ca * cb * left * right);
    }
  }
  return out;
}

DoubleElement cross_product(const PairingContext& ctx, const Element& b, const Element& a) {
  return cross_product(ctx.algebra(), [&](const Element& y, const Element& x) { return ctx.pair(y, x); }, b, a);
}

DoubleElement double_product(const PairingContext& ctx, const DoubleElement& x, const DoubleElement& y) {
  const Algebra& alg = ctx.algebra();
  DoubleElement out(alg, 2);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      const Element a(alg, kx[0], Scalar(1)), b(alg, kx[1], Scalar(1));
      const Element a2(alg, ky[0], Scalar(1)), b2(alg, ky[1], Scalar(1));
      const DoubleElement mid = cross_product(ctx, b, a2);
      for (const auto& [km, cm] : mid.terms())
        out += Tensor::product_of({a * Element(alg, km[0], Scalar(1)), Element(alg, km[1], Scalar(1)) * b2}) * (cx * cy * cm);
    }
  return out;
}

Element double_to_algebra(const DoubleElement& x) {
  if (x.rank() != 2) throw Error("double element must have two legs");
  return multiply_legs(x);
}

Tensor double_coproduct(const DoubleElement& x) {
  const Algebra& alg = x.algebra();
  Tensor out(alg, 4);
  for (const auto& [k, c] : x.terms()) {
    const Tensor da = coproduct(Element(alg, k[0], Scalar(1)));
    const Tensor db = coproduct(Element(alg, k[1], Scalar(1)));
    for (const auto& [ka, ca] : da.terms())
      for (const auto& [kb, cb] : db.terms()) out.add_term({ka[0], kb[0], ka[1], kb[1]}, c * ca * cb);
  }
  return out;
}

namespace {

void check_pair(Report& report, const Algebra& alg, const PairingFn& pairing, const NamedElement& b, const NamedElement& a) {
  const Element residual = double_to_algebra(cross_product(alg, pairing, b.value, a.value)) - b.value * a.value;
  report.add(b.name + " * " + a.name, residual.is_zero(), residual.to_string());
}

NamedElement random_product(std::mt19937_64& rng, const std::vector<NamedElement>& gens, const Algebra& alg) {
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  NamedElement out{"", Element::one(alg)};
  const int l = len(rng);
  for (int k = 0; k < l; ++k) {
    const NamedElement& g = gens[pick(rng)];
    out.name += (k ? "*" : "") + g.name;
    out.value = out.value * g.value;
  }
  return out;
}

}  // namespace

Report verify_double_iso(const Algebra& alg, const PairingFn& pairing, int random_pairs, unsigned long long seed) {
  Report report;
  report.command = "verify-double";
  report.config = {{"n", std::to_string(alg.n())}, {"kind", to_string(alg.kind())}, {"params", alg.params().describe()},
                   {"random_pairs", std::to_string(random_pairs)}, {"seed", std::to_string(seed)}};
  const auto upper = upper_borel_generators(alg);
  const auto lower = lower_borel_generators(alg);
  for (const auto& b : lower)
    for (const auto& a : upper) check_pair(report, alg, pairing, b, a);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_pairs; ++k) {
    const NamedElement b = random_product(rng, lower, alg);
    const NamedElement a = random_product(rng, upper, alg);
    check_pair(report, alg, pairing, b, a);
  }
  return report;
}

Report verify_double_iso(const PairingContext& ctx, int random_pairs, unsigned long long seed) {
  return verify_double_iso(ctx.algebra(), [&](const Element& y, const Element& x) { return ctx.pair(y, x); }, random_pairs, seed);
}

}  // namespace qgr
