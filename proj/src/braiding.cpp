#include "qgr/braiding.hpp"

#include <algorithm>
#include <functional>

#include "qgr/error.hpp"

namespace qgr {

namespace {

enum Slot { kTheta, kThetaOp, kThetaCoproduct0, kThetaCoproduct1, kThetaOpCoproduct };

bool has_negative(const Content& z) {
  return std::any_of(z.begin(), z.end(), [](int x) { return x < 0; });
}

Content minus_alpha(Content z, int i) {
  z[static_cast<std::size_t>(i - 1)] -= 1;
  return z;
}

Content plus(const Content& a, const Content& b) {
  Content out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Content minus(const Content& a, const Content& b) {
  Content out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

// All zeta with 0 <= zeta <= hi entrywise.
std::vector<Content> box(const Content& hi) {
  std::vector<Content> out;
  Content z(hi.size(), 0);
  while (true) {
    out.push_back(z);
    std::size_t k = 0;
    while (k < z.size() && z[k] == hi[k]) z[k++] = 0;
    if (k == z.size()) break;
    ++z[k];
  }
  return out;
}

TermKey unit_key(const Algebra& alg) { return TermKey{{}, alg.zero_torus(), {}}; }

// Puts a tensor onto the given legs of a rank-`rank` tensor, units elsewhere.
Tensor embed(const Tensor& t, const std::vector<int>& legs, int rank) {
  const Algebra& alg = t.algebra();
  Tensor out(alg, rank);
  for (const auto& [key, c] : t.terms()) {
    Tensor::Key k(static_cast<std::size_t>(rank), unit_key(alg));
    for (std::size_t l = 0; l < legs.size(); ++l) k[static_cast<std::size_t>(legs[l])] = key[l];
    out.add_term(k, c);
  }
  return out;
}

const ModuleBasisVector& basis_vector(const TensorState& x, int leg, int index) {
  return x.legs[static_cast<std::size_t>(leg)]->module().basis()[static_cast<std::size_t>(index)];
}

const Algebra& algebra_of(const TensorState& x) { return x.legs.front()->module().algebra(); }

Weight weight_sum(const TensorState& x, const std::vector<int>& index, const std::vector<int>& legs) {
  Weight w{std::vector<int>(static_cast<std::size_t>(algebra_of(x).n()), 0)};
  for (int l : legs) {
    const Weight& b = basis_vector(x, l, index[static_cast<std::size_t>(l)]).weight;
    for (std::size_t k = 0; k < w.eps.size(); ++k) w.eps[k] += b.eps[k];
  }
  return w;
}

Content content_sum(const TensorState& x, const std::vector<int>& index, const std::vector<int>& legs) {
  Content z(static_cast<std::size_t>(algebra_of(x).n() - 1), 0);
  for (int l : legs) z = plus(z, basis_vector(x, l, index[static_cast<std::size_t>(l)]).zeta);
  return z;
}

// Applies one algebra tensor to a single basis tensor and accumulates.
void apply_on_entry(const TensorState& x, const std::vector<int>& index, const Scalar& c, const Tensor& t,
                    const std::vector<int>& legs, TensorVector& out) {
  for (const auto& [key, ct] : t.terms()) {
    TensorVector partial{{index, c * ct}};
    for (std::size_t l = 0; l < legs.size() && !partial.empty(); ++l) {
      const int leg = legs[l];
      TensorVector next;
      for (const auto& [pidx, pc] : partial) {
        const ModuleVector& mv = x.legs[static_cast<std::size_t>(leg)]->act_key(key[l], pidx[static_cast<std::size_t>(leg)]);
        for (const auto& [j, d] : mv) {
          std::vector<int> idx = pidx;
          idx[static_cast<std::size_t>(leg)] = j;
          add_to(next, idx, pc * d);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [idx, pc] : partial) add_to(out, idx, pc);
  }
}

// Applies a family of tensors indexed by zeta, with zeta running over the box
// bounded by the content carried on `bound_legs`.
TensorState apply_family(const TensorState& x, const std::vector<int>& legs, const std::vector<int>& bound_legs,
                         const std::function<const Tensor&(const Content&)>& family) {
  TensorState out{x.legs, {}};
  for (const auto& [idx, c] : x.vec)
    for (const Content& z : box(content_sum(x, idx, bound_legs))) apply_on_entry(x, idx, c, family(z), legs, out.vec);
  return out;
}

std::string leg_label(const WeightModule& m, int index) {
  const Word& w = m.basis()[static_cast<std::size_t>(index)].word;
  std::string out = "f[";
  for (std::size_t p = 0; p < w.size(); ++p) out += (p ? " " : "") + std::to_string(w[p]);
  return out + "]";
}

std::string tuple_label(const std::vector<const ModuleActions*>& mods, const std::vector<int>& index) {
  std::string out;
  for (std::size_t l = 0; l < index.size(); ++l) out += (l ? " (x) " : "") + leg_label(mods[l]->module(), index[l]);
  return out;
}

std::string content_label(const Content& z) {
  std::string out = "[";
  for (std::size_t k = 0; k < z.size(); ++k) out += (k ? " " : "") + std::to_string(z[k]);
  return out + "]";
}

// Basis tuples with combined depth <= budget, lexicographic in the indices.
std::vector<std::vector<int>> basis_tuples(const std::vector<const ModuleActions*>& mods, int budget) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(mods.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t l, int used) {
    if (l == mods.size()) {
      out.push_back(idx);
      return;
    }
    const WeightModule& m = mods[l]->module();
    for (int k = 0; k < static_cast<int>(m.dim()); ++k) {
      const int d = m.depth_of(k);
      if (used + d > budget) continue;
      idx[l] = k;
      rec(l + 1, used + d);
    }
  };
  rec(0, 0);
  return out;
}

void check_budget(const std::vector<const ModuleActions*>& mods, int budget) {
  int depth = mods.front()->module().depth();
  for (const auto* m : mods) depth = std::min(depth, m->module().depth());
  if (budget < 0) throw Error("budget must be nonnegative");
  if (budget > depth - 2)
    throw Error("budget " + std::to_string(budget) + " exceeds module depth " + std::to_string(depth) + " minus 2");
}

std::vector<std::pair<std::string, std::string>> modules_config(const std::vector<const ModuleActions*>& mods,
                                                                int budget) {
  const Algebra& alg = mods.front()->module().algebra();
  std::vector<std::pair<std::string, std::string>> cfg = {
      {"n", std::to_string(alg.n())}, {"kind", to_string(alg.kind())}, {"params", alg.params().describe()}};
  static const char* names[] = {"lambda", "mu", "nu"};
  for (std::size_t l = 0; l < mods.size(); ++l) {
    cfg.emplace_back(names[l], mods[l]->module().highest_weight().to_string());
    cfg.emplace_back(std::string("depth_") + names[l], std::to_string(mods[l]->module().depth()));
  }
  cfg.emplace_back("budget", std::to_string(budget));
  return cfg;
}

// Records one entry per item; the residual of a failing item is the printed
// difference.
void compare(Report& report, const std::string& label, const TensorState& lhs, const TensorState& rhs) {
  if (lhs.legs != rhs.legs) {
    report.add(label, false, "leg modules differ");
    return;
  }
  const TensorState d = difference(lhs, rhs);
  report.add(label, d.vec.empty(), d.to_string());
}

std::string config_int(int x) { return std::to_string(x); }

}  // namespace

// ---------------------------------------------------------------------------

const Tensor& ThetaOperator::cached(int slot, const Content& zeta) const {
  const auto key = std::make_pair(slot, zeta);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const Algebra& alg = algebra();
  Tensor value(alg, slot <= kThetaOp ? 2 : 3);
  if (!has_negative(zeta)) {
    switch (slot) {
      case kTheta:
        if (height(zeta) == 0) {
          value = Tensor::one(alg, 2);
        } else {
          const DualPair dp = ctx_.dual_bases(zeta);
          for (std::size_t k = 0; k < dp.u.size(); ++k) value += Tensor::product_of({dp.v[k], dp.u[k]});
        }
        break;
      case kThetaOp:
        value = permute_legs(theta(zeta), {1, 0});
        break;
      case kThetaCoproduct0:
        value = coproduct_on_leg(theta(zeta), 0);
        break;
      case kThetaCoproduct1:
        value = coproduct_on_leg(theta(zeta), 1);
        break;
      default:
        value = coproduct_on_leg(theta_op(zeta), 0);
        break;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(value)).first->second;
}

const Tensor& ThetaOperator::theta(const Content& zeta) const { return cached(kTheta, zeta); }
const Tensor& ThetaOperator::theta_op(const Content& zeta) const { return cached(kThetaOp, zeta); }
const Tensor& ThetaOperator::theta_coproduct(const Content& zeta, int leg) const {
  if (leg != 0 && leg != 1) throw Error("theta has legs 0 and 1");
  return cached(leg == 0 ? kThetaCoproduct0 : kThetaCoproduct1, zeta);
}
const Tensor& ThetaOperator::theta_op_coproduct(const Content& zeta) const { return cached(kThetaOpCoproduct, zeta); }

const ModuleVector& ModuleActions::act_key(const TermKey& key, int index) const {
  const auto k = std::make_pair(key, index);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
  }
  ModuleVector value = m_.act(Element(m_.algebra(), key, Scalar(1)), WeightModule::unit(index));
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(k, std::move(value)).first->second;
}

void add_to(TensorVector& v, const std::vector<int>& index, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(index);
  if (it == v.end()) {
    v.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

TensorState TensorState::basis(std::vector<const ModuleActions*> legs, std::vector<int> index) {
  if (legs.size() != index.size() || legs.empty()) throw Error("tensor basis vector needs one index per leg");
  TensorState x{std::move(legs), {}};
  x.vec.emplace(std::move(index), Scalar(1));
  return x;
}

int TensorState::depth_of(const std::vector<int>& index) const {
  int d = 0;
  for (std::size_t l = 0; l < legs.size(); ++l) d += legs[l]->module().depth_of(index[l]);
  return d;
}

std::string TensorState::to_string() const {
  if (vec.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : vec) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + " * " + tuple_label(legs, idx);
  }
  return out;
}

bool same_vector(const TensorState& a, const TensorState& b) { return a.legs == b.legs && a.vec == b.vec; }

TensorState difference(const TensorState& a, const TensorState& b) {
  if (a.legs != b.legs) throw Error("tensor vectors live on different modules");
  TensorState out = a;
  for (const auto& [idx, c] : b.vec) add_to(out.vec, idx, -c);
  return out;
}

TensorState apply_tensor(const TensorState& x, const Tensor& t, const std::vector<int>& legs) {
  if (static_cast<int>(legs.size()) != t.rank()) throw Error("tensor rank does not match the number of legs");
  TensorState out{x.legs, {}};
  for (const auto& [idx, c] : x.vec) apply_on_entry(x, idx, c, t, legs, out.vec);
  return out;
}

TensorState apply_coproduct(const TensorState& x, const Element& g) {
  const int rank = static_cast<int>(x.legs.size());
  Tensor t = rank == 1 ? Tensor::product_of({g}) : iterated_coproduct(g, rank);
  std::vector<int> legs(static_cast<std::size_t>(rank));
  for (int l = 0; l < rank; ++l) legs[static_cast<std::size_t>(l)] = l;
  return apply_tensor(x, t, legs);
}

TensorState swap_legs(const TensorState& x, int a, int b) {
  TensorState out{x.legs, {}};
  std::swap(out.legs[static_cast<std::size_t>(a)], out.legs[static_cast<std::size_t>(b)]);
  for (const auto& [idx, c] : x.vec) {
    std::vector<int> k = idx;
    std::swap(k[static_cast<std::size_t>(a)], k[static_cast<std::size_t>(b)]);
    out.vec.emplace(std::move(k), c);
  }
  return out;
}

TensorState apply_ftilde(const TensorState& x, int a, int b) { return apply_ftilde_groups(x, {a}, {b}); }

TensorState apply_ftilde_groups(const TensorState& x, const std::vector<int>& left, const std::vector<int>& right) {
  const Params& params = algebra_of(x).params();
  TensorState out{x.legs, {}};
  for (const auto& [idx, c] : x.vec)
    add_to(out.vec, idx, c * ftilde_scalar(params, weight_sum(x, idx, left), weight_sum(x, idx, right)));
  return out;
}

TensorState apply_theta(const ThetaOperator& th, const TensorState& x, int a, int b) {
  return apply_family(x, {a, b}, {b}, [&](const Content& z) -> const Tensor& { return th.theta(z); });
}

TensorState apply_theta_zeta(const ThetaOperator& th, const TensorState& x, int a, int b, const Content& zeta) {
  return apply_tensor(x, th.theta(zeta), {a, b});
}

TensorState apply_theta_coproduct(const ThetaOperator& th, const TensorState& x, int which) {
  const std::vector<int> bound = which == 0 ? std::vector<int>{2} : std::vector<int>{1, 2};
  return apply_family(x, {0, 1, 2}, bound,
                      [&](const Content& z) -> const Tensor& { return th.theta_coproduct(z, which); });
}

TensorState apply_theta_op_coproduct(const ThetaOperator& th, const TensorState& x) {
  return apply_family(x, {0, 1, 2}, {0, 1}, [&](const Content& z) -> const Tensor& { return th.theta_op_coproduct(z); });
}

TensorState apply_torus(const TensorState& x, int leg, const TorusExp& t) {
  const Algebra& alg = algebra_of(x);
  TensorState out{x.legs, {}};
  for (const auto& [idx, c] : x.vec)
    add_to(out.vec, idx, c * weight_character(alg, basis_vector(x, leg, idx[static_cast<std::size_t>(leg)]).weight, t));
  return out;
}

TensorState apply_R(const ThetaOperator& th, const TensorState& x, int a) {
  TensorState y = swap_legs(x, a, a + 1);
  y = apply_ftilde(y, a, a + 1);
  return apply_theta(th, y, a, a + 1);
}

Scalar ftilde_scalar(const Params& params, const Weight& lambda, const Weight& mu) {
  return f_form(params, lambda.eps, mu.eps);
}

// ---------------------------------------------------------------------------

BraidMap build_R(const ThetaOperator& th, const ModuleActions& mp, const ModuleActions& m, int budget) {
  const std::vector<const ModuleActions*> mods = {&mp, &m};
  check_budget(mods, budget);
  BraidMap r;
  r.first = &mp.module();
  r.second = &m.module();
  r.budget = budget;
  for (const auto& idx : basis_tuples(mods, budget))
    r.columns.emplace_back(idx, apply_R(th, TensorState::basis(mods, idx), 0).vec);
  return r;
}

Report intertwining_check(const ThetaOperator& th, const ModuleActions& mp, const ModuleActions& m, int budget) {
  const std::vector<const ModuleActions*> mods = {&mp, &m};
  check_budget(mods, budget);
  const Algebra& alg = th.algebra();
  Report report;
  report.command = "rmatrix";
  report.config = modules_config(mods, budget);
  const auto tuples = basis_tuples(mods, budget);
  for (const Generator& g : alg.generators()) {
    const Element x = Element::gen(alg, g);
    int bad = 0;
    std::string first;
    for (const auto& idx : tuples) {
      const TensorState v = TensorState::basis(mods, idx);
      const TensorState d =
          difference(apply_coproduct(apply_R(th, v, 0), x), apply_R(th, apply_coproduct(v, x), 0));
      if (!d.vec.empty() && bad++ == 0) first = tuple_label(mods, idx) + ": " + d.to_string();
    }
    report.add("Delta(" + to_string(g) + ") R = R Delta(" + to_string(g) + ")", bad == 0,
               std::to_string(bad) + " basis pairs, first " + first);
  }
  return report;
}

Report unitriangularity_check(const BraidMap& r) {
  Report report;
  report.command = "rmatrix-triangularity";
  const Params& params = r.first->algebra().params();
  int diag_bad = 0, off_bad = 0;
  for (const auto& [idx, out] : r.columns) {
    const int i = idx[0], j = idx[1];
    const auto& bi = r.first->basis()[static_cast<std::size_t>(i)];
    const auto& bj = r.second->basis()[static_cast<std::size_t>(j)];
    const Scalar expected = ftilde_scalar(params, bj.weight, bi.weight);
    auto it = out.find({j, i});
    if (it == out.end() || !(it->second == expected)) ++diag_bad;
    for (const auto& [k, c] : out) {
      if (k == std::vector<int>{j, i}) continue;
      if (r.second->depth_of(k[0]) <= height(bj.zeta)) ++off_bad;
    }
  }
  report.add("diagonal part is f~ o P", diag_bad == 0, std::to_string(diag_bad) + " columns");
  report.add("other parts lower the first-leg weight", off_bad == 0, std::to_string(off_bad) + " entries");
  return report;
}

Report theta_identities_check(const ThetaOperator& th, int max_height) {
  const Algebra& alg = th.algebra();
  const PairingContext& ctx = th.context();
  const int n = alg.n();
  Report report;
  report.command = "theta-identities";
  report.config = {{"n", config_int(n)}, {"kind", to_string(alg.kind())}, {"params", alg.params().describe()},
                   {"max_height", config_int(max_height)}};
  const Element one = Element::one(alg);
  auto check = [&](const std::string& label, const Tensor& lhs, const Tensor& rhs) {
    const Tensor d = ctx.reduce(lhs - rhs);
    report.add(label, d.is_zero(), d.to_string());
  };
  for (const Content& z : contents_up_to(n, max_height)) {
    const Tensor& t = th.theta(z);
    for (const Generator& g : alg.generators()) {
      if (!alg.is_torus(g)) continue;
      const Element x = Element::gen(alg, g);
      const Tensor gg = Tensor::product_of({x, x});
      check("(" + to_string(g) + " (x) " + to_string(g) + ") Theta" + content_label(z) + " = Theta" +
                content_label(z) + " (" + to_string(g) + " (x) " + to_string(g) + ")",
            gg * t, t * gg);
    }
    for (int i = 1; i < n; ++i) {
      const Tensor& tm = th.theta(minus_alpha(z, i));
      const Element e = Element::e(alg, i), f = Element::f(alg, i);
      const Element w = Element::torus(alg, alg.omega(i)), wp = Element::torus(alg, alg.omega_prime(i));
      const std::string zs = content_label(z), is = std::to_string(i);
      check("e" + is + " recursion at " + zs, Tensor::product_of({e, one}) * t + Tensor::product_of({w, e}) * tm,
            t * Tensor::product_of({e, one}) + tm * Tensor::product_of({wp, e}));
      check("f" + is + " recursion at " + zs, Tensor::product_of({one, f}) * t + Tensor::product_of({f, wp}) * tm,
            t * Tensor::product_of({one, f}) + tm * Tensor::product_of({f, w}));
    }
  }
  return report;
}

Report qybe_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget) {
  if (mods.size() != 3) throw Error("the Yang-Baxter check takes three modules");
  check_budget(mods, budget);
  Report report;
  report.command = "qybe";
  report.config = modules_config(mods, budget);
  for (const auto& idx : basis_tuples(mods, budget)) {
    const TensorState v = TensorState::basis(mods, idx);
    const TensorState lhs = apply_R(th, apply_R(th, apply_R(th, v, 0), 1), 0);
    const TensorState rhs = apply_R(th, apply_R(th, apply_R(th, v, 1), 0), 1);
    compare(report, "R12 R23 R12 = R23 R12 R23 on " + tuple_label(mods, idx), lhs, rhs);
  }
  return report;
}

Report hexagon_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget) {
  if (mods.size() != 3) throw Error("the hexagon check takes three modules");
  check_budget(mods, budget);
  Report report;
  report.command = "hexagon";
  report.config = modules_config(mods, budget);
  for (const auto& idx : basis_tuples(mods, budget)) {
    const TensorState v = TensorState::basis(mods, idx);
    const std::string at = " on " + tuple_label(mods, idx);
    {
      const TensorState lhs = apply_R(th, apply_R(th, v, 1), 0);
      TensorState rhs = swap_legs(swap_legs(v, 1, 2), 0, 1);
      rhs = apply_theta_coproduct(th, apply_ftilde_groups(rhs, {0}, {1, 2}), 1);
      compare(report, "R12 R23 = (1 (x) D)(Theta) f~ P12 P23" + at, lhs, rhs);
    }
    {
      const TensorState lhs = apply_R(th, apply_R(th, v, 0), 1);
      TensorState rhs = swap_legs(swap_legs(v, 0, 1), 1, 2);
      rhs = apply_theta_coproduct(th, apply_ftilde_groups(rhs, {0, 1}, {2}), 0);
      compare(report, "R23 R12 = (D (x) 1)(Theta) f~ P23 P12" + at, lhs, rhs);
    }
  }
  return report;
}

Report coproduct_dual_basis_check(const ThetaOperator& th, int max_height) {
  const Algebra& alg = th.algebra();
  const PairingContext& ctx = th.context();
  const int n = alg.n();
  Report report;
  report.command = "coproduct-dual-basis";
  report.config = {{"n", config_int(n)}, {"kind", to_string(alg.kind())}, {"params", alg.params().describe()},
                   {"max_height", config_int(max_height)}};
  const TorusExp zero = alg.zero_torus();
  for (const Content& gamma : contents_up_to(n, max_height, 1)) {
    const auto parts = box(gamma);
    for (const Word& w : words_of_content(gamma)) {
      const Element x(alg, TermKey{{}, zero, w}, Scalar(1));
      const Element y(alg, TermKey{w, zero, {}}, Scalar(1));
      Tensor rx(alg, 2), ry(alg, 2);
      for (const Content& z : parts) {
        const Content rest = minus(gamma, z);
        const DualPair outer = height(rest) == 0 ? DualPair{rest, {Element::one(alg)}, {Element::one(alg)}}
                                                 : ctx.dual_bases(rest);
        const DualPair inner =
            height(z) == 0 ? DualPair{z, {Element::one(alg)}, {Element::one(alg)}} : ctx.dual_bases(z);
        const Element wz = Element::torus(alg, alg.omega_of(z, false));
        const Element wpz = Element::torus(alg, alg.omega_of(z, true));
        for (std::size_t i = 0; i < outer.u.size(); ++i)
          for (std::size_t j = 0; j < inner.u.size(); ++j) {
            const Scalar cx = ctx.pair(outer.v[i] * inner.v[j], x);
            if (!cx.is_zero()) rx += Tensor::product_of({outer.u[i] * wz, inner.u[j]}) * cx;
            const Scalar cy = ctx.pair(y, outer.u[i] * inner.u[j]);
            if (!cy.is_zero()) ry += Tensor::product_of({inner.v[j], outer.v[i] * wpz}) * cy;
          }
      }
      std::string ws;
      for (int l : w) ws += (ws.empty() ? "" : " ") + std::to_string(l);
      const Tensor dx = ctx.reduce(coproduct(x) - rx);
      report.add("Delta(e[" + ws + "]) through dual bases", dx.is_zero(), dx.to_string());
      const Tensor dy = ctx.reduce(coproduct(y) - ry);
      report.add("Delta(f[" + ws + "]) through dual bases", dy.is_zero(), dy.to_string());
    }
  }
  return report;
}

Report theta_coproduct_check(const ThetaOperator& th, int max_height) {
  const Algebra& alg = th.algebra();
  const PairingContext& ctx = th.context();
  const int n = alg.n();
  Report report;
  report.command = "theta-coproduct";
  report.config = {{"n", config_int(n)}, {"kind", to_string(alg.kind())}, {"params", alg.params().describe()},
                   {"max_height", config_int(max_height)}};
  const Element one = Element::one(alg);
  for (const Content& gamma : contents_up_to(n, max_height)) {
    Tensor left(alg, 3), right(alg, 3);
    for (const Content& z : box(gamma)) {
      const Tensor& outer = th.theta(minus(gamma, z));
      const Tensor& inner = th.theta(z);
      const Tensor wp = Tensor::product_of({one, Element::torus(alg, alg.omega_of(z, true)), one});
      const Tensor w = Tensor::product_of({one, Element::torus(alg, alg.omega_of(z, false)), one});
      left += embed(outer, {1, 2}, 3) * embed(inner, {0, 2}, 3) * wp;
      right += embed(outer, {0, 1}, 3) * embed(inner, {0, 2}, 3) * w;
    }
    const std::string g = content_label(gamma);
    const Tensor dl = ctx.reduce(th.theta_coproduct(gamma, 0) - left);
    report.add("(D (x) 1) Theta" + g, dl.is_zero(), dl.to_string());
    const Tensor dr = ctx.reduce(th.theta_coproduct(gamma, 1) - right);
    report.add("(1 (x) D) Theta" + g, dr.is_zero(), dr.to_string());
  }
  return report;
}

Report theta_op_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget) {
  if (mods.size() != 3) throw Error("the Theta^op check takes three modules");
  check_budget(mods, budget);
  Report report;
  report.command = "theta-op";
  report.config = modules_config(mods, budget);
  for (const auto& idx : basis_tuples(mods, budget)) {
    const TensorState v = TensorState::basis(mods, idx);
    const std::string at = " on " + tuple_label(mods, idx);
    const TensorState f3132 = apply_ftilde(apply_ftilde(v, 2, 1), 2, 0);
    const TensorState lhs = apply_theta_op_coproduct(th, f3132);
    const TensorState rhs = apply_theta(th, apply_ftilde(apply_theta(th, apply_ftilde(v, 2, 1), 2, 1), 2, 0), 2, 0);
    compare(report, "(D (x) 1)(Theta^op) f~31 f~32 = Theta^f_31 Theta^f_32" + at, lhs, rhs);
    const TensorState a = apply_ftilde(apply_ftilde(apply_theta(th, v, 0, 1), 2, 1), 2, 0);
    const TensorState b = apply_theta(th, f3132, 0, 1);
    compare(report, "f~31 f~32 Theta12 = Theta12 f~31 f~32" + at, a, b);
  }
  return report;
}

Report ftilde_theta_check(const ThetaOperator& th, const std::vector<const ModuleActions*>& mods, int budget) {
  if (mods.size() != 3) throw Error("the f~ Theta check takes three modules");
  check_budget(mods, budget);
  const Algebra& alg = th.algebra();
  Report report;
  report.command = "ftilde-theta";
  report.config = modules_config(mods, budget);
  const auto etas = contents_up_to(alg.n(), budget);
  for (const auto& idx : basis_tuples(mods, budget)) {
    const TensorState v = TensorState::basis(mods, idx);
    for (const Content& eta : etas) {
      const std::string at = content_label(eta) + " on " + tuple_label(mods, idx);
      compare(report, "f~12 Theta13 at " + at, apply_ftilde(apply_theta_zeta(th, v, 0, 2, eta), 0, 1),
              apply_theta_zeta(th, apply_torus(apply_ftilde(v, 0, 1), 1, alg.omega_of(eta, false)), 0, 2, eta));
      compare(report, "f~23 Theta13 at " + at, apply_ftilde(apply_theta_zeta(th, v, 0, 2, eta), 1, 2),
              apply_theta_zeta(th, apply_torus(apply_ftilde(v, 1, 2), 1, alg.omega_of(eta, true)), 0, 2, eta));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<int> two_rho(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = n + 1 - 2 * j;
  return out;
}

namespace {

long rho_pairing(const Weight& lambda) {
  const auto rho2 = two_rho(static_cast<int>(lambda.eps.size()));
  long k = 0;
  for (std::size_t j = 0; j < rho2.size(); ++j) k += static_cast<long>(lambda.eps[j] + rho2[j]) * lambda.eps[j];
  return k;
}

// <alpha_i, lambda> in eps-coordinates.
int alpha_dot(int i, const Weight& lambda) {
  return lambda.eps[static_cast<std::size_t>(i - 1)] - lambda.eps[static_cast<std::size_t>(i)];
}

Weight plus_alpha(Weight w, int i) {
  w.eps[static_cast<std::size_t>(i - 1)] += 1;
  w.eps[static_cast<std::size_t>(i)] -= 1;
  return w;
}

}  // namespace

Scalar casimir_g(const Params& params, const Weight& lambda) { return params.half_power(rho_pairing(lambda)); }

Element casimir_element(const ThetaOperator& th, int max_height) {
  const Algebra& alg = th.algebra();
  Element out(alg);
  for (const Content& z : contents_up_to(alg.n(), max_height))
    for (const auto& [key, c] : th.theta(z).terms())
      out += antipode(Element(alg, key[0], Scalar(1))) * Element(alg, key[1], c);
  return out;
}

Report casimir_check(const ThetaOperator& th, const ModuleActions& ma, int budget) {
  const std::vector<const ModuleActions*> mods = {&ma};
  check_budget(mods, budget);
  const WeightModule& m = ma.module();
  const Algebra& alg = m.algebra();
  const Params& params = alg.params();
  const int n = alg.n();
  Report report;
  report.command = "casimir";
  report.config = modules_config(mods, budget);

  // Per zeta, pairs (S(v-leg key), coefficient, u-leg key) of Theta_zeta.
  std::map<Content, std::vector<std::pair<Element, TermKey>>> parts;
  auto parts_of = [&](const Content& z) -> const std::vector<std::pair<Element, TermKey>>& {
    auto it = parts.find(z);
    if (it != parts.end()) return it->second;
    std::vector<std::pair<Element, TermKey>> p;
    for (const auto& [key, c] : th.theta(z).terms()) p.emplace_back(antipode(Element(alg, key[0], c)), key[1]);
    return parts.emplace(z, std::move(p)).first->second;
  };
  auto omega = [&](const ModuleVector& x) {
    ModuleVector out;
    for (const auto& [b, c] : x)
      for (const Content& z : box(m.basis()[static_cast<std::size_t>(b)].zeta))
        for (const auto& [sv, u] : parts_of(z)) {
          const ModuleVector& w = ma.act_key(u, b);
          if (!w.empty()) out = combine(out, m.act(sv, w), c);
        }
    return out;
  };
  auto xi = [&](const ModuleVector& x) {
    ModuleVector out;
    for (const auto& [b, c] : x) add_to(out, b, c * casimir_g(params, m.basis()[static_cast<std::size_t>(b)].weight));
    return out;
  };
  auto omega_xi = [&](const ModuleVector& x) { return omega(xi(x)); };
  auto diff_label = [&](const ModuleVector& a, const ModuleVector& b) { return m.to_string(combine(a, b, Scalar(-1))); };

  std::vector<int> vectors;
  for (int b = 0; b < static_cast<int>(m.dim()); ++b)
    if (m.depth_of(b) <= budget) vectors.push_back(b);

  const Scalar g_lambda = casimir_g(params, m.highest_weight());
  {
    int bad = 0;
    std::string first;
    for (int b : vectors) {
      const ModuleVector x = WeightModule::unit(b);
      const ModuleVector lhs = omega_xi(x), rhs = scaled(x, g_lambda);
      if (lhs != rhs && bad++ == 0) first = diff_label(lhs, rhs);
    }
    report.add("Omega Xi = g(lambda) id, g(lambda) = " + g_lambda.to_string(), bad == 0,
               std::to_string(bad) + " vectors, first " + first);
  }
  for (const Generator& g : alg.generators()) {
    const Operator& op = m.generator(g);
    int bad = 0;
    std::string first;
    for (int b : vectors) {
      const ModuleVector x = WeightModule::unit(b);
      const ModuleVector lhs = omega_xi(apply_operator(op, x)), rhs = apply_operator(op, omega_xi(x));
      if (lhs != rhs && bad++ == 0) first = diff_label(lhs, rhs);
    }
    report.add("Omega Xi commutes with " + to_string(g), bad == 0, std::to_string(bad) + " vectors, first " + first);
  }
  for (int i = 1; i < n; ++i) {
    int bad_e = 0, bad_f = 0;
    std::string first_e, first_f;
    for (int b : vectors) {
      const ModuleVector x = WeightModule::unit(b);
      const Weight& mu = m.basis()[static_cast<std::size_t>(b)].weight;
      const ModuleVector ox = omega(x);
      const ModuleVector le = omega(apply_operator(m.e(i), x));
      const ModuleVector re = scaled(apply_operator(m.e(i), ox), params.half_power(-2L * alpha_dot(i, plus_alpha(mu, i))));
      if (le != re && bad_e++ == 0) first_e = diff_label(le, re);
      const ModuleVector lf = omega(apply_operator(m.f(i), x));
      const ModuleVector rf = scaled(apply_operator(m.f(i), ox), params.half_power(2L * alpha_dot(i, mu)));
      if (lf != rf && bad_f++ == 0) first_f = diff_label(lf, rf);
    }
    const std::string is = std::to_string(i);
    report.add("Omega e" + is + " = (r/s)^-<alpha" + is + ", mu + alpha" + is + "> e" + is + " Omega", bad_e == 0,
               std::to_string(bad_e) + " vectors, first " + first_e);
    report.add("Omega f" + is + " = (r/s)^<alpha" + is + ", mu> f" + is + " Omega", bad_f == 0,
               std::to_string(bad_f) + " vectors, first " + first_f);
    int bad_g = 0;
    for (int b : vectors) {
      const Weight& mu = m.basis()[static_cast<std::size_t>(b)].weight;
      const Weight up = plus_alpha(mu, i);
      if (!(casimir_g(params, up) == params.half_power(2L * alpha_dot(i, up)) * casimir_g(params, mu))) ++bad_g;
    }
    report.add("g(mu + alpha" + is + ") = (r/s)^<alpha" + is + ", mu + alpha" + is + "> g(mu)", bad_g == 0,
               std::to_string(bad_g) + " weights");
  }
  return report;
}

}  // namespace qgr
