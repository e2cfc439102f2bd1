#include "qgr/cat_o.hpp"

#include <algorithm>

namespace qgr {

Weight Weight::minus(const Content& zeta) const {
  Weight out = *this;
  for (std::size_t k = 0; k < out.eps.size(); ++k) out.eps[k] -= eps_dot(static_cast<int>(k) + 1, zeta);
  return out;
}

std::string Weight::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < eps.size(); ++k) out += (k ? " " : "") + std::to_string(eps[k]);
  return out + "]";
}

Scalar weight_character(const Algebra& alg, const Weight& lambda, const TorusExp& t) {
  const int n = alg.n();
  if (static_cast<int>(lambda.eps.size()) != n) throw Error("weight must have " + std::to_string(n) + " coordinates");
  auto lam = [&](int i) { return lambda.eps[static_cast<std::size_t>(i - 1)]; };
  int x = 0, y = 0;
  if (alg.kind() == Kind::gl) {
    for (int i = 1; i <= n; ++i) {
      x += t[static_cast<std::size_t>(i - 1)] * lam(i);
      y += t[static_cast<std::size_t>(n + i - 1)] * lam(i);
    }
  } else {
    for (int j = 1; j < n; ++j) {
      const int w = t[static_cast<std::size_t>(j - 1)], wp = t[static_cast<std::size_t>(n - 1 + j - 1)];
      x += w * lam(j) + wp * lam(j + 1);
      y += w * lam(j + 1) + wp * lam(j);
    }
  }
  return alg.params().rs(x, y);
}

Report character_injectivity_check(const Algebra& alg, int bound) {
  const int n = alg.n();
  Report report;
  report.command = "prop35";
  report.config = {{"n", std::to_string(n)}, {"kind", to_string(alg.kind())}, {"bound", std::to_string(bound)},
                   {"params", alg.params().describe()}};
  std::map<std::string, Content> seen;
  Content zeta(static_cast<std::size_t>(n - 1), -bound);
  long points = 0;
  std::vector<std::string> collisions;
  while (true) {
    std::vector<int> alpha(zeta.begin(), zeta.end());
    alpha.push_back(0);
    const Weight w = Weight::from_alpha(alpha);
    std::string key;
    for (int j = 1; j < n; ++j)
      key += weight_character(alg, w, alg.omega(j)).to_string() + ";" + weight_character(alg, w, alg.omega_prime(j)).to_string() + ";";
    ++points;
    auto [it, inserted] = seen.emplace(key, zeta);
    if (!inserted) {
      std::string a, b;
      for (int v : it->second) a += std::to_string(v) + " ";
      for (int v : zeta) b += std::to_string(v) + " ";
      collisions.push_back("[" + a + "] vs [" + b + "]");
    }
    std::size_t k = 0;
    while (k < zeta.size()) {
      if (++zeta[k] <= bound) break;
      zeta[k] = -bound;
      ++k;
    }
    if (k == zeta.size()) break;
  }
  std::string detail;
  for (const auto& c : collisions) detail += (detail.empty() ? "" : ", ") + c;
  report.add("distinct characters on " + std::to_string(points) + " lattice points", collisions.empty(), detail);
  return report;
}

void add_to(ModuleVector& v, int index, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(index);
  if (it == v.end()) {
    v.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

ModuleVector apply_operator(const Operator& op, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [k, c] : v)
    for (const auto& [j, d] : op[static_cast<std::size_t>(k)]) add_to(out, j, c * d);
  return out;
}

ModuleVector scaled(const ModuleVector& v, const Scalar& c) {
  ModuleVector out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : v) out.emplace(k, x * c);
  return out;
}

ModuleVector combine(const ModuleVector& a, const ModuleVector& b, const Scalar& cb) {
  ModuleVector out = a;
  for (const auto& [k, x] : b) add_to(out, k, x * cb);
  return out;
}

WeightModule::WeightModule(const PairingContext& ctx, Weight lambda, int depth)
    : ctx_(&ctx), lambda_(std::move(lambda)), depth_(depth) {
  const Algebra& alg = ctx.algebra();
  if (static_cast<int>(lambda_.eps.size()) != alg.n()) throw Error("weight must have " + std::to_string(alg.n()) + " coordinates");
  if (depth < 1) throw Error("depth must be at least 1");
  if (depth > ctx.height_cutoff())
    throw CutoffExceeded("depth " + std::to_string(depth) + " exceeds the configured cutoff " + std::to_string(ctx.height_cutoff()));
  for (const auto& zeta : contents_up_to(alg.n(), depth)) {
    const auto gb = ctx.graded_basis(zeta);
    for (int idx : gb->f_reps) {
      const Word& w = gb->f_words[static_cast<std::size_t>(idx)];
      index_[w] = static_cast<int>(basis_.size());
      basis_.push_back({w, zeta, lambda_.minus(zeta)});
    }
  }
  for (const Generator& g : alg.generators()) {
    Operator op(basis_.size());
    if (alg.is_torus(g)) {
      const TorusExp t = alg.torus_of(g);
      for (std::size_t k = 0; k < basis_.size(); ++k) op[k] = {{static_cast<int>(k), weight_character(alg, basis_[k].weight, t)}};
    } else {
      const Element x = Element::gen(alg, g);
      for (std::size_t k = 0; k < basis_.size(); ++k) op[k] = act(x, unit(static_cast<int>(k)));
    }
    gens_.emplace_back(g, std::move(op));
  }
}

int WeightModule::index_of(const Word& rep) const {
  auto it = index_.find(rep);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> WeightModule::layer(const Content& zeta) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].zeta == zeta) out.push_back(static_cast<int>(k));
  return out;
}

ModuleVector WeightModule::vector_of(const Element& y) const {
  const Algebra& alg = algebra();
  ModuleVector out;
  for (const auto& [k, c] : y.terms()) {
    if (!k.e.empty()) continue;
    if (static_cast<int>(k.f.size()) > depth_) continue;
    const Scalar coeff = c * weight_character(alg, lambda_, k.t);
    if (k.f.empty()) {
      add_to(out, 0, coeff);
      continue;
    }
    const auto gb = ctx_->graded_basis(content_of(k.f, alg.n()));
    const auto coords = ctx_->f_coordinates(k.f);
    for (int a = 0; a < gb->rank; ++a) {
      const Scalar& x = coords[static_cast<std::size_t>(a)];
      if (x.is_zero()) continue;
      add_to(out, index_.at(gb->f_words[static_cast<std::size_t>(gb->f_reps[static_cast<std::size_t>(a)])]), coeff * x);
    }
  }
  return out;
}

ModuleVector WeightModule::act(const Element& x, const ModuleVector& m) const {
  const Algebra& alg = algebra();
  ModuleVector out;
  for (const auto& [b, c] : m) {
    const TermKey fb{basis_[static_cast<std::size_t>(b)].word, alg.zero_torus(), {}};
    for (const auto& [kx, cx] : x.terms()) {
      const ModuleVector part = vector_of(multiply_keys(alg, kx, fb));
      for (const auto& [j, d] : part) add_to(out, j, d * c * cx);
    }
  }
  return out;
}

const Operator& WeightModule::generator(const Generator& g) const {
  for (const auto& [h, op] : gens_)
    if (h == g) return op;
  throw Error("generator " + qgr::to_string(g) + " does not belong to this algebra");
}

Operator WeightModule::torus(const TorusExp& t) const {
  Operator op(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) op[k] = {{static_cast<int>(k), weight_character(algebra(), basis_[k].weight, t)}};
  return op;
}

ModuleVector WeightModule::act_word(const std::vector<Generator>& word, const ModuleVector& m) const {
  ModuleVector v = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_operator(generator(*it), v);
  return v;
}

GeneratorMatrices WeightModule::generator_matrices() const { return gens_; }

std::string WeightModule::to_string(const ModuleVector& m) const {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : m) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + " * f[";
    const Word& w = basis_[static_cast<std::size_t>(k)].word;
    for (std::size_t p = 0; p < w.size(); ++p) out += (p ? " " : "") + std::to_string(w[p]);
    out += "]v";
  }
  return out;
}

namespace {

const Operator& lookup(const GeneratorMatrices& mats, const Generator& g) {
  for (const auto& [h, op] : mats)
    if (h == g) return op;
  throw Error("no matrix for generator " + to_string(g));
}

}  // namespace

Report module_relation_audit(const WeightModule& m, const GeneratorMatrices& mats) {
  const Algebra& alg = m.algebra();
  Report report;
  report.command = "module-relation-audit";
  report.config = {{"n", std::to_string(alg.n())}, {"kind", to_string(alg.kind())}, {"lambda", m.highest_weight().to_string()},
                   {"depth", std::to_string(m.depth())}};
  for (const Relation& rel : alg.defining_relations()) {
    // Checked on vectors deep enough that no intermediate step is truncated.
    int raise = 0;
    for (const auto& term : rel.expr)
      raise = std::max<int>(raise, static_cast<int>(std::count_if(term.word.begin(), term.word.end(), [](const Generator& g) { return g.kind == GenKind::F; })));
    const int limit = m.depth() - std::max(raise, 2);
    std::string failure;
    for (int k = 0; k < static_cast<int>(m.dim()) && failure.empty(); ++k) {
      if (m.depth_of(k) > limit) continue;
      ModuleVector total;
      for (const auto& term : rel.expr) {
        ModuleVector v = WeightModule::unit(k);
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) v = apply_operator(lookup(mats, *it), v);
        total = combine(total, v, term.coeff);
      }
      if (!total.empty()) failure = "on " + m.to_string(WeightModule::unit(k)) + ": " + m.to_string(total);
    }
    report.add(rel.name, failure.empty(), failure);
  }
  return report;
}

Report module_relation_audit(const WeightModule& m) { return module_relation_audit(m, m.generator_matrices()); }

}  // namespace qgr
