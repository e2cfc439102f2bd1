#include "qgr/checks.hpp"

#include "qgr/error.hpp"

namespace qgr {

namespace {

std::string word_label(const Word& w) {
  std::string out;
  for (int l : w) out += (out.empty() ? "" : " ") + std::to_string(l);
  return "[" + out + "]";
}

std::string config_kind(const Algebra& alg) { return to_string(alg.kind()); }

// Number of opposite words of matching content that pair nontrivially with x.
int nonzero_pairings(const PairingContext& ctx, const Element& x, bool upper) {
  if (x.is_zero()) return 0;
  const Algebra& alg = ctx.algebra();
  const auto& key = x.terms().begin()->first;
  const Content z = content_of(upper ? key.e : key.f, alg.n());
  int bad = 0;
  for (const Word& w : words_of_content(z)) {
    const Scalar v = upper ? ctx.pair(Element(alg, TermKey{w, alg.zero_torus(), {}}, 1), x)
                           : ctx.pair(x, Element(alg, TermKey{{}, alg.zero_torus(), w}, 1));
    bad += v.is_zero() ? 0 : 1;
  }
  return bad;
}

struct AxiomCounts {
  int coassociativity = 0;
  int counit = 0;
  int antipode = 0;
};

AxiomCounts axiom_failures(const Element& x) {
  const Algebra& alg = x.algebra();
  AxiomCounts bad;
  const Tensor d = coproduct(x);
  if (!(coproduct_on_leg(d, 0) == coproduct_on_leg(d, 1))) ++bad.coassociativity;
  if (!(multiply_legs(counit_on_leg(d, 0)) == x) || !(multiply_legs(counit_on_leg(d, 1)) == x)) ++bad.counit;
  Element left(alg), right(alg);
  for (const auto& [k, c] : d.terms()) {
    const Element a(alg, k[0], c), b(alg, k[1], Scalar(1));
    left += antipode(a) * b;
    right += a * antipode(b);
  }
  const Element eps = Element::scalar(alg, counit(x));
  if (!(left == eps) || !(right == eps)) ++bad.antipode;
  return bad;
}

}  // namespace

Element random_element(std::mt19937_64& rng, const Algebra& alg, int max_length) {
  const auto gens = alg.generators();
  auto uniform = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1)); };
  RawExpr expr;
  const int terms = uniform(1, 2);
  for (int t = 0; t < terms; ++t) {
    int c = uniform(-3, 3);
    if (c == 0) c = 1;
    RawTerm term{Scalar(c) * alg.params().rs(uniform(-1, 1), uniform(-1, 1)), {}};
    const int len = uniform(0, max_length);
    for (int k = 0; k < len; ++k) term.word.push_back(gens[static_cast<std::size_t>(uniform(0, static_cast<int>(gens.size()) - 1))]);
    expr.push_back(std::move(term));
  }
  return normal_form(alg, expr);
}

Report relations_check(const PairingContext& ctx, int pair_height) {
  const Algebra& alg = ctx.algebra();
  const int n = alg.n();
  Report report;
  report.command = "relations";
  report.config = {{"n", std::to_string(n)}, {"kind", config_kind(alg)}, {"params", alg.params().describe()},
                   {"pair_height", std::to_string(pair_height)}};
  for (const auto& [rel, residual] : relation_residuals(alg)) {
    if (!rel.serre) {
      report.add("relation " + rel.name, residual.is_zero(), residual.to_string());
      continue;
    }
    if (residual.is_zero()) {
      report.add("relation " + rel.name + " pairs to zero", true);
      continue;
    }
    const auto& key = residual.terms().begin()->first;
    const bool upper = !key.e.empty();
    const int h = static_cast<int>(upper ? key.e.size() : key.f.size());
    int bad = nonzero_pairings(ctx, residual, upper);
    int products = 0;
    if (h + 1 <= pair_height)
      for (int j = 1; j < n; ++j) {
        const Element g = upper ? Element::e(alg, j) : Element::f(alg, j);
        bad += nonzero_pairings(ctx, g * residual, upper);
        bad += nonzero_pairings(ctx, residual * g, upper);
        products += 2;
      }
    report.add("relation " + rel.name + " pairs to zero (with " + std::to_string(products) + " one-letter multiples)",
               bad == 0, std::to_string(bad) + " nonzero pairings");
  }
  return report;
}

Report hopf_axioms_check(const Algebra& alg, int random_count, unsigned long long seed, int max_length) {
  Report report;
  report.command = "hopf-axioms";
  report.config = {{"n", std::to_string(alg.n())}, {"kind", config_kind(alg)}, {"params", alg.params().describe()},
                   {"random", std::to_string(random_count)}, {"seed", std::to_string(seed)},
                   {"max_length", std::to_string(max_length)}};
  for (const auto& g : alg.generators()) {
    const AxiomCounts bad = axiom_failures(Element::gen(alg, g));
    const std::string name = to_string(g);
    report.add("coassociativity on " + name, bad.coassociativity == 0, "fails");
    report.add("counit on " + name, bad.counit == 0, "fails");
    report.add("antipode on " + name, bad.antipode == 0, "fails");
  }
  std::mt19937_64 rng(seed);
  std::vector<Element> xs;
  AxiomCounts total;
  for (int k = 0; k < random_count; ++k) {
    xs.push_back(random_element(rng, alg, max_length));
    const AxiomCounts bad = axiom_failures(xs.back());
    total.coassociativity += bad.coassociativity;
    total.counit += bad.counit;
    total.antipode += bad.antipode;
  }
  int multiplicative = 0;
  for (std::size_t k = 0; k + 1 < xs.size(); k += 2)
    if (!(coproduct(xs[k] * xs[k + 1]) == coproduct(xs[k]) * coproduct(xs[k + 1]))) ++multiplicative;
  if (random_count > 0) {
    const std::string of = " on " + std::to_string(random_count) + " random elements";
    report.add("coassociativity" + of, total.coassociativity == 0, std::to_string(total.coassociativity) + " failures");
    report.add("counit" + of, total.counit == 0, std::to_string(total.counit) + " failures");
    report.add("antipode" + of, total.antipode == 0, std::to_string(total.antipode) + " failures");
    report.add("coproduct is multiplicative on " + std::to_string(random_count / 2) + " random pairs",
               multiplicative == 0, std::to_string(multiplicative) + " failures");
  }
  return report;
}

std::vector<PairingTableEntry> pairing_table(const PairingContext& ctx, int max_height) {
  std::vector<PairingTableEntry> out;
  for (const Content& z : contents_up_to(ctx.algebra().n(), max_height, 1)) {
    const auto words = words_of_content(z);
    for (const Word& f : words)
      for (const Word& e : words) out.push_back({f, e, ctx.pair_words(f, e)});
  }
  return out;
}

Report pairing_routes_check(const PairingContext& ctx, int max_height) {
  const Algebra& alg = ctx.algebra();
  Report report;
  report.command = "pairing-table";
  report.config = {{"n", std::to_string(alg.n())}, {"kind", config_kind(alg)}, {"params", alg.params().describe()},
                   {"max_height", std::to_string(max_height)}};
  for (const Content& z : contents_up_to(alg.n(), max_height, 1)) {
    const auto words = words_of_content(z);
    int bad = 0;
    std::string first;
    for (const Word& f : words)
      for (const Word& e : words) {
        const Scalar a = ctx.pair_words(f, e, PairingRoute::peel_left_f);
        for (PairingRoute route : {PairingRoute::peel_right_f, PairingRoute::peel_left_e, PairingRoute::peel_right_e})
          if (!(ctx.pair_words(f, e, route) == a) && bad++ == 0) first = word_label(f) + " " + word_label(e);
      }
    std::string zs;
    for (int x : z) zs += (zs.empty() ? "" : " ") + std::to_string(x);
    report.add("four recursions agree at content [" + zs + "]", bad == 0, std::to_string(bad) + " disagreements, first " + first);
  }
  return report;
}

Report dual_basis_check(const PairingContext& ctx, const Content& zeta) {
  const Algebra& alg = ctx.algebra();
  if (static_cast<int>(zeta.size()) != alg.n() - 1) throw Error("zeta needs n-1 entries");
  for (int x : zeta)
    if (x < 0) throw Error("zeta must lie in Q^+");
  Report report;
  report.command = "dual-basis";
  std::string zs;
  for (int x : zeta) zs += (zs.empty() ? "" : ",") + std::to_string(x);
  report.config = {{"n", std::to_string(alg.n())}, {"kind", config_kind(alg)}, {"params", alg.params().describe()},
                   {"zeta", zs}};
  const DualPair dp = ctx.dual_bases(zeta);
  int bad = 0;
  for (std::size_t j = 0; j < dp.v.size(); ++j)
    for (std::size_t k = 0; k < dp.u.size(); ++k)
      if (!(ctx.pair(dp.v[j], dp.u[k]) == Scalar(j == k ? 1 : 0))) ++bad;
  report.add("(v_j, u_k) = delta_jk", bad == 0, std::to_string(bad) + " entries");
  report.add("u and v have the same size", dp.u.size() == dp.v.size(), "sizes differ");
  return report;
}

}  // namespace qgr
