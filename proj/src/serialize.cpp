#include "qgr/serialize.hpp"

#include <algorithm>

#include "qgr/error.hpp"

namespace qgr {

namespace {

Json sparse_operator(const Operator& op) {
  Json out = Json::array();
  for (std::size_t col = 0; col < op.size(); ++col)
    for (const auto& [row, c] : op[col]) out.push_back(Json::array({row, col, c.to_string()}));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

Json module_summary(const WeightModule& m) {
  return Json{{"lambda", m.highest_weight().eps}, {"depth", m.depth()}};
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(std::string("missing field ") + name);
  return j.at(name);
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Scalar& x) { return x.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (!j.is_string()) throw Error("scalar must be a string");
  return Scalar::parse(j.get<std::string>());
}

Json to_json(const TermKey& key) { return Json{{"f", key.f}, {"t", key.t}, {"e", key.e}}; }

TermKey key_from_json(const Algebra& alg, const Json& j) {
  TermKey key{field(j, "f").get<Word>(), field(j, "t").get<TorusExp>(), field(j, "e").get<Word>()};
  if (key.t.size() != alg.zero_torus().size()) throw Error("torus exponent has the wrong length");
  for (const Word* w : {&key.f, &key.e})
    for (int l : *w)
      if (l < 1 || l >= alg.n()) throw Error("letter out of range");
  return key;
}

Json to_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"key", to_json(k)}});
  return Json{{"terms", terms}};
}

Element element_from_json(const Algebra& alg, const Json& j) {
  Element x(alg);
  for (const auto& t : field(j, "terms")) x.add_term(key_from_json(alg, field(t, "key")), scalar_from_json(field(t, "coeff")));
  return x;
}

Json to_json(const Tensor& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms()) {
    Json legs = Json::array();
    for (const auto& leg : k) legs.push_back(to_json(leg));
    terms.push_back(Json{{"coeff", to_json(c)}, {"legs", legs}});
  }
  return Json{{"rank", x.rank()}, {"terms", terms}};
}

Tensor tensor_from_json(const Algebra& alg, const Json& j) {
  const int rank = field(j, "rank").get<int>();
  Tensor x(alg, rank);
  for (const auto& t : field(j, "terms")) {
    Tensor::Key key;
    for (const auto& leg : field(t, "legs")) key.push_back(key_from_json(alg, leg));
    if (static_cast<int>(key.size()) != rank) throw Error("tensor term has the wrong number of legs");
    x.add_term(key, scalar_from_json(field(t, "coeff")));
  }
  return x;
}

Json to_json(const DualPair& d) {
  Json u = Json::array(), v = Json::array();
  for (const auto& x : d.u) u.push_back(to_json(x));
  for (const auto& x : d.v) v.push_back(to_json(x));
  return Json{{"zeta", d.zeta}, {"u", u}, {"v", v}};
}

DualPair dual_pair_from_json(const Algebra& alg, const Json& j) {
  DualPair d;
  d.zeta = field(j, "zeta").get<Content>();
  for (const auto& x : field(j, "u")) d.u.push_back(element_from_json(alg, x));
  for (const auto& x : field(j, "v")) d.v.push_back(element_from_json(alg, x));
  return d;
}

Json to_json(const GradedBasis& b) {
  return Json{{"zeta", b.zeta},         {"e_words", b.e_words}, {"f_words", b.f_words},
              {"gram", matrix_json(b.gram)}, {"rank", b.rank},   {"e_reps", b.e_reps},
              {"f_reps", b.f_reps},     {"inverse", matrix_json(b.inverse)}};
}

Json to_json(const std::vector<PairingTableEntry>& table) {
  Json out = Json::array();
  for (const auto& row : table) out.push_back(Json{{"f", row.f}, {"e", row.e}, {"value", to_json(row.value)}});
  return out;
}

std::vector<PairingTableEntry> pairing_table_from_json(const Json& j) {
  std::vector<PairingTableEntry> out;
  for (const auto& row : j)
    out.push_back({field(row, "f").get<Word>(), field(row, "e").get<Word>(), scalar_from_json(field(row, "value"))});
  return out;
}

Json to_json(const WeightModule& m) {
  Json basis = Json::array();
  for (const auto& b : m.basis()) basis.push_back(Json{{"word", b.word}, {"weight", b.weight.eps}});
  Json action = Json::object();
  for (const auto& [g, op] : m.generator_matrices()) action[to_string(g)] = sparse_operator(op);
  Json out = module_summary(m);
  out["basis"] = basis;
  out["action"] = action;
  return out;
}

Json to_json(const BraidMap& r) {
  Json entries = Json::array();
  for (const auto& [col, image] : r.columns)
    for (const auto& [row, c] : image) entries.push_back(Json{{"row", row}, {"col", col}, {"value", to_json(c)}});
  return Json{{"budget", r.budget},
              {"first", module_summary(*r.first)},
              {"second", module_summary(*r.second)},
              {"entries", entries}};
}

Json to_json(const Report& r) { return to_json(ReportDocument{r, Json::object()}); }

Json to_json(const ReportDocument& d) {
  const Report& r = d.report;
  Json config = Json::object();
  for (const auto& [k, v] : r.config) config[k] = v;
  std::vector<const CheckEntry*> sorted;
  for (const auto& e : r.entries) sorted.push_back(&e);
  std::stable_sort(sorted.begin(), sorted.end(), [](const CheckEntry* a, const CheckEntry* b) { return a->label < b->label; });
  Json checks = Json::array();
  for (const CheckEntry* e : sorted) checks.push_back(Json{{"label", e->label}, {"pass", e->pass}, {"residual", e->residual}});
  Json details = d.artifacts.is_object() ? d.artifacts : Json::object();
  details["checks"] = checks;
  return Json{{"command", r.command},
              {"config", config},
              {"pass", r.pass()},
              {"residual_count", r.residual_count()},
              {"details", details}};
}

ReportDocument report_from_json(const Json& j) {
  ReportDocument d;
  d.report.command = field(j, "command").get<std::string>();
  for (const auto& [k, v] : field(j, "config").items()) d.report.config.emplace_back(k, v.get<std::string>());
  const Json& details = field(j, "details");
  for (const auto& e : field(details, "checks"))
    d.report.entries.push_back(
        {field(e, "label").get<std::string>(), field(e, "pass").get<bool>(), field(e, "residual").get<std::string>()});
  for (const auto& [k, v] : details.items())
    if (k != "checks") d.artifacts[k] = v;
  if (field(j, "pass").get<bool>() != d.report.pass() || field(j, "residual_count").get<int>() != d.report.residual_count())
    throw Error("pass / residual_count disagree with the checks");
  return d;
}

}  // namespace qgr
