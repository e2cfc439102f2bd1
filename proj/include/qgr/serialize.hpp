// JSON export and import. Objects have sorted keys, Scalars appear in their
// canonical text form and arrays follow the canonical basis order, so equal
// artifacts give equal bytes.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qgr/braiding.hpp"
#include "qgr/cat_o.hpp"
#include "qgr/checks.hpp"
#include "qgr/hopf.hpp"
#include "qgr/pairing.hpp"
#include "qgr/report.hpp"

namespace qgr {

using Json = nlohmann::json;

/// A report together with the artifacts a command attaches to it. Written as
/// {command, config, pass, residual_count, details}; details holds "checks"
/// (sorted by label) and every artifact under its own key.
struct ReportDocument {
  Report report;
  Json artifacts = Json::object();
};

/// Two-space indented text with a trailing newline.
std::string dump_json(const Json& j);
/// Throws Error on malformed text.
Json parse_json(const std::string& text);

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

/// {"f": [...], "t": [...], "e": [...]}
Json to_json(const TermKey& key);
TermKey key_from_json(const Algebra& alg, const Json& j);

/// {"terms": [{"coeff", "key"}]} in the fixed term order.
Json to_json(const Element& x);
Element element_from_json(const Algebra& alg, const Json& j);

/// {"rank": k, "terms": [{"coeff", "legs": [key, ...]}]}
Json to_json(const Tensor& x);
Tensor tensor_from_json(const Algebra& alg, const Json& j);

/// {"zeta", "u": [Element...], "v": [Element...]}
Json to_json(const DualPair& d);
DualPair dual_pair_from_json(const Algebra& alg, const Json& j);

/// Words as index sequences, Gram matrix and its inverse as Scalar strings.
Json to_json(const GradedBasis& b);

/// [{"f": word, "e": word, "value": Scalar}]
Json to_json(const std::vector<PairingTableEntry>& table);
std::vector<PairingTableEntry> pairing_table_from_json(const Json& j);

/// {"lambda", "depth", "basis": [{"word", "weight"}], "action": {generator:
/// [[row, col, Scalar], ...]}}
Json to_json(const WeightModule& m);

/// {"budget", "first", "second", "entries": [{"row": [i, j], "col": [k, l],
/// "value"}]}; columns are basis pairs of M' (x) M, rows basis pairs of
/// M (x) M'.
Json to_json(const BraidMap& r);

Json to_json(const Report& r);
Json to_json(const ReportDocument& d);
ReportDocument report_from_json(const Json& j);

}  // namespace qgr
