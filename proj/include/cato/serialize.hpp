#pragma once

#include <json.hpp>

#include "cato/chevalley.hpp"
#include "cato/integrality.hpp"
#include "cato/modules_o.hpp"
#include "cato/nilexp.hpp"
#include "cato/rootsys.hpp"

namespace cato {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Root& r);
/// Weights as arrays of exact-rational strings.
json to_json(const Weight& w);
json to_json(const RationalVector& v);
json to_json(const RootSystem& rs);
/// {symbol: "coefficient"} over the support.
json to_json(const ChevalleyTable& ct, const LieElement& z);
/// One entry {"bra", "ket", "out"} per non-zero bracket of basis elements.
json chevalley_table_json(const ChevalleyTable& ct);
/// {"lambda", "kind", "depth", "dims": {"[1,1]": 2, ...}}
json module_dims_json(const TruncatedModule& M);
/// {"[a,b]": ["c", ...], ...}
json to_json(const FormalVector& v);
json to_json(const RelationInstance& inst);
json to_json(const IntegralityReport& r);
json to_json(const std::vector<LedgerEntry>& ledger);

/// Offset key "[1,1]".
std::string offset_key(const Root& r);

Weight weight_from_json(const json& j);
Root root_from_json(const json& j);

}  // namespace cato
