#pragma once

#include "hookzeta/check.hpp"
#include "hookzeta/partition.hpp"
#include "hookzeta/symexpr.hpp"

#include <json.hpp>

#include <string>

namespace hookzeta {

struct CharacterTable;
class ZetaValue;

using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"basis": "h", "terms": [{"index": [2,1], "coeff": "-1/3"}, ...]}
Json symexpr_to_json(const SymExpr& e);

/// {"terms": [{"pi2_degree": 3, "coeff": "1/840"}]}
Json zeta_value_to_json(const ZetaValue& z);

/// {"n": 5, "row_order": [...], "col_order": [...], "entries": [[...]]}
Json char_table_to_json(const CharacterTable& t);
CharacterTable char_table_from_json(const Json& j);

std::string char_table_to_json_text(const CharacterTable& t);
CharacterTable char_table_from_json_text(const std::string& text);

Json check_result_to_json(const CheckResult& r);

} // namespace hookzeta
