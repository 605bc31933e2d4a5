#pragma once

// JSON and text forms of the public value types.
//
// FormalSum:
//   { "k": int,
//     "gw": [ { "theory": "GW"|"W", "shift": int, "twist": [generators],
//               "diagram": [rows]?, "t": 0|1?, "rho": 0|1? } ],
//     "meta": { "source": string, "d"?, "m"?, "r"?, "shift"?, "twist", "mode",
//               "bundle", "mu_indices"? } }
// Base-theory table:
//   { "name": string,
//     "entries": [ { "theory": "GW"|"K"|"W", "shift": int, "twist": [generators],
//                    "degree": int, "group": [cyclic orders, 0 = Z] } ] }

#include "gwcell/expr.hpp"
#include "gwcell/young.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace gwcell {

using json = nlohmann::json;

json to_json(const PicClass& c);
PicClass pic_class_from_json(const json& j);

json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const json& j);

json to_json(const LongExactSequence& les);
json to_json(const AbelianGroup& g);

/// Young enumeration listing: { "frame": [d, m], "even_only": bool,
/// "count": int, "diagrams": [ { "rows": [...], "boxes": int, "even": bool } ] }.
json young_listing_json(Frame frame, const std::vector<YoungDiagram>& diagrams, bool even_only);

BaseTheoryTable base_table_from_json(const json& j);
BaseTheoryTable load_base_table(const std::filesystem::path& path);

/// Schema checks; each returns the list of violations (empty when valid).
std::vector<std::string> validate_formal_sum_json(const json& j);
std::vector<std::string> validate_les_json(const json& j);
std::vector<std::string> validate_young_listing_json(const json& j);
std::vector<std::string> validate_base_table_json(const json& j);

/// One summand per line, K copies first.
std::string to_text(const FormalSum& s);
std::string to_text(const LongExactSequence& les);

}  // namespace gwcell
