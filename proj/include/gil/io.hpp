#pragma once

#include <string>

#include <json.hpp>

#include "gil/gamma_semigroup.hpp"
#include "gil/ifs.hpp"

namespace gil {

// Structure file:
//   {"n":3,"m":1,"s_table":[[[0,0,0]],...],"g_table":[[[0],[0],[0]]],
//    "s_labels":["0","a","b"]}
// s_table indexed [a][gamma][b], g_table indexed [alpha][a][beta]; labels
// optional.
GammaSemigroup structure_from_json(const nlohmann::json& j);
nlohmann::ordered_json structure_to_json(const GammaSemigroup& g);

// IF-subset file: {"mu":["1","1/5","3/10"],"nu":["0","1/2","2/5"]}; grades as
// rational strings or exact decimal strings (whole JSON integers are accepted,
// binary floating point numbers are not).
IFSubset ifs_from_json(const nlohmann::json& j);
nlohmann::ordered_json ifs_to_json(const IFSubset& a);

// Crisp subset file: {"set":[0,2]} over the universe of the structure at hand.
CrispSubset subset_from_json(const nlohmann::json& j, int universe);
nlohmann::ordered_json subset_to_json(const CrispSubset& m);

Grade grade_from_json(const nlohmann::json& j);

nlohmann::ordered_json parse_json_text(const std::string& text, const std::string& origin);
nlohmann::ordered_json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gil
