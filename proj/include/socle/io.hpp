#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "socle/embedding.hpp"
#include "socle/switching.hpp"
#include "socle/tableau.hpp"

namespace socle {

using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"alpha","beta","gamma","grid"}; grid rows follow the rows of beta, 0 marks
// a gamma box.
Json tableau_to_json(const SkewTableau& t);
// Throws InvalidTableau (also when "alpha" disagrees with the entries).
SkewTableau tableau_from_json(const Json& j);

// {"prime","beta","generators"}; needs a standard ambient module.
Json embedding_to_json(const Embedding& x);
Embedding embedding_from_json(const Json& j);

// {"L","M","h"} with null below the diagonal (l > m).
Json hom_to_json(const HomMatrix& h);
HomMatrix hom_from_json(const Json& j);

// {"beta","grid","owner"}: values and owners ("S"/"T") cell by cell.
Json switch_state_to_json(const SwitchState& st);
Json swap_to_json(const SwapRecord& s);

// One character per box: '.' for gamma boxes, digits for entries and [n]
// for entries of 10 and more.
std::vector<std::string> render_tableau(const SkewTableau& t);
std::vector<std::string> render_hom(const HomMatrix& h);
std::vector<std::string> render_switch_state(const SwitchState& st);
// Blocks next to each other, each under its title.
std::string side_by_side(const std::vector<std::pair<std::string, std::vector<std::string>>>& blocks);

Json read_json_file(const std::string& path);

}  // namespace socle
