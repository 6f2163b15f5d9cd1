#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "invjac/repcore.hpp"

namespace invjac {

// File schema:
// {
//   "n": 2,
//   "generators": [
//     {"name": "e", "role": "raising", "matrix": [["0","1"],["0","0"]]},
//     ...
//   ],
//   "sl2_triples": [["e","f","h"]]          // optional
// }
// Matrix entries are rational strings ("3/2", "-1"), never floats.
RepSpec repspec_from_json(const nlohmann::json& j);
nlohmann::json repspec_to_json(const RepSpec& rep);

RepSpec load_repspec_file(const std::string& path);

} // namespace invjac
