#pragma once

#include <nlohmann/json.hpp>

namespace kaspin {

// Insertion-ordered so reports read in the order they are assembled; dumps
// are byte-deterministic either way.
using Json = nlohmann::ordered_json;

}  // namespace kaspin
