#pragma once

#include <string>

#include "kaspin/json.hpp"
#include "kaspin/ka_core/multivector.hpp"

namespace kaspin {

// {"p":3,"q":1,"coeffs":{"":1.0,"1":2.0,"1,3":-0.5}} with 1-based ascending
// indices. Zero coefficients are omitted unless they carry a sign bit, so the
// round trip reproduces every finite coefficient exactly.
Json multivector_to_json(const Multivector& a);
Multivector multivector_from_json(const Json& j);

std::string mask_key(unsigned mask);
unsigned parse_mask_key(const std::string& key, int d);

}  // namespace kaspin
