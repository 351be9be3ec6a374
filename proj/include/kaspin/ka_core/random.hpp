#pragma once

#include "kaspin/ka_core/multivector.hpp"
#include "kaspin/rng.hpp"

namespace kaspin {

// Standard-normal coefficients on every basis monomial.
Multivector random_multivector(const Signature& sig, SplitMix64& rng);
Multivector random_homogeneous(const Signature& sig, int k, SplitMix64& rng);

}  // namespace kaspin
