#include "kaspin/ka_core/random.hpp"

namespace kaspin {

Multivector random_multivector(const Signature& sig, SplitMix64& rng) {
  Multivector m(sig);
  for (unsigned k = 0; k < m.size(); ++k) m[k] = rng.normal();
  return m;
}

Multivector random_homogeneous(const Signature& sig, int k, SplitMix64& rng) {
  Multivector m(sig);
  for (unsigned mask = 0; mask < m.size(); ++mask)
    if (grade_of(mask) == k) m[mask] = rng.normal();
  return m;
}

}  // namespace kaspin
