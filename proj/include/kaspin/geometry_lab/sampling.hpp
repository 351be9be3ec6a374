#pragma once

#include <cstdint>
#include <vector>

#include "kaspin/geometry_lab/chart.hpp"

namespace kaspin {

struct Box {
  Vec4d lo;
  Vec4d hi;
};

// Additive-recurrence low-discrepancy points x_n = frac(shift + n alpha) with
// alpha_k = phi^-(k+1) for the root phi of x^5 = x + 1, and a Cranley-Patterson
// shift drawn from SplitMix64(seed). Deterministic in (box, n, seed).
std::vector<Vec4d> sample_points(const Box& box, int n, std::uint64_t seed);

}  // namespace kaspin
