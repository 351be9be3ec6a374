#include "kaspin/geometry_lab/sampling.hpp"

#include <cmath>

#include "kaspin/errors.hpp"
#include "kaspin/rng.hpp"

namespace kaspin {

namespace {

double plastic_root_4d() {
  // Fixed point iteration for phi = (1 + phi)^(1/5).
  double phi = 1.0;
  for (int i = 0; i < 100; ++i) phi = std::pow(1.0 + phi, 0.2);
  return phi;
}

}  // namespace

std::vector<Vec4d> sample_points(const Box& box, int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("need at least one sample point");
  const double phi = plastic_root_4d();
  Vec4d alpha, shift;
  SplitMix64 rng(seed);
  for (int k = 0; k < 4; ++k) {
    alpha(k) = std::pow(phi, -(k + 1));
    shift(k) = rng.uniform();
  }
  std::vector<Vec4d> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec4d x;
    for (int k = 0; k < 4; ++k) {
      double t = shift(k) + (i + 1) * alpha(k);
      t -= std::floor(t);
      x(k) = box.lo(k) + (box.hi(k) - box.lo(k)) * t;
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace kaspin
