#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kaspin/geometry_lab/heterotic.hpp"
#include "kaspin/geometry_lab/killing.hpp"
#include "kaspin/geometry_lab/sampling.hpp"
#include "kaspin/geometry_lab/walker.hpp"
#include "kaspin/json.hpp"

namespace kaspin {

// A chart together with whatever Killing, Walker or heterotic data the family
// carries, the resolved parameters and the default sampling box.
struct Preset {
  std::string name;
  Json params;
  MetricChart chart;
  double lambda = 0.0;
  // Ric = -3 lambda^2 g holds for the family (at perturb = 0).
  bool einstein = false;
  std::optional<KillingData> killing;
  std::optional<WalkerData> walker;
  std::optional<HeteroticConfig> heterotic;
  Box box;
};

// Coordinates are (v, u, x, y) throughout.
//   minkowski             2 dv du + dx^2 + dy^2
//   ads4                  lambda: F = K = 1/(lambda^2 y^2), q = (dx^2 + dy^2)/(lambda^2 y^2)
//   walker-generic        lambda, b: K as ads4, F = b0 + b1 x^2 + b2 y
//   ads4-deformed-poly    lambda, a: K as ads4, F = (a1 + a2 x)(a3 y + a4 / y^2)
//   ads4-deformed-bessel  lambda, c, a: K as ads4, F = (a1 e^{cx} + a2 e^{-cx})(a3 BY(cy) + a4 BJ(cy))
//   heterotic-ppwave      w, theta: 2 dv du + e^{-2 cos v}(dx^2 + dy^2), phi = (w0 + w1 sin v + w2 cos 2v) dv
// Every Walker family also takes perturb: F -> F + perturb (x^2 + y^2);
// minkowski adds perturb x^2 to g_vv and heterotic-ppwave adds perturb x dy to phi.
// Throws ParseError on an unknown name, unknown keys or invalid values.
Preset make_preset(const std::string& name, const Json& params = Json::object());
const std::vector<std::string>& preset_names();

// Preset around user-supplied Walker callbacks.
Preset walker_preset(const WalkerData& wd, const Box& box);

// Spherical Bessel combinations used by the Bessel family.
Jet<2> bessel_j(const Jet<2>& z);
Jet<2> bessel_y(const Jet<2>& z);

}  // namespace kaspin
