#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "kaspin/geometry_lab/chart.hpp"
#include "kaspin/geometry_lab/killing.hpp"
#include "kaspin/geometry_lab/residuals.hpp"

namespace kaspin {

using Vec2d = Eigen::Vector2d;
using SurfaceFn = std::function<Jet<2>(const JetPoint<2>&)>;

// Metric F (dv)^2 + 2 K dv du + q on R^2 x X in coordinates (v, u, x, y);
// F, K and q depend on the surface point (x, y) only.
struct WalkerData {
  std::string name = "walker";
  SurfaceFn F;
  SurfaceFn K;
  JetMetricFn<2> q;
  DomainFn<2> domain;  // on (x, y); empty means everywhere
  double lambda = 1.0;
  SurfaceFn s_frak;  // empty selects s^2 = F - q*(dK, dF) / (4 lambda^2 K)
};

SurfaceChart surface_chart(const WalkerData& wd);
MetricChart walker_chart(const WalkerData& wd);

struct WalkerGauge {
  double s2 = 0.0;
  double s = 0.0;
  Vec2d ds = Vec2d::Zero();
  // s^2 < 0, or s^2 = 0 with a nonzero gradient, so s is not a smooth real function here.
  bool imaginary = false;
};

WalkerGauge walker_gauge(const WalkerData& wd, const Vec2d& xs);

// kappa = ([lambda (F - s^2) - q*(dK, dF) / (4 lambda K)] / K, 0, ds / K) in (v, u, x, y).
Vec4d walker_kappa(const WalkerData& wd, const Vec2d& xs);

// u = K dv, l = -(1/(2 lambda)) dlog K + s dv. Evaluating l throws DomainError
// where the gauge is imaginary.
KillingData walker_killing_data(const WalkerData& wd);

// hessian: nabla^q dK - dK (x) dK / (2K) - 2 lambda^2 K q
// laplacian: Delta_q K - 6 lambda^2 K
// gradient: q*(dK, dK) - 4 lambda^2 K^2
// parabolic, killing_u, killing_l, kappa_fit: the four-dimensional system for the
// assembled (u, l), skipped where the gauge is imaginary.
ResidualSet walker_residuals(const WalkerData& wd, const Vec2d& xs, const Vec2d& vu = Vec2d::Zero());

// f_equation: Delta_q F - q*(dK, dF) / K - 2 lambda^2 F
// ricci_q: |Ric^q + lambda^2 q| / |q|
ResidualSet einstein_residual(const WalkerData& wd, const Vec2d& xs);

// Four-dimensional Ricci components of the Walker metric against closed forms:
// vv: -1/2 Delta_q F + q*(dK, dF) / (2K) - F q*(dK, dK) / (2K^2)
// vu: -1/2 Delta_q K
// tx: Ric^q - nabla^q dK / K + dK (x) dK / (2K^2)
ResidualSet walker_ricci_components(const WalkerData& wd, const Vec2d& xs);

double laplacian(const MetricJet<2>& q, const Jet<2>& f);

}  // namespace kaspin
