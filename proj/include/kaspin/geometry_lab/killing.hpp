#pragma once

#include <functional>

#include "kaspin/geometry_lab/chart.hpp"
#include "kaspin/geometry_lab/forms.hpp"
#include "kaspin/geometry_lab/residuals.hpp"

namespace kaspin {

// Parabolic pair of one-form fields for the real Killing spinor system with
// Killing constant lambda / 2; kappa is fitted when left empty.
struct KillingData {
  OneFormField u;
  OneFormField l;
  double lambda = 0.0;
  std::function<Vec4d(const Vec4d&)> kappa;
};

// Largest violation of g*(u,u) = 0, g*(u,l) = 0, g*(l,l) = 1 at x, scaled by (1 + |u|)^2.
double parabolic_defect(const Mat4d& g, const Vec4d& u, const Vec4d& l);

struct KillingResidual {
  double r_u = 0.0;  // |nabla u - lambda (u (x) l - l (x) u)|
  double r_l = 0.0;  // |nabla l - lambda (l (x) l - g) - kappa (x) u|
  Vec4d kappa = Vec4d::Zero();
  bool kappa_fitted = false;
  double symmetric_u = 0.0;  // symmetrized nabla u (Killing equation)
  double pfaffian_u = 0.0;   // |du - 2 lambda u ^ l|
  double pfaffian_l = 0.0;   // |dl - kappa ^ u|
  double parabolic = 0.0;

  ResidualSet as_set() const;
};

// Throws PreconditionError when (u, l) is not parabolic at x within parabolic_tol.
KillingResidual killing_pair_residual(const MetricChart& chart, const KillingData& kd,
                                      const Vec4d& x, double parabolic_tol = 1e-8);

// (nabla w)_ij = d_i w_j - Gamma^k_ij w_k for a one-form field on the chart.
Mat4d covariant_derivative_oneform(const MetricChart& chart, const OneFormField& w, const Vec4d& x);

}  // namespace kaspin
