#include "kaspin/geometry_lab/killing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kaspin/errors.hpp"
#include "kaspin/geometry_lab/curvature.hpp"

namespace kaspin {

double parabolic_defect(const Mat4d& g, const Vec4d& u, const Vec4d& l) {
  const double uu = inverse_metric_product(g, u, u);
  const double ul = inverse_metric_product(g, u, l);
  const double ll = inverse_metric_product(g, l, l);
  const double scale = (1.0 + u.norm()) * (1.0 + u.norm());
  return std::max({std::abs(uu), std::abs(ul), std::abs(ll - 1.0)}) / scale;
}

Mat4d covariant_derivative_oneform(const MetricChart& chart, const OneFormField& w, const Vec4d& x) {
  const OneFormSample s = w(x);
  return covariant_derivative<4>(christoffel(chart.jet(x)), s.w, s.dw);
}

ResidualSet KillingResidual::as_set() const {
  ResidualSet r;
  r.add("r_u", r_u);
  r.add("r_l", r_l);
  r.add("symmetric_u", symmetric_u);
  r.add("pfaffian_u", pfaffian_u);
  r.add("pfaffian_l", pfaffian_l);
  return r;
}

KillingResidual killing_pair_residual(const MetricChart& chart, const KillingData& kd,
                                      const Vec4d& x, double parabolic_tol) {
  const MetricJet<4> m = chart.jet(x);
  const Christoffel<4> gam = christoffel(m);
  const OneFormSample us = kd.u(x);
  const OneFormSample ls = kd.l(x);
  const Vec4d& u = us.w;
  const Vec4d& l = ls.w;

  KillingResidual out;
  out.parabolic = parabolic_defect(m.g, u, l);
  if (!(out.parabolic <= parabolic_tol))
    throw PreconditionError("(u, l) is not a parabolic pair at this point (defect " +
                            std::to_string(out.parabolic) + ")");

  const double lam = kd.lambda;
  const Mat4d nu = covariant_derivative<4>(gam, u, us.dw);
  const Mat4d nl = covariant_derivative<4>(gam, l, ls.dw);
  const Mat4d ul = u * l.transpose() - l * u.transpose();
  out.r_u = scaled_residual((nu - lam * ul).norm(), std::max(nu.norm(), std::abs(lam) * ul.norm()));
  out.symmetric_u = scaled_residual((nu + nu.transpose()).norm() / 2.0, nu.norm());

  const Mat4d ll = lam * (l * l.transpose() - m.g);
  const Mat4d rest = nl - ll;
  const double uu = u.squaredNorm();
  if (kd.kappa) {
    out.kappa = kd.kappa(x);
  } else {
    if (uu == 0.0) throw PreconditionError("u vanishes, kappa cannot be fitted");
    out.kappa = rest * u / uu;
    out.kappa_fitted = true;
  }
  const Mat4d ku = out.kappa * u.transpose();
  out.r_l = scaled_residual((rest - ku).norm(), std::max({nl.norm(), ll.norm(), ku.norm()}));

  const Mat4d du = us.dw - us.dw.transpose();
  const Mat4d dl = ls.dw - ls.dw.transpose();
  out.pfaffian_u = scaled_residual((du - 2.0 * lam * ul).norm(), std::max(du.norm(), 2.0 * std::abs(lam) * ul.norm()));
  const Mat4d kwu = ku - ku.transpose();
  out.pfaffian_l = scaled_residual((dl - kwu).norm(), std::max(dl.norm(), kwu.norm()));
  return out;
}

}  // namespace kaspin
