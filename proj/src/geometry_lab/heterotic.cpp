#include "kaspin/geometry_lab/heterotic.hpp"

#include <algorithm>
#include <cmath>

#include "kaspin/errors.hpp"
#include "kaspin/geometry_lab/curvature.hpp"

namespace kaspin {

namespace {

double scaled_norm(const Multivector& lhs, const Multivector& rhs) {
  return scaled_residual((lhs - rhs).norm(), std::max(lhs.norm(), rhs.norm()));
}

}  // namespace

Vec4d rho_at(const HeteroticConfig& hc, const Vec4d& x) {
  return coord_vector(chart_hodge(hc.chart.metric(x), hc.H(x)));
}

double codifferential_fd(const MetricChart& chart, const std::function<Vec4d(const Vec4d&)>& rho,
                         const Vec4d& x, double h) {
  auto flux = [&](const Vec4d& y, int mu) {
    const Mat4d g = chart.metric(y);
    const double vol = std::sqrt(std::abs(g.determinant()));
    return vol * g.ldlt().solve(rho(y))(mu);
  };
  double div = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const double step = h * (1.0 + std::abs(x(mu)));
    Vec4d xp = x, xm = x;
    xp(mu) += step;
    xm(mu) -= step;
    if (!chart.in_domain(xp) || !chart.in_domain(xm))
      throw DomainError("divergence stencil leaves chart " + chart.name());
    div += (flux(xp, mu) - flux(xm, mu)) / (2.0 * step);
  }
  return div / std::sqrt(std::abs(chart.metric(x).determinant()));
}

double gaugino_fit(const Mat4d& g, const Vec4d& u, const Multivector& f, Vec4d* chi) {
  // Constraint row c . chi = 0 with c = g^{-1} u; parametrize chi by its null space.
  const Vec4d c = g.ldlt().solve(u);
  Eigen::FullPivLU<Eigen::Matrix<double, 1, 4>> lu(c.transpose());
  const Eigen::MatrixXd basis = lu.kernel();
  const Multivector uf = coord_form(u);
  Eigen::MatrixXd a(6, basis.cols());
  Eigen::VectorXd b(6);
  const unsigned masks[6] = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    const Multivector w = wedge(uf, coord_form(basis.col(k)));
    for (int r = 0; r < 6; ++r) a(r, k) = w[masks[r]];
  }
  for (int r = 0; r < 6; ++r) b(r) = f[masks[r]];
  const Eigen::VectorXd z = a.completeOrthogonalDecomposition().solve(b);
  if (chi) *chi = basis * z;
  return scaled_residual((a * z - b).norm(), b.norm());
}

ResidualSet heterotic_susy_residuals(const HeteroticConfig& hc, const KillingData& pp,
                                     const Vec4d& x) {
  const MetricJet<4> m = hc.chart.jet(x);
  const Mat4d& g = m.g;
  const OneFormSample us = pp.u(x);
  const OneFormSample ls = pp.l(x);
  const OneFormSample ps = hc.varphi(x);
  const double defect = parabolic_defect(g, us.w, ls.w);
  if (!(defect <= 1e-8)) throw PreconditionError("(u, l) is not a parabolic pair at this point");

  const Vec4d rho = rho_at(hc, x);
  const Multivector u = coord_form(us.w);
  const Multivector l = coord_form(ls.w);
  const Multivector phi = coord_form(ps.w);
  const Multivector r = coord_form(rho);
  const Multivector star_u = chart_hodge(g, u);

  ResidualSet out;
  out.add("dilatino_1", scaled_norm(wedge(phi, u), chart_hodge(g, wedge(r, u))));
  out.add("dilatino_2", scaled_norm(wedge(wedge(phi, u), l),
                                    -inverse_metric_product(g, rho, ls.w) * star_u));
  out.add("dilatino_3", scaled_norm(inverse_metric_product(g, ps.w, ls.w) * u,
                                    -chart_hodge(g, wedge(wedge(l, u), r))));
  const double nu = us.w.norm();
  out.add("orth_u_phi", scaled_residual(std::abs(inverse_metric_product(g, us.w, ps.w)), nu * ps.w.norm()));
  out.add("orth_u_rho", scaled_residual(std::abs(inverse_metric_product(g, us.w, rho)), nu * rho.norm()));
  out.add("orth_rho_phi", scaled_residual(std::abs(inverse_metric_product(g, rho, ps.w)), rho.norm() * ps.w.norm()));

  double gaugino = 0.0;
  for (std::size_t a = 0; a < hc.FA.size(); ++a) {
    const Multivector f = hc.FA[a](x);
    if (a < hc.chi.size()) {
      const Vec4d chi = hc.chi[a](x).w;
      gaugino = std::max(gaugino, scaled_norm(f, wedge(u, coord_form(chi))));
      gaugino = std::max(gaugino, scaled_residual(std::abs(inverse_metric_product(g, us.w, chi)), nu * chi.norm()));
    } else {
      gaugino = std::max(gaugino, gaugino_fit(g, us.w, f));
    }
  }
  out.add("gaugino", gaugino);

  const Christoffel<4> gam = christoffel(m);
  const Mat4d nabla_u = covariant_derivative<4>(gam, us.w, us.dw);
  const Mat4d uphi = 0.5 * (us.w * ps.w.transpose() - ps.w * us.w.transpose());
  out.add("gravitino_u", scaled_residual((nabla_u - uphi).norm(), std::max(nabla_u.norm(), uphi.norm())));

  const Mat4d nabla_l = covariant_derivative<4>(gam, ls.w, ls.dw);
  const Mat4d torsion = 0.5 * two_form_tensor(chart_hodge(g, wedge(r, l)));
  const Mat4d rest = nabla_l - torsion;
  const Vec4d kappa = rest * us.w / us.w.squaredNorm();
  const Mat4d ku = kappa * us.w.transpose();
  out.add("gravitino_l", scaled_residual((rest - ku).norm(), std::max({nabla_l.norm(), torsion.norm(), ku.norm()})));

  out.add("coclosed_rho", std::abs(codifferential_fd(hc.chart, [&](const Vec4d& y) { return rho_at(hc, y); }, x)));
  out.add("phi_closed", scaled_residual(exterior_derivative(ps).norm(), ps.dw.norm()));
  return out;
}

double modified_bianchi_residual(const HeteroticConfig& hc, const Vec4d& x, double h) {
  if (hc.c.size() != hc.FA.size()) throw PreconditionError("need one pairing sign per F_A component");
  for (int k = 0; k < 4; ++k) {
    Vec4d xp = x, xm = x;
    xp(k) += h * (1.0 + std::abs(x(k)));
    xm(k) -= h * (1.0 + std::abs(x(k)));
    if (!hc.chart.in_domain(xp) || !hc.chart.in_domain(xm))
      throw DomainError("exterior derivative stencil leaves chart " + hc.chart.name());
  }
  const Multivector dh = exterior_derivative_fd(hc.H, x, h);
  Multivector ff(kChartForms);
  for (std::size_t a = 0; a < hc.FA.size(); ++a) {
    const Multivector f = hc.FA[a](x);
    ff += static_cast<double>(hc.c[a]) * wedge(f, f);
  }
  return scaled_residual((dh - ff).norm(), std::max(dh.norm(), ff.norm()));
}

}  // namespace kaspin
