#pragma once

#include <vector>

#include "kaspin/geometry_lab/chart.hpp"
#include "kaspin/geometry_lab/forms.hpp"
#include "kaspin/geometry_lab/killing.hpp"
#include "kaspin/geometry_lab/residuals.hpp"

namespace kaspin {

// Heterotic configuration on a chart. F_A holds the curvature components in a
// basis of the adjoint bundle where the invariant pairing is diag(c).
struct HeteroticConfig {
  MetricChart chart;
  OneFormField varphi;
  FormField H;  // three-form, coordinate components
  std::vector<FormField> FA;
  std::vector<int> c;
  std::vector<OneFormField> chi;  // empty: fitted by least squares
};

// rho = *H.
Vec4d rho_at(const HeteroticConfig& hc, const Vec4d& x);

// d*rho evaluated as the divergence (1/sqrt|g|) d_mu (sqrt|g| g^{mu nu} rho_nu)
// by central differences with step h (1 + |x_mu|).
double codifferential_fd(const MetricChart& chart, const std::function<Vec4d(const Vec4d&)>& rho,
                         const Vec4d& x, double h = 1e-5);

// Least-squares chi with g*(u, chi) = 0 minimizing |F - u ^ chi|; returns the residual.
double gaugino_fit(const Mat4d& g, const Vec4d& u, const Multivector& f, Vec4d* chi = nullptr);

// dilatino_1: phi ^ u - *(rho ^ u)
// dilatino_2: phi ^ u ^ l + g*(rho, l) *u
// dilatino_3: g*(phi, l) u + *(l ^ u ^ rho)
// orth_u_phi, orth_u_rho, orth_rho_phi: the three inner products
// gaugino: max over A of |F_A - u ^ chi_A| (plus |g*(u, chi_A)| when chi is supplied)
// gravitino_u: nabla u - 1/2 (u (x) phi - phi (x) u)
// gravitino_l: nabla l - 1/2 *(rho ^ l) - kappa (x) u, kappa fitted
// coclosed_rho: d*rho
// phi_closed: d phi
ResidualSet heterotic_susy_residuals(const HeteroticConfig& hc, const KillingData& pp,
                                     const Vec4d& x);

// |dH - sum_a c_a F_A^a ^ F_A^a| with dH by central differences.
double modified_bianchi_residual(const HeteroticConfig& hc, const Vec4d& x, double h = 1e-5);

}  // namespace kaspin
