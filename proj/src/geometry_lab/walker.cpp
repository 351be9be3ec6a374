#include "kaspin/geometry_lab/walker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kaspin/errors.hpp"
#include "kaspin/geometry_lab/curvature.hpp"

namespace kaspin {

namespace {

struct SurfaceSample {
  Jet<2> F;
  Jet<2> K;
  MetricJet<2> q;
  Eigen::Matrix2d qinv;
};

SurfaceSample sample(const WalkerData& wd, const Vec2d& xs) {
  const JetPoint<2> p = seed_point<2>(xs);
  SurfaceSample s{wd.F(p), wd.K(p), surface_chart(wd).jet(xs), {}};
  if (s.K.v == 0.0) throw DomainError("K vanishes at this point");
  s.qinv = s.q.g.inverse();
  return s;
}

double q_star(const SurfaceSample& s, const Vec2d& a, const Vec2d& b) { return a.dot(s.qinv * b); }

void require_lambda(const WalkerData& wd) {
  if (wd.lambda == 0.0 || !std::isfinite(wd.lambda))
    throw PreconditionError("the Walker system needs a finite nonzero lambda");
}

}  // namespace

SurfaceChart surface_chart(const WalkerData& wd) {
  return SurfaceChart::analytic(wd.name + "-surface", wd.q, wd.domain);
}

MetricChart walker_chart(const WalkerData& wd) {
  const WalkerData data = wd;
  JetMetricFn<4> fn = [data](const JetPoint<4>& p) {
    const JetPoint<2> s = seed_point<2>(Vec2d(p[2].v, p[3].v));
    const JetMatrix<2> q = data.q(s);
    JetMatrix<4> g{};
    g[0][0] = compose(data.F(s), p[2], p[3]);
    g[0][1] = g[1][0] = compose(data.K(s), p[2], p[3]);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g[2 + i][2 + j] = compose(q[i][j], p[2], p[3]);
    return g;
  };
  DomainFn<4> dom;
  if (wd.domain) dom = [d = wd.domain](const Vec4d& x) { return d(Vec2d(x(2), x(3))); };
  return MetricChart::analytic(wd.name, std::move(fn), std::move(dom));
}

double laplacian(const MetricJet<2>& q, const Jet<2>& f) {
  const Eigen::Matrix2d hess = covariant_hessian<2>(christoffel(q), f);
  return (q.g.inverse() * hess).trace();
}

WalkerGauge walker_gauge(const WalkerData& wd, const Vec2d& xs) {
  require_lambda(wd);
  WalkerGauge out;
  if (wd.s_frak) {
    const Jet<2> s = wd.s_frak(seed_point<2>(xs));
    out.s = s.v;
    out.s2 = s.v * s.v;
    out.ds = s.g;
    return out;
  }
  const SurfaceSample s = sample(wd, xs);
  const double l2 = wd.lambda * wd.lambda;
  const double a = q_star(s, s.K.g, s.F.g);
  out.s2 = s.F.v - a / (4.0 * l2 * s.K.v);
  Vec2d ds2;
  for (int k = 0; k < 2; ++k) {
    const Eigen::Matrix2d dqinv = -s.qinv * s.q.dg[k] * s.qinv;
    const double da = s.K.h.col(k).dot(s.qinv * s.F.g) + s.K.g.dot(s.qinv * s.F.h.col(k)) +
                      s.K.g.dot(dqinv * s.F.g);
    ds2(k) = s.F.g(k) - da / (4.0 * l2 * s.K.v) + a * s.K.g(k) / (4.0 * l2 * s.K.v * s.K.v);
  }
  const double scale = std::max({1.0, std::abs(s.F.v), std::abs(a / (4.0 * l2 * s.K.v))});
  const double tiny = 1e-13 * scale;
  if (out.s2 < -tiny) {
    out.imaginary = true;
  } else if (out.s2 <= tiny) {
    out.s2 = 0.0;
    out.imaginary = ds2.norm() > 1e-10 * scale;
  } else {
    out.s = std::sqrt(out.s2);
    out.ds = ds2 / (2.0 * out.s);
  }
  return out;
}

Vec4d walker_kappa(const WalkerData& wd, const Vec2d& xs) {
  const WalkerGauge gauge = walker_gauge(wd, xs);
  if (gauge.imaginary) throw DomainError("gauge_imaginary: s^2 < 0 at this point");
  const SurfaceSample s = sample(wd, xs);
  const double lam = wd.lambda;
  const double a = q_star(s, s.K.g, s.F.g);
  Vec4d k;
  k(0) = (lam * (s.F.v - gauge.s2) - a / (4.0 * lam * s.K.v)) / s.K.v;
  k(1) = 0.0;
  k(2) = gauge.ds(0) / s.K.v;
  k(3) = gauge.ds(1) / s.K.v;
  return k;
}

KillingData walker_killing_data(const WalkerData& wd) {
  require_lambda(wd);
  KillingData kd;
  kd.lambda = wd.lambda;
  const WalkerData data = wd;
  kd.u = [data](const Vec4d& x) {
    const Jet<2> k = data.K(seed_point<2>(Vec2d(x(2), x(3))));
    OneFormSample s{Vec4d(k.v, 0.0, 0.0, 0.0), Mat4d::Zero()};
    s.dw(2, 0) = k.g(0);
    s.dw(3, 0) = k.g(1);
    return s;
  };
  kd.l = [data](const Vec4d& x) {
    const Vec2d xs(x(2), x(3));
    const WalkerGauge gauge = walker_gauge(data, xs);
    if (gauge.imaginary) throw DomainError("gauge_imaginary: s^2 < 0 at this point");
    const Jet<2> k = data.K(seed_point<2>(xs));
    const double c = -1.0 / (2.0 * data.lambda);
    OneFormSample s{Vec4d::Zero(), Mat4d::Zero()};
    s.w(0) = gauge.s;
    for (int a = 0; a < 2; ++a) {
      s.w(2 + a) = c * k.g(a) / k.v;
      s.dw(2 + a, 0) = gauge.ds(a);
      for (int b = 0; b < 2; ++b)
        s.dw(2 + a, 2 + b) = c * (k.h(a, b) / k.v - k.g(a) * k.g(b) / (k.v * k.v));
    }
    return s;
  };
  return kd;
}

ResidualSet walker_residuals(const WalkerData& wd, const Vec2d& xs, const Vec2d& vu) {
  require_lambda(wd);
  const SurfaceSample s = sample(wd, xs);
  const double l2 = wd.lambda * wd.lambda;
  const Eigen::Matrix2d hess = covariant_hessian<2>(christoffel(s.q), s.K);
  const Eigen::Matrix2d dkdk = s.K.g * s.K.g.transpose() / (2.0 * s.K.v);
  const Eigen::Matrix2d rhs = 2.0 * l2 * s.K.v * s.q.g;
  ResidualSet r;
  r.add("hessian", scaled_residual((hess - dkdk - rhs).norm(),
                                   std::max({hess.norm(), dkdk.norm(), rhs.norm()})));
  const double lap = (s.qinv * hess).trace();
  r.add("laplacian", scaled_residual(std::abs(lap - 6.0 * l2 * s.K.v),
                                     std::max(std::abs(lap), 6.0 * l2 * std::abs(s.K.v))));
  const double grad = q_star(s, s.K.g, s.K.g);
  const double grad_rhs = 4.0 * l2 * s.K.v * s.K.v;
  r.add("gradient", scaled_residual(std::abs(grad - grad_rhs), std::max(std::abs(grad), grad_rhs)));

  if (walker_gauge(wd, xs).imaginary) {
    r.gauge_imaginary = true;
    return r;
  }
  const Vec4d x(vu(0), vu(1), xs(0), xs(1));
  // Where the surface equations fail the assembled pair need not be parabolic;
  // that defect is reported as a residual of its own instead of aborting.
  const KillingResidual kr = killing_pair_residual(walker_chart(wd), walker_killing_data(wd), x,
                                                   std::numeric_limits<double>::infinity());
  r.add("parabolic", kr.parabolic);
  r.add("killing_u", kr.r_u);
  r.add("killing_l", kr.r_l);
  const Vec4d kf = walker_kappa(wd, xs);
  r.add("kappa_fit", scaled_residual((kr.kappa - kf).norm(), std::max(kr.kappa.norm(), kf.norm())));
  return r;
}

ResidualSet einstein_residual(const WalkerData& wd, const Vec2d& xs) {
  require_lambda(wd);
  const SurfaceSample s = sample(wd, xs);
  const double l2 = wd.lambda * wd.lambda;
  const double lap = laplacian(s.q, s.F);
  const double cross = q_star(s, s.K.g, s.F.g) / s.K.v;
  const double rhs = 2.0 * l2 * s.F.v;
  ResidualSet r;
  r.add("f_equation", scaled_residual(std::abs(lap - cross - rhs),
                                      std::max({std::abs(lap), std::abs(cross), std::abs(rhs)})));
  const Eigen::Matrix2d ric = ricci(s.q);
  r.add("ricci_q", (ric + l2 * s.q.g).norm() / s.q.g.norm());
  return r;
}

ResidualSet walker_ricci_components(const WalkerData& wd, const Vec2d& xs) {
  const SurfaceSample s = sample(wd, xs);
  const Mat4d ric = ricci(walker_chart(wd).jet(Vec4d(0.0, 0.0, xs(0), xs(1))));
  const double kk = q_star(s, s.K.g, s.K.g);
  const double kf = q_star(s, s.K.g, s.F.g);
  const double vv = -0.5 * laplacian(s.q, s.F) + kf / (2.0 * s.K.v) - s.F.v * kk / (2.0 * s.K.v * s.K.v);
  const double vu = -0.5 * laplacian(s.q, s.K);
  const Eigen::Matrix2d tx = ricci(s.q) - covariant_hessian<2>(christoffel(s.q), s.K) / s.K.v +
                             s.K.g * s.K.g.transpose() / (2.0 * s.K.v * s.K.v);
  ResidualSet r;
  r.add("vv", scaled_residual(std::abs(ric(0, 0) - vv), std::max(std::abs(ric(0, 0)), std::abs(vv))));
  r.add("vu", scaled_residual(std::abs(ric(0, 1) - vu), std::max(std::abs(ric(0, 1)), std::abs(vu))));
  const Eigen::Matrix2d got = ric.block<2, 2>(2, 2);
  r.add("tx", scaled_residual((got - tx).norm(), std::max(got.norm(), tx.norm())));
  return r;
}

}  // namespace kaspin
