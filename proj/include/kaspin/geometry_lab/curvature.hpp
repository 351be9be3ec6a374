#pragma once

#include <array>

#include "kaspin/geometry_lab/chart.hpp"

namespace kaspin {

// gamma[k](i, j) = Gamma^k_ij.
template <int N> using Christoffel = std::array<MatN<N>, N>;
// riemann[a][b](c, d) = R^a_{bcd}, with R(X,Y)Z = [nabla_X, nabla_Y]Z - nabla_[X,Y] Z.
template <int N> using Riemann = std::array<std::array<MatN<N>, N>, N>;

template <int N>
Christoffel<N> christoffel(const MetricJet<N>& m) {
  const MatN<N> ginv = m.g.inverse();
  Christoffel<N> gam;
  for (int k = 0; k < N; ++k) {
    gam[k].setZero();
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        double s = 0.0;
        for (int l = 0; l < N; ++l)
          s += ginv(k, l) * (m.dg[i](l, j) + m.dg[j](l, i) - m.dg[l](i, j));
        gam[k](i, j) = 0.5 * s;
      }
  }
  return gam;
}

// dgam[m][k](i, j) = d_m Gamma^k_ij.
template <int N>
std::array<Christoffel<N>, N> christoffel_derivative(const MetricJet<N>& m) {
  const MatN<N> ginv = m.g.inverse();
  std::array<Christoffel<N>, N> out;
  for (int d = 0; d < N; ++d) {
    const MatN<N> dginv = -ginv * m.dg[d] * ginv;
    for (int k = 0; k < N; ++k) {
      out[d][k].setZero();
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          double s = 0.0;
          for (int l = 0; l < N; ++l) {
            const double first = m.dg[i](l, j) + m.dg[j](l, i) - m.dg[l](i, j);
            const double second = m.d2g[d][i](l, j) + m.d2g[d][j](l, i) - m.d2g[d][l](i, j);
            s += dginv(k, l) * first + ginv(k, l) * second;
          }
          out[d][k](i, j) = 0.5 * s;
        }
    }
  }
  return out;
}

template <int N>
Riemann<N> riemann(const MetricJet<N>& m) {
  const Christoffel<N> gam = christoffel(m);
  const auto dgam = christoffel_derivative(m);
  Riemann<N> r;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      r[a][b].setZero();
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          double s = dgam[c][a](d, b) - dgam[d][a](c, b);
          for (int e = 0; e < N; ++e) s += gam[a](c, e) * gam[e](d, b) - gam[a](d, e) * gam[e](c, b);
          r[a][b](c, d) = s;
        }
    }
  return r;
}

// Ric_bd = R^a_{bad}.
template <int N>
MatN<N> ricci(const MetricJet<N>& m) {
  const Riemann<N> r = riemann(m);
  MatN<N> ric = MatN<N>::Zero();
  for (int b = 0; b < N; ++b)
    for (int d = 0; d < N; ++d)
      for (int a = 0; a < N; ++a) ric(b, d) += r[a][b](a, d);
  return ric;
}

// max |R^a_{bcd} + R^a_{cdb} + R^a_{dbc}|.
template <int N>
double first_bianchi_residual(const Riemann<N>& r) {
  double out = 0.0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          out = std::max(out, std::abs(r[a][b](c, d) + r[a][c](d, b) + r[a][d](b, c)));
  return out;
}

// max |nabla_k g_ij|.
template <int N>
double metric_compatibility_residual(const MetricJet<N>& m) {
  const Christoffel<N> gam = christoffel(m);
  double out = 0.0;
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        double s = m.dg[k](i, j);
        for (int l = 0; l < N; ++l) s -= gam[l](k, i) * m.g(l, j) + gam[l](k, j) * m.g(i, l);
        out = std::max(out, std::abs(s));
      }
  return out;
}

// (nabla w)_ij = d_i w_j - Gamma^k_ij w_k, derivative index first.
template <int N>
MatN<N> covariant_derivative(const Christoffel<N>& gam, const VecN<N>& w, const MatN<N>& dw) {
  MatN<N> out = dw;
  for (int k = 0; k < N; ++k) out -= w(k) * gam[k];
  return out;
}

// Covariant Hessian of a scalar jet.
template <int N>
MatN<N> covariant_hessian(const Christoffel<N>& gam, const Jet<N>& f) {
  return covariant_derivative<N>(gam, f.g, f.h);
}

}  // namespace kaspin
