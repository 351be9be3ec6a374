#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>

#include "kaspin/errors.hpp"
#include "kaspin/geometry_lab/jet.hpp"

namespace kaspin {

template <int N> using VecN = Eigen::Matrix<double, N, 1>;
template <int N> using MatN = Eigen::Matrix<double, N, N>;
using Vec4d = VecN<4>;
using Mat4d = MatN<4>;

enum class Provenance { analytic, finite_difference };
inline const char* provenance_name(Provenance p) {
  return p == Provenance::analytic ? "analytic" : "finite-difference";
}

// Metric with first and second partials at a point: dg[k] = d_k g,
// d2g[k][l] = d_k d_l g.
template <int N>
struct MetricJet {
  MatN<N> g;
  std::array<MatN<N>, N> dg;
  std::array<std::array<MatN<N>, N>, N> d2g;
};

template <int N> using JetMetricFn = std::function<JetMatrix<N>(const JetPoint<N>&)>;
template <int N> using PlainMetricFn = std::function<MatN<N>(const VecN<N>&)>;
template <int N> using DomainFn = std::function<bool(const VecN<N>&)>;

struct FdOptions {
  bool richardson = false;
  // Relative steps: first derivatives use h1 (1 + |x_k|), second derivatives h2 (1 + |x_k|).
  double h1 = 1e-5;
  double h2 = 1e-4;
};

template <int N>
class Chart {
 public:
  static Chart analytic(std::string name, JetMetricFn<N> fn, DomainFn<N> domain = nullptr) {
    Chart c;
    c.name_ = std::move(name);
    c.prov_ = Provenance::analytic;
    c.domain_ = std::move(domain);
    c.jet_fn_ = std::move(fn);
    return c;
  }

  static Chart finite_difference(std::string name, PlainMetricFn<N> fn, DomainFn<N> domain = nullptr,
                                 FdOptions opt = {}) {
    Chart c;
    c.name_ = std::move(name);
    c.prov_ = Provenance::finite_difference;
    c.domain_ = std::move(domain);
    c.plain_fn_ = std::move(fn);
    c.fd_ = opt;
    return c;
  }

  // Same metric, derivatives from finite differences of the values only.
  Chart as_finite_difference(FdOptions opt = {}) const {
    Chart src = *this;
    return finite_difference(name_ + "-fd", [src](const VecN<N>& x) { return src.metric(x); },
                             domain_, opt);
  }

  const std::string& name() const { return name_; }
  Provenance provenance() const { return prov_; }
  bool in_domain(const VecN<N>& x) const { return !domain_ || domain_(x); }

  void require_domain(const VecN<N>& x) const {
    if (!in_domain(x)) throw DomainError("point outside the domain of chart " + name_);
  }

  MatN<N> metric(const VecN<N>& x) const {
    require_domain(x);
    if (prov_ == Provenance::finite_difference) return plain_fn_(x);
    const JetMatrix<N> m = jet_fn_(seed_point<N>(x));
    MatN<N> g;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) g(i, j) = m[i][j].v;
    return g;
  }

  MetricJet<N> jet(const VecN<N>& x) const {
    require_domain(x);
    return prov_ == Provenance::analytic ? jet_analytic(x) : jet_fd(x);
  }

 private:
  MetricJet<N> jet_analytic(const VecN<N>& x) const {
    const JetMatrix<N> m = jet_fn_(seed_point<N>(x));
    MetricJet<N> out;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        out.g(i, j) = m[i][j].v;
        for (int k = 0; k < N; ++k) {
          out.dg[k](i, j) = m[i][j].g(k);
          for (int l = 0; l < N; ++l) out.d2g[k][l](i, j) = m[i][j].h(k, l);
        }
      }
    return out;
  }

  MatN<N> at(const VecN<N>& x) const {
    if (!in_domain(x)) throw DomainError("finite-difference stencil leaves chart " + name_);
    return plain_fn_(x);
  }

  MatN<N> first(const VecN<N>& x, int k, double h) const {
    VecN<N> xp = x, xm = x;
    xp(k) += h;
    xm(k) -= h;
    return (at(xp) - at(xm)) / (2.0 * h);
  }

  MatN<N> second(const VecN<N>& x, int k, int l, double hk, double hl) const {
    if (k == l) {
      VecN<N> xp = x, xm = x;
      xp(k) += hk;
      xm(k) -= hk;
      return (at(xp) - 2.0 * at(x) + at(xm)) / (hk * hk);
    }
    VecN<N> pp = x, pm = x, mp = x, mm = x;
    pp(k) += hk; pp(l) += hl;
    pm(k) += hk; pm(l) -= hl;
    mp(k) -= hk; mp(l) += hl;
    mm(k) -= hk; mm(l) -= hl;
    return (at(pp) - at(pm) - at(mp) + at(mm)) / (4.0 * hk * hl);
  }

  MetricJet<N> jet_fd(const VecN<N>& x) const {
    MetricJet<N> out;
    out.g = at(x);
    for (int k = 0; k < N; ++k) {
      const double h = fd_.h1 * (1.0 + std::abs(x(k)));
      out.dg[k] = first(x, k, h);
      if (fd_.richardson) out.dg[k] = (4.0 * out.dg[k] - first(x, k, 2.0 * h)) / 3.0;
    }
    for (int k = 0; k < N; ++k)
      for (int l = 0; l <= k; ++l) {
        const double hk = fd_.h2 * (1.0 + std::abs(x(k)));
        const double hl = fd_.h2 * (1.0 + std::abs(x(l)));
        MatN<N> d = second(x, k, l, hk, hl);
        if (fd_.richardson) d = (4.0 * d - second(x, k, l, 2.0 * hk, 2.0 * hl)) / 3.0;
        out.d2g[k][l] = d;
        out.d2g[l][k] = d;
      }
    return out;
  }

  std::string name_;
  Provenance prov_ = Provenance::analytic;
  DomainFn<N> domain_;
  JetMetricFn<N> jet_fn_;
  PlainMetricFn<N> plain_fn_;
  FdOptions fd_;
};

using MetricChart = Chart<4>;
using SurfaceChart = Chart<2>;

}  // namespace kaspin
