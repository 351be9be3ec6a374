#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

namespace kaspin {

// Second-order forward-mode jet in N variables: value, gradient and Hessian
// propagated through arithmetic and the elementary functions below.
template <int N>
struct Jet {
  using Grad = Eigen::Matrix<double, N, 1>;
  using Hess = Eigen::Matrix<double, N, N>;

  double v = 0.0;
  Grad g = Grad::Zero();
  Hess h = Hess::Zero();

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT: constants promote implicitly
  Jet(double value, const Grad& grad, const Hess& hess) : v(value), g(grad), h(hess) {}

  static Jet variable(double value, int i) {
    Jet j(value);
    j.g(i) = 1.0;
    return j;
  }

  // f(a) given f, f', f'' at a.v.
  Jet apply(double f, double df, double d2f) const {
    return Jet(f, df * g, df * h + d2f * (g * g.transpose()));
  }

  Jet& operator+=(const Jet& o) { v += o.v; g += o.g; h += o.h; return *this; }
  Jet& operator-=(const Jet& o) { v -= o.v; g -= o.g; h -= o.h; return *this; }
  Jet& operator*=(const Jet& o) {
    h = h * o.v + v * o.h + g * o.g.transpose() + o.g * g.transpose();
    g = g * o.v + v * o.g;
    v *= o.v;
    return *this;
  }
  Jet& operator/=(const Jet& o) { return *this *= o.apply(1.0 / o.v, -1.0 / (o.v * o.v), 2.0 / (o.v * o.v * o.v)); }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator-(const Jet& a) { return Jet(-a.v, -a.g, -a.h); }
};

template <int N> Jet<N> sin(const Jet<N>& a) { return a.apply(std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
template <int N> Jet<N> cos(const Jet<N>& a) { return a.apply(std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
template <int N> Jet<N> exp(const Jet<N>& a) { const double e = std::exp(a.v); return a.apply(e, e, e); }
template <int N> Jet<N> log(const Jet<N>& a) { return a.apply(std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }
template <int N> Jet<N> sqrt(const Jet<N>& a) {
  const double s = std::sqrt(a.v);
  return a.apply(s, 0.5 / s, -0.25 / (s * a.v));
}
template <int N> Jet<N> pow(const Jet<N>& a, double k) {
  return a.apply(std::pow(a.v, k), k * std::pow(a.v, k - 1.0), k * (k - 1.0) * std::pow(a.v, k - 2.0));
}

// F(x(.), y(.)) for a jet F in two variables evaluated at (x.v, y.v) and
// inner jets x, y in N variables.
template <int N>
Jet<N> compose(const Jet<2>& f, const Jet<N>& x, const Jet<N>& y) {
  Jet<N> out(f.v);
  out.g = f.g(0) * x.g + f.g(1) * y.g;
  out.h = f.g(0) * x.h + f.g(1) * y.h + f.h(0, 0) * (x.g * x.g.transpose()) +
          f.h(1, 1) * (y.g * y.g.transpose()) +
          f.h(0, 1) * (x.g * y.g.transpose() + y.g * x.g.transpose());
  return out;
}

template <int N> using JetPoint = std::array<Jet<N>, N>;
template <int N> using JetMatrix = std::array<std::array<Jet<N>, N>, N>;

template <int N>
JetPoint<N> seed_point(const Eigen::Matrix<double, N, 1>& x) {
  JetPoint<N> p;
  for (int i = 0; i < N; ++i) p[i] = Jet<N>::variable(x(i), i);
  return p;
}

}  // namespace kaspin
