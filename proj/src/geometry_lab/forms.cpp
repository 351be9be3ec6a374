#include "kaspin/geometry_lab/forms.hpp"

#include <cmath>

#include "kaspin/errors.hpp"

namespace kaspin {

Multivector coord_form(const Vec4d& w) {
  return Multivector::vector(kChartForms, std::span<const double>(w.data(), 4));
}

Vec4d coord_vector(const Multivector& a) {
  Vec4d v;
  for (int i = 0; i < 4; ++i) v(i) = a[1u << i];
  return v;
}

Mat4d coframe(const Mat4d& g) {
  Eigen::SelfAdjointEigenSolver<Mat4d> es(g);
  const auto& ev = es.eigenvalues();
  if (!(ev(0) < 0.0 && ev(1) > 0.0))
    throw DomainError("metric does not have signature (3,1) at this point");
  Mat4d e;
  // Rows 0..2 spacelike, row 3 timelike.
  for (int a = 0; a < 3; ++a) e.row(a) = std::sqrt(ev(a + 1)) * es.eigenvectors().col(a + 1).transpose();
  e.row(3) = std::sqrt(-ev(0)) * es.eigenvectors().col(0).transpose();
  if (e.determinant() < 0.0) e.row(0) *= -1.0;
  return e;
}

Multivector outermorphism(const Mat4d& a, const Multivector& form) {
  Multivector out(form.signature());
  std::vector<Multivector> images;
  for (int i = 0; i < 4; ++i) images.push_back(coord_form(a.col(i)));
  for (unsigned m = 0; m < form.size(); ++m) {
    if (form[m] == 0.0) continue;
    Multivector img = Multivector::scalar(form.signature(), form[m]);
    for (int i = 0; i < 4; ++i)
      if (m & (1u << i)) img = wedge(img, images[i]);
    out += img;
  }
  return out;
}

Multivector chart_hodge(const Mat4d& g, const Multivector& form) {
  const Mat4d e = coframe(g);
  const Multivector framed = outermorphism(e.inverse().transpose(), form);
  return outermorphism(e.transpose(), hodge_star(framed));
}

Mat4d two_form_tensor(const Multivector& form) {
  Mat4d t = Mat4d::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const double c = form[(1u << a) | (1u << b)];
      t(a, b) = c;
      t(b, a) = -c;
    }
  return t;
}

double inverse_metric_product(const Mat4d& g, const Vec4d& a, const Vec4d& b) {
  return a.dot(g.ldlt().solve(b));
}

OneFormField jet_one_form(std::function<JetPoint<4>(const JetPoint<4>&)> f) {
  return [f = std::move(f)](const Vec4d& x) {
    const JetPoint<4> w = f(seed_point<4>(x));
    OneFormSample s;
    for (int j = 0; j < 4; ++j) {
      s.w(j) = w[j].v;
      s.dw.col(j) = w[j].g;
    }
    return s;
  };
}

OneFormField fd_one_form(std::function<Vec4d(const Vec4d&)> f, double h) {
  return [f = std::move(f), h](const Vec4d& x) {
    OneFormSample s;
    s.w = f(x);
    for (int i = 0; i < 4; ++i) {
      const double step = h * (1.0 + std::abs(x(i)));
      Vec4d xp = x, xm = x;
      xp(i) += step;
      xm(i) -= step;
      s.dw.row(i) = ((f(xp) - f(xm)) / (2.0 * step)).transpose();
    }
    return s;
  };
}

OneFormField constant_one_form(const Vec4d& w) {
  return [w](const Vec4d&) { return OneFormSample{w, Mat4d::Zero()}; };
}

FormField one_form_values(OneFormField f) {
  return [f = std::move(f)](const Vec4d& x) { return coord_form(f(x).w); };
}

Multivector exterior_derivative(const OneFormSample& s) {
  Multivector out(kChartForms);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out[(1u << i) | (1u << j)] = s.dw(i, j) - s.dw(j, i);
  return out;
}

Multivector exterior_derivative_fd(const FormField& f, const Vec4d& x, double h) {
  Multivector out(kChartForms);
  for (int k = 0; k < 4; ++k) {
    const double step = h * (1.0 + std::abs(x(k)));
    Vec4d xp = x, xm = x;
    xp(k) += step;
    xm(k) -= step;
    const Multivector deriv = (f(xp) - f(xm)) * (1.0 / (2.0 * step));
    out += wedge(Multivector::basis(kChartForms, 1u << k), deriv);
  }
  return out;
}

}  // namespace kaspin
