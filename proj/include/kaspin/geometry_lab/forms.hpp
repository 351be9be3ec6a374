#pragma once

#include <functional>

#include "kaspin/geometry_lab/chart.hpp"
#include "kaspin/ka_core/multivector.hpp"

namespace kaspin {

// Coordinate-basis differential forms on a 4d chart are stored as
// Multivectors over (3,1); only the metric-free exterior operations are
// applied to them directly. Anything metric-dependent goes through a coframe.
inline constexpr Signature kChartForms{3, 1};

Multivector coord_form(const Vec4d& w);
Vec4d coord_vector(const Multivector& a);

// Orthonormal coframe theta^a = E^a_mu dx^mu with g = E^T diag(1,1,1,-1) E,
// timelike covector last and det E > 0. Throws DomainError unless g has
// signature (3,1).
Mat4d coframe(const Mat4d& g);

// Induced action of a linear map on covectors extended to all degrees.
Multivector outermorphism(const Mat4d& a, const Multivector& form);

// Hodge star of a coordinate form, with orientation dx^0 ^ dx^1 ^ dx^2 ^ dx^3.
Multivector chart_hodge(const Mat4d& g, const Multivector& form);

// 2-form <-> antisymmetric tensor with the unnormalized wedge, so u ^ l maps
// to u(x)l - l(x)u.
Mat4d two_form_tensor(const Multivector& form);

double inverse_metric_product(const Mat4d& g, const Vec4d& a, const Vec4d& b);

using FormField = std::function<Multivector(const Vec4d&)>;

struct OneFormSample {
  Vec4d w;
  Mat4d dw;  // dw(i, j) = d_i w_j
};

// A one-form field returns its covariant components and their partials.
using OneFormField = std::function<OneFormSample(const Vec4d&)>;

// Field from jet-valued components; only values and gradients are read.
OneFormField jet_one_form(std::function<JetPoint<4>(const JetPoint<4>&)> f);
// Field from plain components, partials by central differences.
OneFormField fd_one_form(std::function<Vec4d(const Vec4d&)> f, double h = 1e-5);
OneFormField constant_one_form(const Vec4d& w);
FormField one_form_values(OneFormField f);

// Exterior derivative of a one-form from its partials.
Multivector exterior_derivative(const OneFormSample& s);

// d omega by central differences with step h (1 + |x_k|).
Multivector exterior_derivative_fd(const FormField& f, const Vec4d& x, double h = 1e-5);

}  // namespace kaspin
