#pragma once

#include <span>
#include <vector>

#include "kaspin/ka_core/signature.hpp"

namespace kaspin {

// Dense element of the exterior algebra over (V*, h*). Coefficient k belongs
// to the basis monomial whose index set is the bitmask k (bit i <-> e^{i+1}),
// written in ascending order.
class Multivector {
 public:
  explicit Multivector(Signature sig);
  Multivector(Signature sig, std::vector<double> coeffs);

  static Multivector scalar(Signature sig, double c);
  static Multivector basis(Signature sig, unsigned mask, double c = 1.0);
  static Multivector vector(Signature sig, std::span<const double> comps);
  static Multivector volume(Signature sig);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const double* data() const { return coeffs_.data(); }

  double operator[](unsigned mask) const { return coeffs_[mask]; }
  double& operator[](unsigned mask) { return coeffs_[mask]; }

  double scalar_part() const { return coeffs_[0]; }
  Multivector grade(int k) const;
  // Components of the grade-1 part, length d.
  std::vector<double> vector_part() const;
  // Largest |coefficient| outside grade k.
  double off_grade_max(int k) const;
  bool is_finite() const;
  // Euclidean norm of the coefficient array.
  double norm() const;
  double max_abs() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Signature sig_;
  std::vector<double> coeffs_;
};

int grade_of(unsigned mask);

// Structure constant of e_I with e_J under the geometric product:
// e_I * e_J = blade_sign(I, J) * metric(I & J) * e_{I ^ J}.
double blade_sign(unsigned i, unsigned j);
double blade_metric(const Signature& sig, unsigned mask);

Multivector wedge(const Multivector& a, const Multivector& b);
// Interior product with the metric dual of a grade-1 theta.
Multivector contract(const Multivector& theta, const Multivector& a);
Multivector geometric_product(const Multivector& a, const Multivector& b);

Multivector pi(const Multivector& a);
Multivector tau(const Multivector& a);
Multivector pi_tau(const Multivector& a);

double ka_trace(const Multivector& a);
// *a := tau(a) * nu with nu = e^1 ^ ... ^ e^d.
Multivector hodge_star(const Multivector& a);

// Induced metric on forms, diagonal on basis monomials.
double form_metric(const Signature& sig, unsigned mask);
double form_inner(const Multivector& a, const Multivector& b);

}  // namespace kaspin
