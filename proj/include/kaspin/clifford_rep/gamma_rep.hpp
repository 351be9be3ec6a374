#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kaspin/json.hpp"
#include "kaspin/ka_core/multivector.hpp"

namespace kaspin {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Irreducible real Clifford module for p - q in {0, 2}: d matrices of size
// N = 2^{d/2} with entries in {-1, 0, 1}. monomials[I] caches Psi(e_I), the
// ascending product of the gammas in I.
struct GammaRep {
  Signature sig;
  int n = 0;
  std::vector<Matrix> gammas;
  std::vector<Matrix> monomials;
};

// Base cases (2,0) and (1,1); Cl(p+1,q+1) = Cl(p,q) x Cl(1,1) by Kronecker
// products with the Cl(1,1) volume element as the twist.
GammaRep build_rep(const Signature& sig);

// Psi_gamma, linear and multiplicative.
Matrix quantize(const GammaRep& rep, const Multivector& a);
// Inverse of quantize through the trace pairing tr(Psi(e_I)^{-1} E) / N.
Multivector dequantize(const GammaRep& rep, const Matrix& e);

Matrix kron(const Matrix& a, const Matrix& b);

Json gamma_rep_to_json(const GammaRep& rep);

}  // namespace kaspin
