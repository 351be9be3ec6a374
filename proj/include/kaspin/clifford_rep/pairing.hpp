#pragma once

#include <string_view>

#include "kaspin/clifford_rep/gamma_rep.hpp"

namespace kaspin {

enum class Pairing { plus, minus };

std::string_view pairing_name(Pairing tag);
Pairing parse_pairing(std::string_view name);
// Adjoint type: +1 for B+, -1 for B-.
constexpr int adjoint_type(Pairing tag) { return tag == Pairing::plus ? 1 : -1; }

// Symmetry type from the k = d/2 mod 4 table.
int expected_symmetry(int d, Pairing tag);

// Matrices represent pairings as B(a, b) = a^T B b.
struct PairedRep {
  GammaRep rep;
  Matrix invariant_product;
  Matrix Bplus;
  Matrix Bminus;
  int sigma_plus = 0;
  int sigma_minus = 0;

  const Matrix& B(Pairing tag) const { return tag == Pairing::plus ? Bplus : Bminus; }
  int sigma(Pairing tag) const { return tag == Pairing::plus ? sigma_plus : sigma_minus; }
  const Signature& sig() const { return rep.sig; }
  int n() const { return rep.n; }
};

// Averages the standard product over the signed monomial group, forms the
// pairings from the partial volume forms, normalizes them and verifies the
// symmetry, adjoint and B+/B- relation before returning.
PairedRep build_pairings(const GammaRep& rep);
PairedRep build_paired_rep(const Signature& sig);

// (pi^{(1-s)/2} o tau)(a).
Multivector s_transpose(int s, const Multivector& a);
Multivector s_transpose(const PairedRep& pr, int s, const Multivector& a);

// Adjoint of an endomorphism with respect to the chosen pairing.
Matrix pairing_adjoint(const PairedRep& pr, Pairing tag, const Matrix& e);

// Sign +1/-1 when b^T = +-b exactly up to tol (relative to |b|), else 0.
int symmetry_sign(const Matrix& b, double tol = 0.0);

Json paired_rep_to_json(const PairedRep& pr);

}  // namespace kaspin
