#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kaspin/clifford_rep/pairing.hpp"
#include "kaspin/rng.hpp"

namespace kaspin {

inline constexpr double kDefaultTol = 1e-9;

struct SquareResult {
  explicit SquareResult(Multivector a) : alpha(std::move(a)) {}
  Multivector alpha;
  int kappa = 1;
  Pairing pairing = Pairing::plus;
  int s = 1;
  int sigma = 1;
};

// kappa * xi (B xi)^T, the endomorphism chi -> kappa B(chi, xi) xi.
Matrix square_endomorphism(const PairedRep& pr, Pairing tag, int kappa, const Vector& xi);
SquareResult square(const PairedRep& pr, Pairing tag, int kappa, const Vector& xi);

// True when grade k of every square with pairing type (sigma, s) vanishes.
bool grade_vanishes(int k, int s, int sigma);

struct AdmissibilityReport {
  double residual_idempotent = 0.0;
  double residual_transpose = 0.0;
  double residual_sandwich = 0.0;
  int rank_witness = 0;
  bool admissible = false;
};

// Residuals are computed on E / |E| and unit-norm probes so one absolute
// tolerance serves every signature.
AdmissibilityReport check_admissible(const Matrix& b, int sigma, const Matrix& e,
                                     const std::vector<Matrix>& probes, double tol = kDefaultTol);
AdmissibilityReport check_admissible(const PairedRep& pr, Pairing tag, const Matrix& e,
                                     const std::vector<Matrix>& probes, double tol = kDefaultTol);

// Id, quantized random polyforms, every grade-1 monomial and nu.
std::vector<Multivector> default_probe_polyforms(const Signature& sig, int n_random,
                                                 SplitMix64& rng);
std::vector<Matrix> default_probes(const PairedRep& pr, int n_random, SplitMix64& rng);

struct ConditionReport {
  double symmetry = 0.0;
  double idempotent = 0.0;
  double sandwich_max = 0.0;
  bool trace_probe_found = false;
  bool is_square = false;
  std::string reason;
};

ConditionReport verify_square_conditions(const PairedRep& pr, Pairing tag, const Multivector& alpha,
                                         int n_probes = 10, std::uint64_t seed = 0,
                                         double tol = kDefaultTol);

struct Reconstruction {
  Vector xi;
  int kappa = 0;
  double residual = 0.0;
};

// Throws PreconditionError("not reconstructible") when no rank-one fit reaches tol.
Reconstruction reconstruct(const PairedRep& pr, Pairing tag, const Multivector& alpha,
                           double tol = kDefaultTol);

// 1/2 (Id + mu gamma(nu)) xi.
Vector chiral_projection(const PairedRep& pr, const Vector& xi, int mu);
// Needs p - q = 0 mod 8 so that nu squares to one.
bool check_chirality(const PairedRep& pr, const Multivector& alpha, int mu,
                     double tol = kDefaultTol);
double chirality_residual(const PairedRep& pr, const Multivector& alpha, int mu);

// |dequantize(Q) * alpha|.
double constraint_transfer(const PairedRep& pr, const Matrix& q, const Multivector& alpha);

Json verdict_to_json(const ConditionReport& report, const Reconstruction* rec);
Json spinor_to_json(const Vector& xi);
Vector spinor_from_json(const Json& j, int n);

}  // namespace kaspin
