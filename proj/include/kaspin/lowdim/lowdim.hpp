#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "kaspin/json.hpp"
#include "kaspin/ka_core/multivector.hpp"
#include "kaspin/rng.hpp"

namespace kaspin {

using Vec4 = Eigen::Vector4d;

// (3,1) frame: e^1, e^2, e^3 spacelike, e^4 timelike.
inline constexpr Signature kMinkowski{3, 1};
// (2,2) frame: e^1, e^2 spacelike, e^3, e^4 timelike.
inline constexpr Signature kSplit22{2, 2};

double h31(const Vec4& a, const Vec4& b);
Multivector one_form(const Vec4& v);

// u null and nonzero, l unit spacelike, u orthogonal to l.
struct ParabolicPair {
  Vec4 u;
  Vec4 l;
};

// Largest violation of the three parabolic constraints.
double parabolic_defect(const ParabolicPair& pp);
void require_parabolic(const ParabolicPair& pp, double tol = 1e-9);

Multivector pair_to_polyform(const ParabolicPair& pp, double tol = 1e-9);
// Throws PreconditionError("not a spinor square") when alpha is not of the form u + u^l.
// l comes back in the gauge h*(l, e^4) = 0.
ParabolicPair polyform_to_pair(const Multivector& alpha, double tol = 1e-9);

enum class Equivalence { weak, plain, strong };
bool pair_equivalent(const ParabolicPair& a, const ParabolicPair& b, Equivalence mode,
                     double tol = 1e-9);

struct DegenerateFlag {
  std::vector<Vec4> w1;
  std::vector<Vec4> w2;
  std::vector<Vec4> w3;
};

DegenerateFlag pair_to_flag(const ParabolicPair& pp);
int gram_rank(const std::vector<Vec4>& span, double tol = 1e-9);
// Dimension of span(a) + span(b) equals that of each: same subspace.
bool same_span(const std::vector<Vec4>& a, const std::vector<Vec4>& b, double tol = 1e-9);

// (u, l + f u) with f = -h*(l, v) / h*(u, v), for a unit timelike v.
ParabolicPair normalize_gauge(const ParabolicPair& pp, const Vec4& v, double tol = 1e-9);

ParabolicPair random_parabolic_pair(SplitMix64& rng);

Json pair_to_json(const ParabolicPair& pp);
ParabolicPair pair_from_json(const Json& j);

// (2,0) and (1,1): squares for B+ satisfy alpha^(2) = 0 and
// (alpha^(0))^2 = h*(alpha^(1), alpha^(1)). Returns the larger violation.
double two_dim_normal_form_residual(const Multivector& alpha);

// Self-dual basis u1 = e12 + e34, u2 = e13 + e24, u3 = e14 - e23 of (2,2).
std::array<Multivector, 3> self_dual_basis_22();
Multivector self_dual_combination_22(double k1, double k2, double k3);
// True iff alpha is a self-dual 2-form of zero norm (relative tolerance).
bool check_22_chiral_square(const Multivector& alpha, double tol = 1e-9);

}  // namespace kaspin
