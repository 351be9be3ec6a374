#include "kaspin/clifford_rep/pairing.hpp"

#include <cmath>
#include <string>

#include "kaspin/errors.hpp"

namespace kaspin {

std::string_view pairing_name(Pairing tag) { return tag == Pairing::plus ? "plus" : "minus"; }

Pairing parse_pairing(std::string_view name) {
  if (name == "plus" || name == "+") return Pairing::plus;
  if (name == "minus" || name == "-") return Pairing::minus;
  throw ParseError("pairing must be plus or minus, got \"" + std::string(name) + "\"");
}

int expected_symmetry(int d, Pairing tag) {
  static constexpr int kPlus[4] = {1, 1, -1, -1};
  static constexpr int kMinus[4] = {1, -1, -1, 1};
  const int k = (d / 2) % 4;
  return tag == Pairing::plus ? kPlus[k] : kMinus[k];
}

int symmetry_sign(const Matrix& b, double tol) {
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  if ((b.transpose() - b).cwiseAbs().maxCoeff() <= tol * scale) return 1;
  if ((b.transpose() + b).cwiseAbs().maxCoeff() <= tol * scale) return -1;
  return 0;
}

Multivector s_transpose(int s, const Multivector& a) {
  if (s != 1 && s != -1) throw PreconditionError("adjoint type s must be +1 or -1");
  return s == 1 ? tau(a) : pi_tau(a);
}

Multivector s_transpose(const PairedRep& pr, int s, const Multivector& a) {
  require_same(pr.sig(), a.signature());
  return s_transpose(s, a);
}

Matrix pairing_adjoint(const PairedRep& pr, Pairing tag, const Matrix& e) {
  const Matrix& b = pr.B(tag);
  return b.partialPivLu().solve(e.transpose() * b);
}

namespace {

void verify(const PairedRep& pr) {
  const Signature& sig = pr.sig();
  for (Pairing tag : {Pairing::plus, Pairing::minus}) {
    const Matrix& b = pr.B(tag);
    const std::string name = "B" + std::string(pairing_name(tag));
    if (std::abs(b.determinant()) < 1e-12)
      throw InvariantError(name + " degenerate for " + sig.str());
    if (pr.sigma(tag) != expected_symmetry(sig.d(), tag))
      throw InvariantError(name + " symmetry type disagrees with the k mod 4 table");
    const int s = adjoint_type(tag);
    for (unsigned m = 0; m < sig.blade_count(); ++m) {
      // gamma(x)^T B = B gamma(x^t) on every basis monomial.
      const Multivector x = Multivector::basis(sig, m);
      const Matrix lhs = pr.rep.monomials[m].transpose() * b;
      const Matrix rhs = b * quantize(pr.rep, s_transpose(s, x));
      if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12)
        throw InvariantError(name + " adjoint property fails on basis monomial " +
                             std::to_string(m) + " in " + sig.str());
    }
  }
  const double c = (sig.q / 2) % 2 == 0 ? 1.0 : -1.0;
  const Matrix& gnu = pr.rep.monomials[sig.full_mask()];
  if ((pr.Bplus - c * gnu.transpose() * pr.Bminus).cwiseAbs().maxCoeff() > 1e-12)
    throw InvariantError("B+/B- relation fails for " + sig.str());
}

}  // namespace

PairedRep build_pairings(const GammaRep& rep) {
  const Signature& sig = rep.sig;
  PairedRep pr;
  pr.rep = rep;
  const int n = rep.n;

  // Average of G^T G over the 2^{d+1} elements +-Psi(e_I).
  Matrix avg = Matrix::Zero(n, n);
  for (unsigned m = 0; m < sig.blade_count(); ++m)
    for (double sgn : {1.0, -1.0}) {
      const Matrix g = sgn * rep.monomials[m];
      avg += g.transpose() * g;
    }
  avg /= static_cast<double>(2 * sig.blade_count());
  pr.invariant_product = avg;

  const unsigned nu_plus = (1u << sig.p) - 1u;
  const unsigned nu_minus = sig.full_mask() & ~nu_plus;
  // For odd p the plus pairing uses nu+, for even p it uses nu-.
  const unsigned plus_mask = (sig.p % 2 == 1) ? nu_plus : nu_minus;
  const unsigned minus_mask = (sig.p % 2 == 1) ? nu_minus : nu_plus;

  Matrix bplus = rep.monomials[plus_mask].transpose() * avg;
  const Matrix bminus_raw = rep.monomials[minus_mask].transpose() * avg;
  bplus /= bplus.cwiseAbs().maxCoeff();

  // B+(a, b) = c B-(gamma(nu) a, b), i.e. B+ = c gamma(nu)^T B- as matrices.
  const double c = (sig.q / 2) % 2 == 0 ? 1.0 : -1.0;
  const Matrix& gnu = rep.monomials[sig.full_mask()];
  Matrix bminus = c * gnu.transpose().partialPivLu().solve(bplus);

  // The normalized B- must still be a multiple of the constructed one.
  const double scale = (bminus.cwiseProduct(bminus_raw)).sum() / bminus_raw.squaredNorm();
  if (scale == 0.0 || (bminus - scale * bminus_raw).cwiseAbs().maxCoeff() > 1e-12)
    throw InvariantError("normalized B- is not proportional to the constructed pairing");

  // Entries are exact small integers or ratios thereof; clean roundoff.
  for (Matrix* m : {&bplus, &bminus})
    for (Eigen::Index i = 0; i < m->size(); ++i) {
      double& v = m->data()[i];
      if (std::abs(v - std::round(v)) < 1e-13) v = std::round(v);
    }

  pr.Bplus = bplus;
  pr.Bminus = bminus;
  pr.sigma_plus = symmetry_sign(bplus);
  pr.sigma_minus = symmetry_sign(bminus);
  verify(pr);
  return pr;
}

PairedRep build_paired_rep(const Signature& sig) { return build_pairings(build_rep(sig)); }

Json paired_rep_to_json(const PairedRep& pr) {
  Json j = gamma_rep_to_json(pr.rep);
  auto mat = [](const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
      rows.push_back(row);
    }
    return rows;
  };
  j["Bplus"] = mat(pr.Bplus);
  j["Bminus"] = mat(pr.Bminus);
  j["sigma_plus"] = pr.sigma_plus;
  j["sigma_minus"] = pr.sigma_minus;
  return j;
}

}  // namespace kaspin
