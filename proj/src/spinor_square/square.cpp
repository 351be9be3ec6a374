#include "kaspin/spinor_square/square.hpp"

#include <cmath>

#include "kaspin/errors.hpp"
#include "kaspin/ka_core/random.hpp"

namespace kaspin {

Matrix square_endomorphism(const PairedRep& pr, Pairing tag, int kappa, const Vector& xi) {
  if (xi.size() != pr.n()) throw PreconditionError("spinor length does not match representation");
  if (kappa != 1 && kappa != -1) throw PreconditionError("kappa must be +1 or -1");
  return static_cast<double>(kappa) * xi * (pr.B(tag) * xi).transpose();
}

SquareResult square(const PairedRep& pr, Pairing tag, int kappa, const Vector& xi) {
  SquareResult r(dequantize(pr.rep, square_endomorphism(pr, tag, kappa, xi)));
  r.kappa = kappa;
  r.pairing = tag;
  r.s = adjoint_type(tag);
  r.sigma = pr.sigma(tag);
  return r;
}

bool grade_vanishes(int k, int s, int sigma) {
  const int a = (k * (1 - s) / 2) % 2 == 0 ? 1 : -1;
  const int b = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  return a * b == -sigma;
}

namespace {

double fro(const Matrix& m) { return m.norm(); }

int numerical_rank(const Matrix& e, double tol) {
  if (e.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(e);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

}  // namespace

AdmissibilityReport check_admissible(const Matrix& b, int sigma, const Matrix& e,
                                     const std::vector<Matrix>& probes, double tol) {
  if (probes.empty()) throw PreconditionError("check_admissible needs at least one probe");
  AdmissibilityReport rep;
  const double ne = fro(e);
  rep.rank_witness = numerical_rank(e, 1e-10);
  if (ne == 0.0) {
    rep.admissible = true;
    return rep;
  }
  const Matrix u = e / ne;
  rep.residual_idempotent = fro(u * u - u.trace() * u);
  const Matrix adj = b.partialPivLu().solve(u.transpose() * b);
  rep.residual_transpose = fro(adj - sigma * u);
  bool nonzero_trace = false;
  for (const Matrix& a0 : probes) {
    const double na = fro(a0);
    if (na == 0.0) continue;
    const Matrix a = a0 / na;
    const double t = (u * a).trace();
    if (std::abs(t) > tol) nonzero_trace = true;
    rep.residual_sandwich = std::max(rep.residual_sandwich, fro(u * a * u - t * u));
  }
  rep.admissible = rep.residual_idempotent <= tol && rep.residual_transpose <= tol &&
                   rep.residual_sandwich <= tol && nonzero_trace;
  return rep;
}

AdmissibilityReport check_admissible(const PairedRep& pr, Pairing tag, const Matrix& e,
                                     const std::vector<Matrix>& probes, double tol) {
  return check_admissible(pr.B(tag), pr.sigma(tag), e, probes, tol);
}

std::vector<Multivector> default_probe_polyforms(const Signature& sig, int n_random,
                                                 SplitMix64& rng) {
  std::vector<Multivector> out;
  out.push_back(Multivector::scalar(sig, 1.0));
  for (int i = 0; i < n_random; ++i) out.push_back(random_multivector(sig, rng));
  for (int i = 0; i < sig.d(); ++i) out.push_back(Multivector::basis(sig, 1u << i));
  out.push_back(Multivector::volume(sig));
  return out;
}

std::vector<Matrix> default_probes(const PairedRep& pr, int n_random, SplitMix64& rng) {
  std::vector<Matrix> out;
  for (const Multivector& m : default_probe_polyforms(pr.sig(), n_random, rng))
    out.push_back(quantize(pr.rep, m));
  return out;
}

ConditionReport verify_square_conditions(const PairedRep& pr, Pairing tag, const Multivector& alpha,
                                         int n_probes, std::uint64_t seed, double tol) {
  require_same(pr.sig(), alpha.signature());
  ConditionReport r;
  const double na = alpha.norm();
  if (na == 0.0) {
    r.is_square = true;
    r.trace_probe_found = true;
    return r;
  }
  const Multivector a = alpha * (1.0 / na);
  const int sigma = pr.sigma(tag);
  r.symmetry = (s_transpose(adjoint_type(tag), a) - sigma * a).norm();
  r.idempotent = (geometric_product(a, a) - ka_trace(a) * a).norm();

  SplitMix64 rng(seed);
  std::vector<Multivector> probes = default_probe_polyforms(pr.sig(), n_probes, rng);
  // S(a * e_J) is nonzero exactly when a_J is, so the best monomial probe is
  // the one carrying the largest coefficient.
  unsigned best = 0;
  for (unsigned m = 1; m < a.size(); ++m)
    if (std::abs(a[m]) > std::abs(a[best])) best = m;
  probes.push_back(Multivector::basis(pr.sig(), best));

  for (Multivector beta : probes) {
    const double nb = beta.norm();
    if (nb == 0.0) continue;
    beta *= 1.0 / nb;
    const Multivector ab = geometric_product(a, beta);
    const double t = ka_trace(ab);
    if (std::abs(t) > tol) r.trace_probe_found = true;
    r.sandwich_max = std::max(r.sandwich_max, (geometric_product(ab, a) - t * a).norm());
  }

  if (r.symmetry > tol)
    r.reason = "symmetry condition fails";
  else if (r.idempotent > tol)
    r.reason = "a*a != S(a) a";
  else if (r.sandwich_max > tol)
    r.reason = "sandwich identity fails";
  else if (!r.trace_probe_found)
    r.reason = "no probe with nonzero trace";
  r.is_square = r.reason.empty();
  return r;
}

Reconstruction reconstruct(const PairedRep& pr, Pairing tag, const Multivector& alpha, double tol) {
  require_same(pr.sig(), alpha.signature());
  Reconstruction out;
  const Matrix e = quantize(pr.rep, alpha);
  const double ne = e.norm();
  if (ne == 0.0) {
    out.xi = Vector::Zero(pr.n());
    return out;
  }
  Eigen::Index col = 0;
  e.colwise().norm().maxCoeff(&col);
  const Vector eta = e.col(col);
  const Matrix g = eta * (pr.B(tag) * eta).transpose();
  Eigen::Index i = 0, j = 0;
  e.cwiseAbs().maxCoeff(&i, &j);
  if (g(i, j) == 0.0) throw PreconditionError("not reconstructible: rank-one fit degenerate");
  const double c = e(i, j) / g(i, j);
  out.kappa = c > 0 ? 1 : -1;
  out.xi = std::sqrt(std::abs(c)) * eta;
  out.residual = (e - c * g).norm() / ne;
  if (!(out.residual <= tol))
    throw PreconditionError("not reconstructible: rank-one residual " +
                            std::to_string(out.residual));
  return out;
}

Vector chiral_projection(const PairedRep& pr, const Vector& xi, int mu) {
  const Matrix& gnu = pr.rep.monomials[pr.sig().full_mask()];
  return 0.5 * (xi + mu * (gnu * xi));
}

double chirality_residual(const PairedRep& pr, const Multivector& alpha, int mu) {
  const Signature& sig = pr.sig();
  if (((sig.p - sig.q) % 8 + 8) % 8 != 0)
    throw SignatureError("chirality needs p - q = 0 mod 8, got " + sig.str());
  if (mu != 1 && mu != -1) throw PreconditionError("mu must be +1 or -1");
  const double na = alpha.norm();
  if (na == 0.0) return 0.0;
  return (hodge_star(pi_tau(alpha)) - mu * alpha).norm() / na;
}

bool check_chirality(const PairedRep& pr, const Multivector& alpha, int mu, double tol) {
  return chirality_residual(pr, alpha, mu) <= tol;
}

double constraint_transfer(const PairedRep& pr, const Matrix& q, const Multivector& alpha) {
  return geometric_product(dequantize(pr.rep, q), alpha).norm();
}

Json spinor_to_json(const Vector& xi) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < xi.size(); ++i) a.push_back(xi(i));
  return a;
}

Vector spinor_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("spinor JSON must be an array of numbers");
  if (static_cast<int>(j.size()) != n)
    throw ParseError("spinor needs " + std::to_string(n) + " components, got " +
                     std::to_string(j.size()));
  Vector xi(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number()) throw ParseError("spinor component is not a number");
    xi(i) = j[i].get<double>();
    if (!std::isfinite(xi(i))) throw ParseError("non-finite spinor component");
  }
  return xi;
}

Json verdict_to_json(const ConditionReport& report, const Reconstruction* rec) {
  Json j;
  j["is_square"] = report.is_square;
  j["kappa"] = rec ? rec->kappa : 0;
  j["residuals"] = Json{{"symmetry", report.symmetry},
                        {"idempotent", report.idempotent},
                        {"sandwich_max", report.sandwich_max}};
  j["spinor"] = rec ? spinor_to_json(rec->xi) : Json::array();
  if (!report.reason.empty()) j["reason"] = report.reason;
  return j;
}

}  // namespace kaspin
