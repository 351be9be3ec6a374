#include "kaspin/lowdim/lowdim.hpp"

#include <cmath>

#include "kaspin/errors.hpp"

namespace kaspin {

namespace {

const Vec4 kEta(1.0, 1.0, 1.0, -1.0);

Vec4 vec_of(const Multivector& a) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = a[1u << i];
  return v;
}

Eigen::Matrix<double, 4, Eigen::Dynamic> as_columns(const std::vector<Vec4>& span) {
  Eigen::Matrix<double, 4, Eigen::Dynamic> m(4, span.size());
  for (std::size_t i = 0; i < span.size(); ++i) m.col(i) = span[i];
  return m;
}

int column_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

}  // namespace

double h31(const Vec4& a, const Vec4& b) { return (a.array() * b.array() * kEta.array()).sum(); }

Multivector one_form(const Vec4& v) {
  return Multivector::vector(kMinkowski, std::span<const double>(v.data(), 4));
}

double parabolic_defect(const ParabolicPair& pp) {
  const double su = std::max(1.0, pp.u.squaredNorm());
  return std::max({std::abs(h31(pp.u, pp.u)) / su, std::abs(h31(pp.u, pp.l)) / std::sqrt(su),
                   std::abs(h31(pp.l, pp.l) - 1.0)});
}

void require_parabolic(const ParabolicPair& pp, double tol) {
  if (pp.u.norm() == 0.0) throw PreconditionError("parabolic pair needs u != 0");
  if (parabolic_defect(pp) > tol)
    throw PreconditionError("parabolic pair constraints violated (defect " +
                            std::to_string(parabolic_defect(pp)) + ")");
}

Multivector pair_to_polyform(const ParabolicPair& pp, double tol) {
  require_parabolic(pp, tol);
  const Multivector u = one_form(pp.u);
  return u + wedge(u, one_form(pp.l));
}

ParabolicPair normalize_gauge(const ParabolicPair& pp, const Vec4& v, double tol) {
  if (std::abs(h31(v, v) + 1.0) > tol) throw PreconditionError("gauge vector must be unit timelike");
  const double uv = h31(pp.u, v);
  if (std::abs(uv) <= tol * pp.u.norm())
    throw PreconditionError("gauge: h*(u, v) vanishes; u is not null or v not timelike");
  const double f = -h31(pp.l, v) / uv;
  return {pp.u, pp.l + f * pp.u};
}

ParabolicPair polyform_to_pair(const Multivector& alpha, double tol) {
  require_same(alpha.signature(), kMinkowski);
  const double na = alpha.norm();
  if (na == 0.0) throw PreconditionError("not a spinor square: alpha = 0");
  for (int k : {0, 3, 4})
    if (alpha.grade(k).max_abs() > tol * na)
      throw PreconditionError("not a spinor square: grade " + std::to_string(k) + " nonzero");
  const Vec4 u = vec_of(alpha);
  const double nu = u.norm();
  if (nu <= tol * na) throw PreconditionError("not a spinor square: no grade-1 part");
  if (std::abs(h31(u, u)) > tol * nu * nu) throw PreconditionError("not a spinor square: u not null");

  const Multivector omega = alpha.grade(2);
  int pivot = 0;
  for (int m = 1; m < 4; ++m)
    if (std::abs(u(m)) > std::abs(u(pivot))) pivot = m;
  // i_theta(u ^ l) = h(theta,u) l - h(theta,l) u for theta = e^{pivot+1}.
  const Multivector theta = Multivector::basis(kMinkowski, 1u << pivot);
  const double htu = kEta(pivot) * u(pivot);
  const Vec4 l0 = vec_of(contract(theta, omega)) / htu;

  ParabolicPair pp = normalize_gauge({u, l0}, Vec4(0, 0, 0, 1), tol);
  const Multivector rebuilt = wedge(one_form(pp.u), one_form(pp.l));
  if ((rebuilt - omega).norm() > tol * na)
    throw PreconditionError("not a spinor square: grade-2 part is not u ^ l");
  if (std::abs(h31(pp.l, pp.l) - 1.0) > tol * std::max(1.0, na / nu))
    throw PreconditionError("not a spinor square: l is not of unit norm");
  return pp;
}

bool pair_equivalent(const ParabolicPair& a, const ParabolicPair& b, Equivalence mode, double tol) {
  // b.u = beta a.u
  const double beta = a.u.dot(b.u) / a.u.squaredNorm();
  if ((b.u - beta * a.u).norm() > tol * std::max(1.0, b.u.norm()) || beta == 0.0) return false;
  // b.l = eta a.l + c a.u
  Eigen::Matrix<double, 4, 2> basis;
  basis << a.l, a.u;
  const Eigen::Vector2d coef = basis.colPivHouseholderQr().solve(b.l);
  if ((basis * coef - b.l).norm() > tol * std::max(1.0, b.l.norm())) return false;
  const double eta = coef(0);
  switch (mode) {
    case Equivalence::weak:
      return std::abs(eta) > tol;
    case Equivalence::plain:
      return std::abs(eta - 1.0) <= tol;
    case Equivalence::strong:
      return std::abs(eta - 1.0) <= tol && std::abs(std::abs(beta) - 1.0) <= tol;
  }
  return false;
}

DegenerateFlag pair_to_flag(const ParabolicPair& pp) {
  DegenerateFlag f;
  f.w1 = {pp.u};
  f.w2 = {pp.u, pp.l};
  const Eigen::RowVector4d row = (kEta.array() * pp.u.array()).matrix().transpose();
  const Eigen::MatrixXd ker = Eigen::FullPivLU<Eigen::MatrixXd>(row).kernel();
  for (Eigen::Index c = 0; c < ker.cols(); ++c) f.w3.push_back(ker.col(c));
  return f;
}

int gram_rank(const std::vector<Vec4>& span, double tol) {
  const auto m = as_columns(span);
  const Eigen::MatrixXd gram = m.transpose() * kEta.asDiagonal() * m;
  const double scale = std::max(1.0, m.squaredNorm());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) > tol * scale) ++r;
  return r;
}

bool same_span(const std::vector<Vec4>& a, const std::vector<Vec4>& b, double tol) {
  std::vector<Vec4> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int ra = column_rank(as_columns(a), tol);
  return ra == column_rank(as_columns(b), tol) && ra == column_rank(as_columns(both), tol);
}

ParabolicPair random_parabolic_pair(SplitMix64& rng) {
  // Random orthonormal frame: rotation from a unit quaternion, then a boost.
  Eigen::Vector4d qv(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  qv.normalize();
  const Eigen::Quaterniond quat(qv(0), qv(1), qv(2), qv(3));
  Eigen::Matrix4d rot = Eigen::Matrix4d::Identity();
  rot.topLeftCorner<3, 3>() = quat.toRotationMatrix();

  Eigen::Vector3d n(rng.normal(), rng.normal(), rng.normal());
  n.normalize();
  const double phi = rng.uniform(-1.0, 1.0);
  Eigen::Matrix4d boost = Eigen::Matrix4d::Identity();
  boost.topLeftCorner<3, 3>() += (std::cosh(phi) - 1.0) * n * n.transpose();
  boost.topRightCorner<3, 1>() = std::sinh(phi) * n;
  boost.bottomLeftCorner<1, 3>() = std::sinh(phi) * n.transpose();
  boost(3, 3) = std::cosh(phi);
  const Eigen::Matrix4d frame = boost * rot;

  // l uniform on the unit sphere of the spacelike 3-frame, n1 a unit
  // spacelike direction orthogonal to it, u = s (f0 + n1).
  Eigen::Vector3d a(rng.normal(), rng.normal(), rng.normal());
  a.normalize();
  Eigen::Vector3d b(rng.normal(), rng.normal(), rng.normal());
  b -= b.dot(a) * a;
  b.normalize();
  const Vec4 l = frame.leftCols<3>() * a;
  const Vec4 n1 = frame.leftCols<3>() * b;
  const Vec4 f0 = frame.col(3);
  const double s = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
  return {s * (f0 + n1), l};
}

Json pair_to_json(const ParabolicPair& pp) {
  return Json{{"u", {pp.u(0), pp.u(1), pp.u(2), pp.u(3)}}, {"l", {pp.l(0), pp.l(1), pp.l(2), pp.l(3)}}};
}

ParabolicPair pair_from_json(const Json& j) {
  auto read = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array() || j[key].size() != 4)
      throw ParseError(std::string("pair JSON needs a 4-array \"") + key + "\"");
    Vec4 v;
    for (int i = 0; i < 4; ++i) {
      if (!j[key][i].is_number()) throw ParseError("pair component is not a number");
      v(i) = j[key][i].get<double>();
    }
    return v;
  };
  return {read("u"), read("l")};
}

double two_dim_normal_form_residual(const Multivector& alpha) {
  const Signature& sig = alpha.signature();
  if (sig.d() != 2) throw SignatureError("two-dimensional normal form needs d = 2");
  const double a0 = alpha[0];
  const double a1 = alpha[1], a2 = alpha[2];
  const double h11 = a1 * a1 * sig.h(0) + a2 * a2 * sig.h(1);
  return std::max(std::abs(alpha[3]), std::abs(a0 * a0 - h11));
}

std::array<Multivector, 3> self_dual_basis_22() {
  const Signature s = kSplit22;
  auto e = [&](unsigned m, double c) { return Multivector::basis(s, m, c); };
  // Masks: e1=1, e2=2, e3=4, e4=8.
  return {e(0b0011, 1) + e(0b1100, 1), e(0b0101, 1) + e(0b1010, 1), e(0b1001, 1) - e(0b0110, 1)};
}

Multivector self_dual_combination_22(double k1, double k2, double k3) {
  const auto u = self_dual_basis_22();
  return k1 * u[0] + k2 * u[1] + k3 * u[2];
}

bool check_22_chiral_square(const Multivector& alpha, double tol) {
  require_same(alpha.signature(), kSplit22);
  const double na = alpha.norm();
  if (na == 0.0) return true;
  if (alpha.off_grade_max(2) > tol * na) return false;
  const bool self_dual = (hodge_star(alpha) - alpha).norm() <= tol * na;
  const bool null = std::abs(form_inner(alpha, alpha)) <= tol * na * na;
  return self_dual && null;
}

}  // namespace kaspin
