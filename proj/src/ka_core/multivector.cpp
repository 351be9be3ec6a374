#include "kaspin/ka_core/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "kaspin/errors.hpp"
#include "kaspin/kernels/blade_kernels.hpp"

namespace kaspin {

namespace {

struct ProductTables {
  std::vector<double> geometric;
  std::vector<double> exterior;
};

std::shared_ptr<const ProductTables> build_tables(const Signature& sig) {
  const std::size_t n = sig.blade_count();
  auto t = std::make_shared<ProductTables>();
  t->geometric.assign(n * n, 0.0);
  t->exterior.assign(n * n, 0.0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < n; ++k) {
      const unsigned j = k ^ i;
      const double s = blade_sign(i, j);
      t->geometric[i * n + k] = s * blade_metric(sig, i & j);
      if ((i & j) == 0) t->exterior[i * n + k] = s;
    }
  }
  return t;
}

const ProductTables& tables(const Signature& sig) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ProductTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{sig.p, sig.q}];
  if (!slot) slot = build_tables(sig);
  return *slot;
}

Multivector bilinear(const Multivector& a, const Multivector& b, bool exterior_only) {
  require_same(a.signature(), b.signature());
  const Signature& sig = a.signature();
  const ProductTables& t = tables(sig);
  std::vector<double> out(sig.blade_count(), 0.0);
  kernels::blade_product(a.data(), b.data(),
                         exterior_only ? t.exterior.data() : t.geometric.data(), out.data(),
                         out.size());
  return Multivector(sig, std::move(out));
}

template <class SignFn>
Multivector graded_map(const Multivector& a, SignFn sign) {
  Multivector out = a;
  for (unsigned m = 0; m < a.size(); ++m) out[m] *= sign(grade_of(m));
  return out;
}

}  // namespace

int grade_of(unsigned mask) { return std::popcount(mask); }

double blade_sign(unsigned i, unsigned j) {
  int swaps = 0;
  for (unsigned a = i >> 1; a != 0; a >>= 1) swaps += std::popcount(a & j);
  return (swaps & 1) ? -1.0 : 1.0;
}

double blade_metric(const Signature& sig, unsigned mask) {
  // Only bits at positions >= p carry a -1.
  const int negatives = std::popcount(mask >> sig.p);
  return (negatives & 1) ? -1.0 : 1.0;
}

Multivector::Multivector(Signature sig) : sig_(sig) {
  require_storable(sig_);
  coeffs_.assign(sig_.blade_count(), 0.0);
}

Multivector::Multivector(Signature sig, std::vector<double> coeffs)
    : sig_(sig), coeffs_(std::move(coeffs)) {
  require_storable(sig_);
  if (coeffs_.size() != sig_.blade_count())
    throw PreconditionError("multivector needs 2^d coefficients");
}

Multivector Multivector::scalar(Signature sig, double c) { return basis(sig, 0u, c); }

Multivector Multivector::basis(Signature sig, unsigned mask, double c) {
  Multivector m(sig);
  if (mask >= m.size()) throw PreconditionError("basis mask out of range");
  m[mask] = c;
  return m;
}

Multivector Multivector::vector(Signature sig, std::span<const double> comps) {
  Multivector m(sig);
  if (static_cast<int>(comps.size()) != sig.d())
    throw PreconditionError("vector needs d components");
  for (int i = 0; i < sig.d(); ++i) m[1u << i] = comps[i];
  return m;
}

Multivector Multivector::volume(Signature sig) {
  Multivector m(sig);
  m[sig.full_mask()] = 1.0;
  return m;
}

Multivector Multivector::grade(int k) const {
  Multivector out(sig_);
  for (unsigned m = 0; m < size(); ++m)
    if (grade_of(m) == k) out[m] = coeffs_[m];
  return out;
}

std::vector<double> Multivector::vector_part() const {
  std::vector<double> v(sig_.d());
  for (int i = 0; i < sig_.d(); ++i) v[i] = coeffs_[1u << i];
  return v;
}

double Multivector::off_grade_max(int k) const {
  double r = 0.0;
  for (unsigned m = 0; m < size(); ++m)
    if (grade_of(m) != k) r = std::max(r, std::abs(coeffs_[m]));
  return r;
}

bool Multivector::is_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return std::isfinite(c); });
}

double Multivector::norm() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

double Multivector::max_abs() const {
  double r = 0.0;
  for (double c : coeffs_) r = std::max(r, std::abs(c));
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same(sig_, o.sig_);
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Multivector wedge(const Multivector& a, const Multivector& b) { return bilinear(a, b, true); }

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return bilinear(a, b, false);
}

Multivector contract(const Multivector& theta, const Multivector& a) {
  require_same(theta.signature(), a.signature());
  if (theta.off_grade_max(1) != 0.0)
    throw PreconditionError("contract: theta must be homogeneous of grade 1");
  const Signature& sig = a.signature();
  Multivector out(sig);
  for (int r = 0; r < sig.d(); ++r) {
    const double th = theta[1u << r] * sig.h(r);
    if (th == 0.0) continue;
    const unsigned bit = 1u << r;
    for (unsigned m = 0; m < a.size(); ++m) {
      if (!(m & bit) || a[m] == 0.0) continue;
      // Number of factors in front of e^{r+1} sets the derivation sign.
      const int before = std::popcount(m & (bit - 1u));
      out[m ^ bit] += ((before & 1) ? -th : th) * a[m];
    }
  }
  return out;
}

Multivector pi(const Multivector& a) {
  return graded_map(a, [](int k) { return (k & 1) ? -1.0 : 1.0; });
}

Multivector tau(const Multivector& a) {
  return graded_map(a, [](int k) { return ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0; });
}

Multivector pi_tau(const Multivector& a) { return pi(tau(a)); }

double ka_trace(const Multivector& a) {
  const int d = a.signature().d();
  if (d % 2 != 0) throw SignatureError("ka_trace needs even d");
  return std::ldexp(a.scalar_part(), d / 2);
}

Multivector hodge_star(const Multivector& a) {
  if (a.signature().d() % 2 != 0) throw SignatureError("hodge_star needs even d");
  return geometric_product(tau(a), Multivector::volume(a.signature()));
}

double form_metric(const Signature& sig, unsigned mask) { return blade_metric(sig, mask); }

double form_inner(const Multivector& a, const Multivector& b) {
  require_same(a.signature(), b.signature());
  double s = 0.0;
  for (unsigned m = 0; m < a.size(); ++m) s += a[m] * b[m] * form_metric(a.signature(), m);
  return s;
}

}  // namespace kaspin
