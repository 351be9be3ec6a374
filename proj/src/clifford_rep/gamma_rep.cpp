#include "kaspin/clifford_rep/gamma_rep.hpp"

#include <cmath>

#include "kaspin/errors.hpp"

namespace kaspin {

namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Positive-squaring gammas first, then negative, as the signature ordering demands.
struct Generators {
  std::vector<Matrix> plus;
  std::vector<Matrix> minus;
};

Generators generators(int p, int q) {
  if (p == 2 && q == 0) return {{mat2(0, 1, 1, 0), mat2(1, 0, 0, -1)}, {}};
  if (p == 1 && q == 1) return {{mat2(0, 1, 1, 0)}, {mat2(0, 1, -1, 0)}};
  Generators base = generators(p - 1, q - 1);
  const Matrix f1 = mat2(0, 1, 1, 0);
  const Matrix f2 = mat2(0, 1, -1, 0);
  const Matrix omega = f1 * f2;
  const Eigen::Index n = base.plus[0].rows();
  const Matrix id = Matrix::Identity(n, n);
  Generators out;
  for (const Matrix& g : base.plus) out.plus.push_back(kron(g, omega));
  out.plus.push_back(kron(id, f1));
  for (const Matrix& g : base.minus) out.minus.push_back(kron(g, omega));
  out.minus.push_back(kron(id, f2));
  return out;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

GammaRep build_rep(const Signature& sig) {
  require_rep_supported(sig);
  Generators g = generators(sig.p, sig.q);
  GammaRep rep;
  rep.sig = sig;
  rep.n = 1 << (sig.d() / 2);
  rep.gammas = std::move(g.plus);
  rep.gammas.insert(rep.gammas.end(), g.minus.begin(), g.minus.end());

  const std::size_t blades = sig.blade_count();
  rep.monomials.resize(blades);
  rep.monomials[0] = Matrix::Identity(rep.n, rep.n);
  for (unsigned mask = 1; mask < blades; ++mask) {
    // Peel the highest index off: Psi(e_I) = Psi(e_{I - top}) * gamma^top.
    int top = 31 - __builtin_clz(mask);
    rep.monomials[mask] = rep.monomials[mask & ~(1u << top)] * rep.gammas[top];
  }

  for (int i = 0; i < sig.d(); ++i)
    for (int j = 0; j < sig.d(); ++j) {
      const Matrix ac = rep.gammas[i] * rep.gammas[j] + rep.gammas[j] * rep.gammas[i];
      const double want = (i == j) ? 2.0 * sig.h(i) : 0.0;
      if ((ac - want * Matrix::Identity(rep.n, rep.n)).cwiseAbs().maxCoeff() != 0.0)
        throw InvariantError("gamma anticommutator check failed for " + sig.str());
    }
  return rep;
}

Matrix quantize(const GammaRep& rep, const Multivector& a) {
  require_same(rep.sig, a.signature());
  Matrix out = Matrix::Zero(rep.n, rep.n);
  for (unsigned m = 0; m < a.size(); ++m)
    if (a[m] != 0.0) out += a[m] * rep.monomials[m];
  return out;
}

Multivector dequantize(const GammaRep& rep, const Matrix& e) {
  if (e.rows() != rep.n || e.cols() != rep.n)
    throw PreconditionError("dequantize: matrix size does not match representation");
  Multivector out(rep.sig);
  for (unsigned m = 0; m < out.size(); ++m) {
    // Psi(e_I)^{-1} = (e_I * e_I) Psi(e_I) with e_I * e_I = +-1.
    const double sq = blade_sign(m, m) * blade_metric(rep.sig, m);
    const double tr = (rep.monomials[m].cwiseProduct(e.transpose())).sum();
    // Adding +0.0 maps an exact -0.0 to +0.0 so vanishing grades serialize as absent.
    out[m] = sq * tr / rep.n + 0.0;
  }
  return out;
}

Json gamma_rep_to_json(const GammaRep& rep) {
  Json mats = Json::array();
  for (const Matrix& g : rep.gammas) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(static_cast<int>(std::lround(g(i, j))));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return Json{{"p", rep.sig.p}, {"q", rep.sig.q}, {"n", rep.n}, {"gammas", mats}};
}

}  // namespace kaspin
