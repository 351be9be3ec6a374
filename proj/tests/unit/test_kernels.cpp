#include <gtest/gtest.h>

#include <cstring>
#include <vector>

#include "kaspin/ka_core/multivector.hpp"
#include "kaspin/kernels/blade_kernels.hpp"
#include "kaspin/rng.hpp"

namespace kaspin {
namespace {

std::vector<double> geometric_table(const Signature& sig) {
  const std::size_t n = sig.blade_count();
  std::vector<double> t(n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const unsigned j = i ^ k;
      t[i * n + k] = blade_sign(i, j) * blade_metric(sig, i & j);
    }
  return t;
}

std::vector<double> random_coeffs(std::size_t n, SplitMix64& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

TEST(Kernels, ScalarMatchesGeometricProduct) {
  const Signature sig{3, 1};
  SplitMix64 rng(1);
  const std::size_t n = sig.blade_count();
  const auto t = geometric_table(sig);
  const auto a = random_coeffs(n, rng);
  const auto b = random_coeffs(n, rng);
  std::vector<double> out(n, 0.0);
  kernels::blade_product_scalar(a.data(), b.data(), t.data(), out.data(), n);
  const Multivector ref = geometric_product(Multivector(sig, a), Multivector(sig, b));
  for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(out[k], ref[static_cast<unsigned>(k)], 1e-12);
}

TEST(Kernels, Avx2IsBitIdenticalToScalar) {
  if (!kernels::cpu_has_avx2() || kernels::blade_product_avx2_entry() == nullptr)
    GTEST_SKIP() << "no AVX2 kernel on this machine";
  const auto avx = kernels::blade_product_for(kernels::Isa::avx2);
  SplitMix64 rng(2);
  for (const Signature sig : {Signature{1, 1}, Signature{2, 0}, Signature{3, 1}, Signature{3, 0},
                              Signature{4, 2}, Signature{4, 4}, Signature{5, 3}}) {
    const std::size_t n = sig.blade_count();
    const auto t = geometric_table(sig);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_coeffs(n, rng);
      const auto b = random_coeffs(n, rng);
      std::vector<double> s(n, 0.0), v(n, 0.0);
      kernels::blade_product_scalar(a.data(), b.data(), t.data(), s.data(), n);
      avx(a.data(), b.data(), t.data(), v.data(), n);
      ASSERT_EQ(std::memcmp(s.data(), v.data(), n * sizeof(double)), 0) << sig.str();
    }
  }
}

TEST(Kernels, IsaNames) {
  EXPECT_EQ(kernels::isa_name(kernels::Isa::scalar), "scalar");
  EXPECT_EQ(kernels::isa_name(kernels::Isa::avx2), "avx2");
  EXPECT_NE(kernels::blade_product_for(kernels::Isa::scalar), nullptr);
}

}  // namespace
}  // namespace kaspin
