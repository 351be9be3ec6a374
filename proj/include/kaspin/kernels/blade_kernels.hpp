#pragma once

#include <cstddef>
#include <string_view>

// Bilinear blade products on dense 2^d coefficient arrays. A product table
// row T[I*n + k] holds the structure constant of e_I times e_{I^k}, so every
// bilinear operation (geometric, wedge) reduces to
//   out[k] += a[I] * T[I*n + k] * b[k ^ I]   for all I, k.
// The scalar kernel is the reference; the AVX2 kernel must match it bit for
// bit, which is why the scalar path also accumulates with fma.

namespace kaspin::kernels {

enum class Isa { scalar, avx2 };

using BladeProductFn = void (*)(const double* a, const double* b, const double* table,
                                double* out, std::size_t n);

void blade_product_scalar(const double* a, const double* b, const double* table, double* out,
                          std::size_t n);

// Null when the build has no AVX2 translation unit.
BladeProductFn blade_product_avx2_entry();

bool cpu_has_avx2();

// Chosen once: AVX2+FMA when the CPU has it, unless KASPIN_KERNEL=scalar.
Isa active_isa();
std::string_view isa_name(Isa isa);

// Throws std::invalid_argument when the requested ISA is unavailable.
BladeProductFn blade_product_for(Isa isa);

void blade_product(const double* a, const double* b, const double* table, double* out,
                   std::size_t n);

}  // namespace kaspin::kernels
