#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kaspin/kernels/blade_kernels.hpp"

namespace kaspin::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("KASPIN_KERNEL"); env && std::string(env) == "scalar")
    return Isa::scalar;
  if (blade_product_avx2_entry() != nullptr && cpu_has_avx2()) return Isa::avx2;
  return Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

BladeProductFn blade_product_for(Isa isa) {
  if (isa == Isa::scalar) return &blade_product_scalar;
  BladeProductFn fn = blade_product_avx2_entry();
  if (fn == nullptr || !cpu_has_avx2())
    throw std::invalid_argument("AVX2 blade kernel unavailable on this build or CPU");
  return fn;
}

void blade_product(const double* a, const double* b, const double* table, double* out,
                   std::size_t n) {
  static const BladeProductFn fn = blade_product_for(active_isa());
  fn(a, b, table, out, n);
}

}  // namespace kaspin::kernels
