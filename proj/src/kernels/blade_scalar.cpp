#include <cmath>

#include "kaspin/kernels/blade_kernels.hpp"

namespace kaspin::kernels {

void blade_product_scalar(const double* a, const double* b, const double* table, double* out,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const double* row = table + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = row[k];
      if (t == 0.0) continue;
      out[k] = std::fma(ai * t, b[k ^ i], out[k]);
    }
  }
}

}  // namespace kaspin::kernels
