#pragma once

#include <string>

namespace kaspin {

inline constexpr int kMaxDim = 8;

// Quadratic space of signature (p, q). Basis covectors e^1..e^p square to +1,
// e^{p+1}..e^d square to -1. Indices passed to h() are zero-based.
struct Signature {
  int p = 0;
  int q = 0;

  constexpr int d() const { return p + q; }
  constexpr double h(int i) const { return i < p ? 1.0 : -1.0; }
  constexpr unsigned full_mask() const { return (1u << d()) - 1u; }
  constexpr std::size_t blade_count() const { return std::size_t{1} << d(); }

  friend constexpr bool operator==(const Signature&, const Signature&) = default;

  std::string str() const;
};

// Throws SignatureError unless 1 <= d <= 8.
void require_storable(const Signature& sig);

// Throws SignatureError unless d is even, p - q is 0 or 2, and d <= 8.
void require_rep_supported(const Signature& sig);
bool rep_supported(const Signature& sig) noexcept;

// Throws SignatureError when a and b differ.
void require_same(const Signature& a, const Signature& b);

}  // namespace kaspin
