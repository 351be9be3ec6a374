#include "kaspin/ka_core/signature.hpp"

#include "kaspin/errors.hpp"

namespace kaspin {

std::string Signature::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

void require_storable(const Signature& sig) {
  if (sig.p < 0 || sig.q < 0 || sig.d() < 1 || sig.d() > kMaxDim)
    throw SignatureError("signature " + sig.str() + ": need 1 <= p+q <= 8");
}

bool rep_supported(const Signature& sig) noexcept {
  if (sig.p < 0 || sig.q < 0) return false;
  const int d = sig.d();
  const int diff = sig.p - sig.q;
  return d >= 2 && d <= kMaxDim && d % 2 == 0 && (diff == 0 || diff == 2);
}

void require_rep_supported(const Signature& sig) {
  if (!rep_supported(sig))
    throw SignatureError("signature " + sig.str() +
                         " unsupported: need even d <= 8 and p-q in {0,2}");
}

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b))
    throw SignatureError("signature mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace kaspin
