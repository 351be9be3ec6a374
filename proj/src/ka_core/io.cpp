#include "kaspin/ka_core/io.hpp"

#include <charconv>
#include <cmath>

#include "kaspin/errors.hpp"

namespace kaspin {

std::string mask_key(unsigned mask) {
  std::string key;
  for (int i = 0; mask >> i; ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (!key.empty()) key += ',';
    key += std::to_string(i + 1);
  }
  return key;
}

unsigned parse_mask_key(const std::string& key, int d) {
  unsigned mask = 0;
  int last = 0;
  const char* p = key.data();
  const char* end = p + key.size();
  while (p < end) {
    int idx = 0;
    auto [next, ec] = std::from_chars(p, end, idx);
    if (ec != std::errc() || idx < 1 || idx > d || idx <= last)
      throw ParseError("bad basis key \"" + key + "\": need ascending indices in 1.." +
                       std::to_string(d));
    mask |= 1u << (idx - 1);
    last = idx;
    p = next;
    if (p < end) {
      if (*p != ',') throw ParseError("bad basis key \"" + key + "\"");
      if (++p == end) throw ParseError("bad basis key \"" + key + "\": trailing comma");
    }
  }
  return mask;
}

Json multivector_to_json(const Multivector& a) {
  if (!a.is_finite()) throw PreconditionError("cannot serialize non-finite multivector");
  Json coeffs = Json::object();
  // Grade-major order for readability.
  for (int k = 0; k <= a.signature().d(); ++k)
    for (unsigned m = 0; m < a.size(); ++m)
      if (grade_of(m) == k && (a[m] != 0.0 || std::signbit(a[m]))) coeffs[mask_key(m)] = a[m];
  return Json{{"p", a.signature().p}, {"q", a.signature().q}, {"coeffs", coeffs}};
}

Multivector multivector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("coeffs"))
    throw ParseError("multivector JSON needs fields p, q, coeffs");
  if (!j["p"].is_number_integer() || !j["q"].is_number_integer())
    throw ParseError("multivector JSON: p and q must be integers");
  const Signature sig{j["p"].get<int>(), j["q"].get<int>()};
  require_storable(sig);
  const Json& c = j["coeffs"];
  if (!c.is_object()) throw ParseError("multivector JSON: coeffs must be an object");
  Multivector out(sig);
  for (auto it = c.begin(); it != c.end(); ++it) {
    if (!it.value().is_number()) throw ParseError("coefficient for \"" + it.key() + "\" not a number");
    const double v = it.value().get<double>();
    if (!std::isfinite(v)) throw ParseError("non-finite coefficient");
    out[parse_mask_key(it.key(), sig.d())] = v;
  }
  return out;
}

}  // namespace kaspin
