#include "kaspin/geometry_lab/residuals.hpp"

#include <algorithm>

#include "kaspin/errors.hpp"

namespace kaspin {

bool ResidualSet::has(std::string_view name) const {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == name; });
}

double ResidualSet::get(std::string_view name) const {
  for (const auto& [k, v] : entries)
    if (k == name) return v;
  throw PreconditionError("no residual named " + std::string(name));
}

double ResidualSet::max() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.second);
  return m;
}

void ResidualSet::append(const ResidualSet& other, std::string_view prefix) {
  for (const auto& [k, v] : other.entries) add(std::string(prefix) + k, v);
  gauge_imaginary = gauge_imaginary || other.gauge_imaginary;
}

double scaled_residual(double difference, double magnitude) {
  return difference / std::max(1.0, magnitude);
}

}  // namespace kaspin
