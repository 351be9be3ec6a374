#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kaspin {

// Named residuals at one point, in insertion order.
struct ResidualSet {
  std::vector<std::pair<std::string, double>> entries;
  // Set when the Walker gauge has s^2 < 0 here and l-dependent entries were skipped.
  bool gauge_imaginary = false;

  void add(std::string name, double value) { entries.emplace_back(std::move(name), value); }
  bool has(std::string_view name) const;
  double get(std::string_view name) const;
  double max() const;
  void append(const ResidualSet& other, std::string_view prefix = {});
};

// |difference| / max(1, largest term magnitude): absolute near unit scale,
// relative where the terms themselves are large.
double scaled_residual(double difference, double magnitude);

}  // namespace kaspin
