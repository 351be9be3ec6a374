#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kaspin/geometry_lab/presets.hpp"
#include "kaspin/json.hpp"

namespace kaspin {

// Checks understood by run_metric_campaign.
const std::vector<std::string>& metric_check_names();
// killing 1e-6, einstein 1e-5, walker 1e-6, heterotic 1e-6, bianchi 1e-6.
double default_check_tol(const std::string& check);

// Residuals at one point for one check. Throws PreconditionError when the
// preset carries no data for the check.
ResidualSet evaluate_check(const Preset& preset, const std::string& check, const Vec4d& x);

struct CampaignConfig {
  std::vector<std::string> checks;
  int points = 20;
  std::uint64_t seed = 0;
  std::optional<double> tol;  // overrides every per-check default
};

// {"preset", "params", "points", "seed", "checks", "tol", "residuals": {"check.name": {"max", "mean"}},
//  "skipped_points", "verdict"}. The verdict is "fail" when any residual exceeds its
// tolerance, "inconclusive" when some check was skipped at every point, else "pass".
// Points are evaluated in index order so the report is byte-identical for identical inputs.
Json run_metric_campaign(const Preset& preset, const CampaignConfig& cfg);

}  // namespace kaspin
