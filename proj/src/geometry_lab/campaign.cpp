#include "kaspin/geometry_lab/campaign.hpp"

#include <algorithm>
#include <map>

#include "kaspin/errors.hpp"
#include "kaspin/geometry_lab/curvature.hpp"

namespace kaspin {

const std::vector<std::string>& metric_check_names() {
  static const std::vector<std::string> names{"killing", "walker", "einstein", "heterotic", "bianchi"};
  return names;
}

double default_check_tol(const std::string& check) {
  if (check == "einstein") return 1e-5;
  if (std::find(metric_check_names().begin(), metric_check_names().end(), check) == metric_check_names().end())
    throw ParseError("unknown check " + check);
  return 1e-6;
}

namespace {

template <class T>
const T& need(const std::optional<T>& v, const Preset& p, const std::string& check) {
  if (!v) throw PreconditionError("preset " + p.name + " carries no data for check " + check);
  return *v;
}

}  // namespace

ResidualSet evaluate_check(const Preset& preset, const std::string& check, const Vec4d& x) {
  const Vec2d xs(x(2), x(3));
  if (check == "killing") {
    const KillingData& kd = need(preset.killing, preset, check);
    if (preset.walker && walker_gauge(*preset.walker, xs).imaginary) {
      ResidualSet r;
      r.gauge_imaginary = true;
      return r;
    }
    return killing_pair_residual(preset.chart, kd, x).as_set();
  }
  if (check == "walker") return walker_residuals(need(preset.walker, preset, check), xs, Vec2d(x(0), x(1)));
  if (check == "einstein") {
    ResidualSet r;
    const MetricJet<4> m = preset.chart.jet(x);
    const double l2 = preset.lambda * preset.lambda;
    r.add("ricci", (ricci(m) + 3.0 * l2 * m.g).norm() / m.g.norm());
    if (preset.walker) r.append(einstein_residual(*preset.walker, xs));
    return r;
  }
  if (check == "heterotic")
    return heterotic_susy_residuals(need(preset.heterotic, preset, check), need(preset.killing, preset, check), x);
  if (check == "bianchi") {
    ResidualSet r;
    r.add("bianchi", modified_bianchi_residual(need(preset.heterotic, preset, check), x));
    return r;
  }
  throw ParseError("unknown check " + check);
}

Json run_metric_campaign(const Preset& preset, const CampaignConfig& cfg) {
  if (cfg.checks.empty()) throw ParseError("no checks requested");
  if (cfg.points < 1) throw ParseError("points must be at least 1");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ParseError("tol must be positive");
  for (const std::string& c : cfg.checks) default_check_tol(c);

  const std::vector<Vec4d> pts = sample_points(preset.box, cfg.points, cfg.seed);
  Json residuals = Json::object();
  Json skipped = Json::object();
  Json tols = Json::object();
  bool pass = true;
  bool evaluated = true;
  for (const std::string& check : cfg.checks) {
    const double tol = cfg.tol ? *cfg.tol : default_check_tol(check);
    tols[check] = tol;
    std::vector<std::string> order;
    std::map<std::string, std::pair<double, double>> acc;  // max, sum
    std::map<std::string, int> count;
    int skip = 0;
    for (const Vec4d& x : pts) {
      const ResidualSet r = evaluate_check(preset, check, x);
      if (r.gauge_imaginary) ++skip;
      for (const auto& [name, v] : r.entries) {
        if (!acc.count(name)) {
          order.push_back(name);
          acc[name] = {0.0, 0.0};
        }
        acc[name].first = std::max(acc[name].first, v);
        acc[name].second += v;
        ++count[name];
      }
    }
    for (const std::string& name : order) {
      const auto [mx, sum] = acc[name];
      residuals[check + "." + name] = Json{{"max", mx}, {"mean", sum / count[name]}};
      if (!(mx <= tol)) pass = false;
    }
    if (order.empty()) evaluated = false;
    skipped[check] = skip;
  }
  Json report;
  report["preset"] = preset.name;
  report["params"] = preset.params;
  report["points"] = cfg.points;
  report["seed"] = cfg.seed;
  report["checks"] = cfg.checks;
  report["tol"] = tols;
  report["residuals"] = residuals;
  report["skipped_points"] = skipped;
  report["verdict"] = !pass ? "fail" : evaluated ? "pass" : "inconclusive";
  return report;
}

}  // namespace kaspin
