#include "kaspin/geometry_lab/presets.hpp"

#include <cmath>

#include "kaspin/errors.hpp"

namespace kaspin {

namespace {

const Box kHalfPlaneBox{Vec4d(-2.0, -2.0, -2.0, 0.2), Vec4d(2.0, 2.0, 2.0, 3.0)};
const Box kBesselBox{Vec4d(-2.0, -2.0, -1.0, 0.1), Vec4d(2.0, 2.0, 1.0, 5.0)};
const Box kFlatBox{Vec4d(-2.0, -2.0, -2.0, -2.0), Vec4d(2.0, 2.0, 2.0, 2.0)};
constexpr double kMinY = 0.05;

double number(const Json& p, const char* key) {
  const Json& v = p.at(key);
  if (!v.is_number()) throw ParseError(std::string("parameter ") + key + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(std::string("parameter ") + key + " must be finite");
  return d;
}

std::vector<double> numbers(const Json& p, const char* key, std::size_t n) {
  const Json& v = p.at(key);
  if (!v.is_array() || v.size() != n)
    throw ParseError(std::string("parameter ") + key + " must be an array of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (const Json& e : v) {
    if (!e.is_number() || !std::isfinite(e.get<double>()))
      throw ParseError(std::string("parameter ") + key + " must hold finite numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

// Defaults overlaid by the user's values; unknown keys are rejected.
Json resolve(const Json& defaults, const Json& given, const std::string& preset) {
  if (!given.is_object()) throw ParseError("preset parameters must be a JSON object");
  Json out = defaults;
  for (const auto& [k, v] : given.items()) {
    if (!defaults.contains(k)) throw ParseError("preset " + preset + " has no parameter " + k);
    out[k] = v;
  }
  return out;
}

double require_lambda(const Json& p) {
  const double lam = number(p, "lambda");
  if (lam == 0.0) throw ParseError("lambda must be nonzero for this preset");
  return lam;
}

JetMetricFn<2> hyperbolic_q(double lambda) {
  const double l2 = lambda * lambda;
  return [l2](const JetPoint<2>& p) {
    const Jet<2> c = Jet<2>(1.0) / (l2 * p[1] * p[1]);
    JetMatrix<2> q{};
    q[0][0] = c;
    q[1][1] = c;
    return q;
  };
}

SurfaceFn ads_k(double lambda) {
  const double l2 = lambda * lambda;
  return [l2](const JetPoint<2>& p) { return Jet<2>(1.0) / (l2 * p[1] * p[1]); };
}

SurfaceFn perturbed(SurfaceFn f, double eps) {
  if (eps == 0.0) return f;
  return [f = std::move(f), eps](const JetPoint<2>& p) { return f(p) + eps * (p[0] * p[0] + p[1] * p[1]); };
}

Preset from_walker(std::string name, Json params, WalkerData wd, const Box& box) {
  wd.name = name;
  Preset pr = walker_preset(wd, box);
  pr.name = std::move(name);
  pr.params = std::move(params);
  return pr;
}

WalkerData hyperbolic_walker(double lambda, SurfaceFn f) {
  WalkerData wd;
  wd.F = std::move(f);
  wd.K = ads_k(lambda);
  wd.q = hyperbolic_q(lambda);
  wd.domain = [](const Vec2d& s) { return s(1) >= kMinY; };
  wd.lambda = lambda;
  return wd;
}

Preset minkowski(const Json& given) {
  Json p = resolve(Json{{"perturb", 0.0}}, given, "minkowski");
  const double eps = number(p, "perturb");
  Preset pr;
  pr.name = "minkowski";
  pr.params = p;
  pr.chart = MetricChart::analytic("minkowski", [eps](const JetPoint<4>& x) {
    JetMatrix<4> g{};
    g[0][1] = g[1][0] = Jet<4>(1.0);
    g[2][2] = g[3][3] = Jet<4>(1.0);
    if (eps != 0.0) g[0][0] = eps * x[2] * x[2];
    return g;
  });
  pr.lambda = 0.0;
  pr.einstein = true;
  KillingData kd;
  kd.u = constant_one_form(Vec4d(1.0, 0.0, 0.0, 0.0));
  kd.l = constant_one_form(Vec4d(0.0, 0.0, 1.0, 0.0));
  pr.killing = kd;
  HeteroticConfig hc;
  hc.chart = pr.chart;
  hc.varphi = constant_one_form(Vec4d::Zero());
  hc.H = [](const Vec4d&) { return Multivector(kChartForms); };
  pr.heterotic = hc;
  pr.box = kFlatBox;
  return pr;
}

Preset ads4(const Json& given) {
  Json p = resolve(Json{{"lambda", 1.0}, {"perturb", 0.0}}, given, "ads4");
  const double lam = require_lambda(p);
  Preset pr = from_walker("ads4", p, hyperbolic_walker(lam, perturbed(ads_k(lam), number(p, "perturb"))), kHalfPlaneBox);
  pr.einstein = true;
  return pr;
}

Preset walker_generic(const Json& given) {
  Json p = resolve(Json{{"lambda", 1.0}, {"b", {1.0, 1.0, 1.0}}, {"perturb", 0.0}}, given, "walker-generic");
  const double lam = require_lambda(p);
  const std::vector<double> b = numbers(p, "b", 3);
  SurfaceFn f = [b](const JetPoint<2>& s) { return b[0] + b[1] * s[0] * s[0] + b[2] * s[1]; };
  return from_walker("walker-generic", p, hyperbolic_walker(lam, perturbed(f, number(p, "perturb"))), kHalfPlaneBox);
}

Preset deformed_poly(const Json& given) {
  Json p = resolve(Json{{"lambda", 1.0}, {"a", {1.0, 0.5, 0.2, 0.1}}, {"perturb", 0.0}}, given,
                   "ads4-deformed-poly");
  const double lam = require_lambda(p);
  const std::vector<double> a = numbers(p, "a", 4);
  SurfaceFn f = [a](const JetPoint<2>& s) {
    return (a[0] + a[1] * s[0]) * (a[2] * s[1] + a[3] / (s[1] * s[1]));
  };
  Preset pr = from_walker("ads4-deformed-poly", p, hyperbolic_walker(lam, perturbed(f, number(p, "perturb"))), kHalfPlaneBox);
  pr.einstein = true;
  return pr;
}

Preset deformed_bessel(const Json& given) {
  Json p = resolve(Json{{"lambda", 1.0}, {"c", 2.0}, {"a", {1.0, 1.0, 1.0, 0.0}}, {"perturb", 0.0}}, given,
                   "ads4-deformed-bessel");
  const double lam = require_lambda(p);
  const double c = number(p, "c");
  if (c == 0.0) throw ParseError("c must be nonzero for ads4-deformed-bessel");
  const std::vector<double> a = numbers(p, "a", 4);
  SurfaceFn f = [a, c](const JetPoint<2>& s) {
    const Jet<2> z = c * s[1];
    return (a[0] * exp(c * s[0]) + a[1] * exp(-c * s[0])) * (a[2] * bessel_y(z) + a[3] * bessel_j(z));
  };
  Preset pr = from_walker("ads4-deformed-bessel", p, hyperbolic_walker(lam, perturbed(f, number(p, "perturb"))), kBesselBox);
  pr.einstein = true;
  return pr;
}

Preset heterotic_ppwave(const Json& given) {
  Json p = resolve(Json{{"w", {0.3, 0.2, 0.1}}, {"theta", 0.4}, {"perturb", 0.0}}, given, "heterotic-ppwave");
  const std::vector<double> w = numbers(p, "w", 3);
  const double theta = number(p, "theta");
  const double eps = number(p, "perturb");
  Preset pr;
  pr.name = "heterotic-ppwave";
  pr.params = p;
  // q(v) = e^{2G(v)} delta with G = -cos v, so d_v q = 2 F q for F = sin.
  pr.chart = MetricChart::analytic("heterotic-ppwave", [](const JetPoint<4>& x) {
    JetMatrix<4> g{};
    g[0][1] = g[1][0] = Jet<4>(1.0);
    const Jet<4> conf = exp(-2.0 * cos(x[0]));
    g[2][2] = g[3][3] = conf;
    return g;
  });
  pr.lambda = 0.0;
  KillingData kd;
  kd.u = constant_one_form(Vec4d(1.0, 0.0, 0.0, 0.0));
  // l = e^{G(v)} l0 with l0 = (cos theta, sin theta) unit for delta.
  kd.l = jet_one_form([theta](const JetPoint<4>& x) {
    const Jet<4> e = exp(-cos(x[0]));
    return JetPoint<4>{Jet<4>(0.0), Jet<4>(0.0), std::cos(theta) * e, std::sin(theta) * e};
  });
  pr.killing = kd;
  HeteroticConfig hc;
  hc.chart = pr.chart;
  // A g_vv perturbation would still be a pp-wave solution, so the
  // sensitivity control adds the non-closed piece perturb * x dy to phi.
  hc.varphi = jet_one_form([w, eps](const JetPoint<4>& x) {
    const Jet<4> omega = w[0] + w[1] * sin(x[0]) + w[2] * cos(2.0 * x[0]);
    return JetPoint<4>{omega, Jet<4>(0.0), Jet<4>(0.0), eps * x[2]};
  });
  hc.H = [](const Vec4d&) { return Multivector(kChartForms); };
  pr.heterotic = hc;
  pr.box = kFlatBox;
  return pr;
}

}  // namespace

Jet<2> bessel_j(const Jet<2>& z) { return sin(z) / (z * z) - cos(z) / z; }
Jet<2> bessel_y(const Jet<2>& z) { return -cos(z) / (z * z) - sin(z) / z; }

Preset walker_preset(const WalkerData& wd, const Box& box) {
  Preset pr;
  pr.name = wd.name;
  pr.params = Json::object();
  pr.chart = walker_chart(wd);
  pr.lambda = wd.lambda;
  pr.killing = walker_killing_data(wd);
  pr.walker = wd;
  pr.box = box;
  return pr;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"minkowski", "ads4", "walker-generic", "ads4-deformed-poly",
                                              "ads4-deformed-bessel", "heterotic-ppwave"};
  return names;
}

Preset make_preset(const std::string& name, const Json& params) {
  if (name == "minkowski") return minkowski(params);
  if (name == "ads4") return ads4(params);
  if (name == "walker-generic") return walker_generic(params);
  if (name == "ads4-deformed-poly") return deformed_poly(params);
  if (name == "ads4-deformed-bessel") return deformed_bessel(params);
  if (name == "heterotic-ppwave") return heterotic_ppwave(params);
  throw ParseError("unknown preset " + name);
}

}  // namespace kaspin
