#include "kaspin/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kaspin/clifford_rep/pairing.hpp"
#include "kaspin/errors.hpp"
#include "kaspin/geometry_lab/campaign.hpp"
#include "kaspin/ka_core/io.hpp"
#include "kaspin/ka_core/random.hpp"
#include "kaspin/spinor_square/square.hpp"

namespace kaspin::cli {

namespace {

Json check_entry(double max, double tol) { return Json{{"max", max}, {"pass", max <= tol}}; }

Json read_input(const std::string& path, const std::string& inline_json, std::istream& in) {
  std::string text;
  if (!inline_json.empty()) {
    text = inline_json;
  } else if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON input: ") + e.what());
  }
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

double resolve_tol(const std::optional<double>& flag, double fallback) {
  const std::optional<double> t = flag ? flag : env_tol();
  const double tol = t ? *t : fallback;
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ParseError("tol must be a positive finite number");
  return tol;
}

Signature checked_signature(int p, int q) {
  if (p < 0 || q < 0) throw SignatureError("p and q must be non-negative");
  const Signature sig{p, q};
  require_rep_supported(sig);
  return sig;
}

Multivector polyform_input(const Json& j, const std::optional<Signature>& expected) {
  const Json& body = j.is_object() && j.contains("alpha") ? j["alpha"] : j;
  Multivector a = multivector_from_json(body);
  require_rep_supported(a.signature());
  if (expected) require_same(*expected, a.signature());
  return a;
}

Json sig_json(const Signature& s) { return Json{{"p", s.p}, {"q", s.q}}; }

}  // namespace

std::optional<double> env_tol() {
  const char* v = std::getenv("KASPIN_TOL");
  if (!v || !*v) return std::nullopt;
  double t = 0.0;
  const char* end = v + std::char_traits<char>::length(v);
  auto [p, ec] = std::from_chars(v, end, t);
  if (ec != std::errc() || p != end || !(t > 0.0) || !std::isfinite(t))
    throw ParseError(std::string("KASPIN_TOL is not a positive number: ") + v);
  return t;
}

Json verify_algebra(const Signature& sig, int trials, std::uint64_t seed, double tol, bool* pass) {
  require_rep_supported(sig);
  if (trials < 1) throw ParseError("trials must be at least 1");
  const PairedRep pr = build_paired_rep(sig);
  SplitMix64 rng(seed);
  double assoc = 0.0, iso = 0.0, trace = 0.0, roundtrip = 0.0, adj_plus = 0.0, adj_minus = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Multivector a = random_multivector(sig, rng);
    const Multivector b = random_multivector(sig, rng);
    const Multivector c = random_multivector(sig, rng);
    const Multivector lhs = geometric_product(geometric_product(a, b), c);
    const Multivector rhs = geometric_product(a, geometric_product(b, c));
    assoc = std::max(assoc, (lhs - rhs).norm() / std::max(1.0, a.norm() * b.norm() * c.norm()));
    const Matrix qa = quantize(pr.rep, a);
    iso = std::max(iso, (quantize(pr.rep, geometric_product(a, b)) - qa * quantize(pr.rep, b)).norm());
    trace = std::max(trace, std::abs(ka_trace(a) - qa.trace()));
    roundtrip = std::max(roundtrip, (dequantize(pr.rep, qa) - a).norm());
    adj_plus = std::max(adj_plus, (pairing_adjoint(pr, Pairing::plus, qa) - quantize(pr.rep, s_transpose(1, a))).norm());
    adj_minus = std::max(adj_minus, (pairing_adjoint(pr, Pairing::minus, qa) - quantize(pr.rep, s_transpose(-1, a))).norm());
  }
  double clifford = 0.0;
  for (int i = 0; i < sig.d(); ++i)
    for (int j = 0; j < sig.d(); ++j) {
      Matrix ac = pr.rep.gammas[i] * pr.rep.gammas[j] + pr.rep.gammas[j] * pr.rep.gammas[i];
      if (i == j) ac -= 2.0 * sig.h(i) * Matrix::Identity(pr.n(), pr.n());
      clifford = std::max(clifford, ac.cwiseAbs().maxCoeff());
    }

  Json checks;
  checks["associativity"] = check_entry(assoc, tol);
  checks["clifford_relation"] = check_entry(clifford, tol);
  checks["isomorphism"] = check_entry(iso, tol);
  checks["trace"] = check_entry(trace, tol);
  checks["quantize_round_trip"] = check_entry(roundtrip, tol);
  checks["pairing_adjoint_plus"] = check_entry(adj_plus, tol);
  checks["pairing_adjoint_minus"] = check_entry(adj_minus, tol);
  Json pairings;
  bool ok = true;
  for (Pairing tag : {Pairing::plus, Pairing::minus}) {
    const int got = pr.sigma(tag);
    const int want = expected_symmetry(sig.d(), tag);
    pairings[std::string(pairing_name(tag))] = Json{{"sigma", got}, {"expected", want}, {"pass", got == want}};
    ok = ok && got == want;
  }
  for (const auto& [k, v] : checks.items()) ok = ok && v["pass"].get<bool>();
  if (pass) *pass = ok;
  Json out;
  out["subcommand"] = "verify-algebra";
  out["signature"] = sig_json(sig);
  out["trials"] = trials;
  out["seed"] = seed;
  out["tol"] = tol;
  out["checks"] = checks;
  out["pairings"] = pairings;
  out["pass"] = ok;
  return out;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kaehler-Atiyah spinor toolkit: algebra, squaring and chart verification"};
  app.require_subcommand(1);

  int p = 3, q = 1, trials = 200;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out_path, input_path = "-", inline_json, pairing = "minus";
  int kappa = 1;

  auto common = [&](CLI::App* sub, bool sig) {
    if (sig) {
      sub->add_option("--p", p, "number of positive directions");
      sub->add_option("--q", q, "number of negative directions");
    }
    sub->add_option("--seed", seed, "PRNG seed (SplitMix64)");
    sub->add_option("--tol", tol, "tolerance; defaults to KASPIN_TOL, then the check default");
    sub->add_option("--out", out_path, "write JSON here instead of stdout");
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "JSON input file, - for stdin");
    sub->add_option("--json", inline_json, "inline JSON input");
    sub->add_option("--pairing", pairing, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  };

  CLI::App* va = app.add_subcommand("verify-algebra", "property suite for ka_core and clifford_rep");
  common(va, true);
  va->add_option("--trials", trials, "random trials");

  CLI::App* sq = app.add_subcommand("square", "signed square of a spinor (JSON array)");
  common(sq, true);
  with_input(sq);
  sq->add_option("--kappa", kappa, "sign, +1 or -1")->check(CLI::IsMember({1, -1}));

  CLI::App* rc = app.add_subcommand("reconstruct", "spinor (up to sign) from a polyform");
  common(rc, false);
  with_input(rc);

  CLI::App* cp = app.add_subcommand("check-polyform", "is the polyform a signed spinor square");
  common(cp, false);
  with_input(cp);
  cp->add_option("--trials", trials, "random probes for the sandwich identity")->default_val(10);

  CLI::App* cm = app.add_subcommand("check-metric", "residual campaign on a preset chart");
  common(cm, false);
  std::string preset, params_json;
  std::vector<std::string> checks;
  std::optional<double> lambda, c_param, perturb, theta;
  std::vector<double> a_param, b_param, w_param;
  int points = 20;
  cm->add_option("--preset", preset, "preset name")->required();
  cm->add_option("--params", params_json, "preset parameters as a JSON object");
  cm->add_option("--check", checks, "killing,walker,einstein,heterotic,bianchi")->delimiter(',');
  cm->add_option("--trials,--points", points, "sample points");
  cm->add_option("--lambda", lambda, "lambda");
  cm->add_option("--a", a_param, "a1..a4")->delimiter(',');
  cm->add_option("--b", b_param, "b0..b2 for walker-generic")->delimiter(',');
  cm->add_option("--c", c_param, "Bessel separation constant");
  cm->add_option("--w", w_param, "Omega coefficients for heterotic-ppwave")->delimiter(',');
  cm->add_option("--theta", theta, "angle of l0 for heterotic-ppwave");
  cm->add_option("--perturb", perturb, "sensitivity perturbation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (va->parsed()) {
      const Signature sig = checked_signature(p, q);
      bool pass = false;
      const Json rep = verify_algebra(sig, trials, seed, resolve_tol(tol, 1e-9), &pass);
      emit(rep, out_path, out);
      err << "verify-algebra " << sig.str() << ": " << (pass ? "pass" : "FAIL") << "\n";
      return pass ? kOk : kFailed;
    }
    const Pairing tag = parse_pairing(pairing);
    if (sq->parsed()) {
      const Signature sig = checked_signature(p, q);
      const PairedRep pr = build_paired_rep(sig);
      const Json in_json = read_input(input_path, inline_json, in);
      const Vector xi = spinor_from_json(in_json.is_object() && in_json.contains("spinor") ? in_json["spinor"] : in_json, pr.n());
      const SquareResult r = square(pr, tag, kappa, xi);
      Json j;
      j["subcommand"] = "square";
      j["signature"] = sig_json(sig);
      j["pairing"] = std::string(pairing_name(tag));
      j["kappa"] = r.kappa;
      j["s"] = r.s;
      j["sigma"] = r.sigma;
      j["alpha"] = multivector_to_json(r.alpha);
      emit(j, out_path, out);
      err << "square " << sig.str() << " " << pairing_name(tag) << ": done\n";
      return kOk;
    }
    if (rc->parsed() || cp->parsed()) {
      const Json in_json = read_input(input_path, inline_json, in);
      const Multivector alpha = polyform_input(in_json, std::nullopt);
      const PairedRep pr = build_paired_rep(alpha.signature());
      const double t = resolve_tol(tol, kDefaultTol);
      Json j;
      j["subcommand"] = rc->parsed() ? "reconstruct" : "check-polyform";
      j["signature"] = sig_json(alpha.signature());
      j["pairing"] = std::string(pairing_name(tag));
      if (rc->parsed()) {
        try {
          const Reconstruction r = reconstruct(pr, tag, alpha, t);
          j["reconstructible"] = true;
          j["kappa"] = r.kappa;
          j["spinor"] = spinor_to_json(r.xi);
          j["residual"] = r.residual;
        } catch (const PreconditionError& e) {
          j["reconstructible"] = false;
          j["reason"] = e.what();
        }
        emit(j, out_path, out);
        err << "reconstruct: " << (j["reconstructible"].get<bool>() ? "ok" : "not a square") << "\n";
        return kOk;
      }
      const ConditionReport report = verify_square_conditions(pr, tag, alpha, trials, seed, t);
      std::optional<Reconstruction> rec;
      if (report.is_square) {
        try {
          rec = reconstruct(pr, tag, alpha, std::max(t, 1e-8));
        } catch (const PreconditionError&) {
        }
      }
      j.update(verdict_to_json(report, rec ? &*rec : nullptr));
      emit(j, out_path, out);
      err << "check-polyform: " << (report.is_square ? "square" : "not a square") << "\n";
      return kOk;
    }
    if (cm->parsed()) {
      Json params = params_json.empty() ? Json::object() : read_input("", params_json, in);
      if (!params.is_object()) throw ParseError("--params must be a JSON object");
      if (lambda) params["lambda"] = *lambda;
      if (!a_param.empty()) params["a"] = a_param;
      if (!b_param.empty()) params["b"] = b_param;
      if (c_param) params["c"] = *c_param;
      if (!w_param.empty()) params["w"] = w_param;
      if (theta) params["theta"] = *theta;
      if (perturb) params["perturb"] = *perturb;
      const Preset pr = make_preset(preset, params);
      CampaignConfig cfg;
      cfg.points = points;
      cfg.seed = seed;
      cfg.tol = tol ? tol : env_tol();
      if (checks.empty()) {
        if (pr.einstein) checks.push_back("einstein");
        if (pr.killing) checks.push_back("killing");
        if (pr.walker) checks.push_back("walker");
        if (pr.heterotic) {
          checks.push_back("heterotic");
          checks.push_back("bianchi");
        }
      }
      cfg.checks = checks;
      const Json rep = run_metric_campaign(pr, cfg);
      emit(rep, out_path, out);
      err << "check-metric " << preset << ": " << rep["verdict"].get<std::string>() << "\n";
      return kOk;
    }
  } catch (const SignatureError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kBadInput;
}

}  // namespace kaspin::cli
