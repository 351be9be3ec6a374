// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
// Exit status is 0 only when every criterion passes.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kaspin/clifford_rep/gamma_rep.hpp"
#include "kaspin/clifford_rep/pairing.hpp"
#include "kaspin/errors.hpp"
#include "kaspin/geometry_lab/campaign.hpp"
#include "kaspin/geometry_lab/killing.hpp"
#include "kaspin/geometry_lab/presets.hpp"
#include "kaspin/geometry_lab/sampling.hpp"
#include "kaspin/geometry_lab/walker.hpp"
#include "kaspin/ka_core/random.hpp"
#include "kaspin/lowdim/lowdim.hpp"
#include "kaspin/spinor_square/square.hpp"

#ifndef KASPIN_CLI_PATH
#error "KASPIN_CLI_PATH must name the kaspin executable"
#endif

namespace kaspin {
namespace {

namespace tol {
constexpr double kIsomorphism = 1e-9;
constexpr double kTrace = 1e-10;
constexpr double kIsomorphismSeconds = 10.0;
constexpr double kRoundTrip = 1e-8;
constexpr double kConditions = 1e-9;
constexpr double kDegreeFilter = 1e-12;
constexpr double kNormalForm = 1e-9;
constexpr double kAdsEinstein = 1e-6;
constexpr double kAdsKilling = 1e-6;
constexpr double kDeformedEinstein = 1e-5;
constexpr double kDeformedWalker = 1e-6;
constexpr double kSensitivityFloor = 1e-2;
constexpr double kEigenvalue = 1e-8;
constexpr double kHeterotic = 1e-6;
constexpr double kBianchi = 1e-6;
}  // namespace tol

constexpr int kPoints = 20;

const std::vector<Signature> kSignatures{{2, 0}, {1, 1}, {3, 1}, {2, 2}, {4, 2}, {3, 3}, {4, 4}, {5, 3}};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok) { pass = pass && ok; }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Vector normal_spinor(int n, SplitMix64& rng) {
  Vector xi(n);
  for (int i = 0; i < n; ++i) xi(i) = rng.normal();
  return xi;
}

Vector unit_spinor(int n, SplitMix64& rng) { return normal_spinor(n, rng).normalized(); }

double max_residual_over(const Preset& p, const std::string& check, std::uint64_t seed,
                         std::string_view entry = {}) {
  double worst = 0.0;
  for (const Vec4d& x : sample_points(p.box, kPoints, seed)) {
    const ResidualSet r = evaluate_check(p, check, x);
    worst = std::max(worst, entry.empty() ? r.max() : r.get(entry));
  }
  return worst;
}

void algebra_isomorphism(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  double prod = 0.0, trace = 0.0;
  for (const Signature& sig : kSignatures) {
    const GammaRep rep = build_rep(sig);
    SplitMix64 rng(1000 + sig.d() * 10 + sig.q);
    for (int t = 0; t < 200; ++t) {
      const Multivector a = random_multivector(sig, rng);
      const Multivector b = random_multivector(sig, rng);
      const Matrix qa = quantize(rep, a);
      prod = std::max(prod, (quantize(rep, geometric_product(a, b)) - qa * quantize(rep, b)).norm());
      trace = std::max(trace, std::abs(ka_trace(a) - qa.trace()));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(prod <= tol::kIsomorphism);
  o.require(trace <= tol::kTrace);
  o.require(secs < tol::kIsomorphismSeconds);
  o.detail << "product " << sci(prod) << ", trace " << sci(trace) << ", " << secs << " s";
}

void pairing_table(Outcome& o) {
  const int plus[4] = {1, 1, -1, -1};
  const int minus[4] = {1, -1, -1, 1};
  int matched = 0;
  for (const Signature& sig : kSignatures) {
    const PairedRep pr = build_paired_rep(sig);
    const int k = (sig.d() / 2) % 4;
    if (symmetry_sign(pr.Bplus) == plus[k] && symmetry_sign(pr.Bminus) == minus[k]) ++matched;
  }
  o.require(matched == static_cast<int>(kSignatures.size()));
  o.detail << matched << "/" << kSignatures.size() << " signatures";
}

void squaring_round_trip(Outcome& o) {
  double worst = 0.0;
  int kappa_mismatch = 0, count = 0;
  for (const Signature& sig : kSignatures) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(2000 + sig.d() * 10 + sig.q);
    for (const Pairing tag : {Pairing::plus, Pairing::minus})
      for (int t = 0; t < 100; ++t) {
        const Vector xi = normal_spinor(pr.n(), rng);
        const int kappa = rng.uniform() < 0.5 ? 1 : -1;
        const Reconstruction rec = reconstruct(pr, tag, square(pr, tag, kappa, xi).alpha);
        worst = std::max(worst, std::min((rec.xi - xi).cwiseAbs().maxCoeff(), (rec.xi + xi).cwiseAbs().maxCoeff()));
        if (rec.kappa != kappa) ++kappa_mismatch;
        ++count;
      }
  }
  o.require(worst <= tol::kRoundTrip);
  o.require(kappa_mismatch == 0);
  o.detail << count << " spinors, worst " << sci(worst) << ", kappa mismatches " << kappa_mismatch;
}

void variety_membership(Outcome& o) {
  double worst = 0.0;
  int squares_rejected = 0, squares = 0, non_squares_accepted = 0, non_squares = 0;
  for (const Signature& sig : kSignatures) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(3000 + sig.d() * 10 + sig.q);
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      for (int t = 0; t < 100; ++t) {
        const Multivector a = square(pr, tag, 1, normal_spinor(pr.n(), rng)).alpha;
        const ConditionReport r = verify_square_conditions(pr, tag, a, 10, 17, tol::kConditions);
        worst = std::max({worst, r.symmetry, r.idempotent, r.sandwich_max});
        if (!r.is_square) ++squares_rejected;
        ++squares;
      }
    }
  }
  // Sums of two independent squares satisfy the symmetry condition and have rank two.
  SplitMix64 rng(3999);
  for (int t = 0; t < 100; ++t) {
    const Signature& sig = kSignatures[t % kSignatures.size()];
    const PairedRep pr = build_paired_rep(sig);
    const Pairing tag = (t / kSignatures.size()) % 2 == 0 ? Pairing::plus : Pairing::minus;
    const Multivector a = square(pr, tag, 1, normal_spinor(pr.n(), rng)).alpha +
                          square(pr, tag, 1, normal_spinor(pr.n(), rng)).alpha;
    if (verify_square_conditions(pr, tag, a, 10, 18, tol::kConditions).is_square) ++non_squares_accepted;
    ++non_squares;
  }
  o.require(worst <= tol::kConditions);
  o.require(squares_rejected == 0);
  o.require(non_squares_accepted == 0);
  o.detail << squares << " squares worst " << sci(worst) << " (" << squares_rejected << " rejected), "
           << non_squares << " rank-two sums (" << non_squares_accepted << " accepted)";
}

void degree_filter(Outcome& o) {
  double worst = 0.0;
  int grades_checked = 0;
  for (const Signature& sig : kSignatures) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(4000 + sig.d() * 10 + sig.q);
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      std::vector<int> zero;
      for (int k = 0; k <= sig.d(); ++k)
        if (grade_vanishes(k, adjoint_type(tag), pr.sigma(tag))) zero.push_back(k);
      for (int t = 0; t < 100; ++t) {
        const Multivector a = square(pr, tag, 1, unit_spinor(pr.n(), rng)).alpha;
        for (const int k : zero) worst = std::max(worst, a.grade(k).max_abs());
      }
      grades_checked += static_cast<int>(zero.size());
    }
  }
  o.require(worst <= tol::kDegreeFilter);
  o.detail << grades_checked << " vanishing (signature, pairing, grade) triples, worst " << sci(worst);
}

void low_dimensional_normal_forms(Outcome& o) {
  const PairedRep mink = build_paired_rep(kMinkowski);
  SplitMix64 rng(5000);
  double pair_worst = 0.0, rebuild = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Multivector a = square(mink, Pairing::minus, 1, unit_spinor(4, rng)).alpha;
    const ParabolicPair pp = polyform_to_pair(a);
    pair_worst = std::max({pair_worst, std::abs(h31(pp.u, pp.u)), std::abs(h31(pp.u, pp.l)),
                           std::abs(h31(pp.l, pp.l) - 1.0)});
    rebuild = std::max(rebuild, (pair_to_polyform(pp) - a).max_abs());
  }
  const PairedRep split = build_paired_rep(kSplit22);
  double self_dual = 0.0, null_norm = 0.0, off_grade = 0.0, mirror = 0.0;
  for (const Pairing tag : {Pairing::plus, Pairing::minus})
    for (int t = 0; t < 50; ++t) {
      const Vector raw = unit_spinor(4, rng);
      const Multivector a = square(split, tag, 1, chiral_projection(split, raw, -1).normalized()).alpha;
      self_dual = std::max(self_dual, (hodge_star(a) - a).max_abs());
      null_norm = std::max(null_norm, std::abs(form_inner(a, a)));
      off_grade = std::max(off_grade, a.off_grade_max(2));
      const Multivector b = square(split, tag, 1, chiral_projection(split, raw, 1).normalized()).alpha;
      mirror = std::max({mirror, (hodge_star(b) + b).max_abs(), std::abs(form_inner(b, b))});
    }
  o.require(pair_worst <= tol::kNormalForm && rebuild <= tol::kNormalForm);
  o.require(self_dual <= tol::kNormalForm && null_norm <= tol::kNormalForm && off_grade <= tol::kNormalForm);
  o.require(mirror <= tol::kNormalForm);
  o.detail << "(3,1) pair " << sci(pair_worst) << " rebuild " << sci(rebuild) << "; (2,2) self-dual "
           << sci(self_dual) << " null " << sci(null_norm) << " off-grade " << sci(off_grade)
           << ", opposite chirality anti-self-dual " << sci(mirror);
}

void ads4(Outcome& o) {
  double einstein = 0.0, killing = 0.0;
  for (const double lam : {0.5, 1.0, 2.0}) {
    const Preset p = make_preset("ads4", Json{{"lambda", lam}});
    einstein = std::max(einstein, max_residual_over(p, "einstein", 70, "ricci"));
    killing = std::max(killing, max_residual_over(p, "killing", 71));
  }
  o.require(einstein <= tol::kAdsEinstein);
  o.require(killing <= tol::kAdsKilling);
  o.detail << "Einstein " << sci(einstein) << ", Killing pair " << sci(killing);
}

void deformed_families(Outcome& o) {
  SplitMix64 rng(8000);
  auto draw = [&rng](int n) {
    std::vector<double> v(n);
    for (double& x : v) x = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.2, 1.5);
    return v;
  };
  double einstein = 0.0, walker = 0.0;
  for (int t = 0; t < 3; ++t) {
    const Preset poly = make_preset("ads4-deformed-poly", Json{{"lambda", rng.uniform(0.5, 2.0)}, {"a", draw(4)}});
    const Preset bessel = make_preset(
        "ads4-deformed-bessel", Json{{"lambda", rng.uniform(0.5, 2.0)}, {"c", rng.uniform(0.5, 3.0)}, {"a", draw(4)}});
    for (const Preset* p : {&poly, &bessel}) {
      einstein = std::max(einstein, max_residual_over(*p, "einstein", 80 + t));
      walker = std::max(walker, max_residual_over(*p, "walker", 90 + t));
    }
  }
  // F = b0 + b1 x^2 + b2 y with b0, b1 away from zero.
  const std::vector<double> b = draw(3);
  const Preset generic = make_preset("walker-generic", Json{{"b", b}});
  const double generic_walker = max_residual_over(generic, "walker", 95);
  const double generic_einstein = max_residual_over(generic, "einstein", 96);
  o.require(einstein <= tol::kDeformedEinstein);
  o.require(walker <= tol::kDeformedWalker);
  o.require(generic_walker <= tol::kDeformedWalker);
  o.require(generic_einstein >= tol::kSensitivityFloor);
  o.detail << "Einstein " << sci(einstein) << ", walker " << sci(walker) << "; generic F walker "
           << sci(generic_walker) << ", Einstein " << sci(generic_einstein);
}

void walker_eigenvalue(Outcome& o) {
  SplitMix64 rng(9000);
  double worst = 0.0;
  for (const double lam : {0.5, 1.0, 2.0}) {
    const Preset p = make_preset("ads4", Json{{"lambda", lam}});
    WalkerData wd = *p.walker;
    const double c0 = rng.uniform(0.1, 5.0);
    wd.K = [c0](const JetPoint<2>& s) { return Jet<2>(c0) / (s[1] * s[1]); };
    for (const Vec4d& x : sample_points(p.box, kPoints, 91)) {
      const ResidualSet r = walker_residuals(wd, Vec2d(x(2), x(3)));
      worst = std::max({worst, r.get("laplacian"), r.get("hessian")});
    }
  }
  o.require(worst <= tol::kEigenvalue);
  o.detail << "Laplacian and Hessian " << sci(worst);
}

void heterotic_ppwave(Outcome& o) {
  SplitMix64 rng(10000);
  double susy = 0.0, bianchi = 0.0;
  std::size_t entries = 0;
  for (int t = 0; t < 3; ++t) {
    const std::vector<double> w{rng.normal(), rng.normal(), rng.normal()};
    const Preset p = make_preset("heterotic-ppwave", Json{{"w", w}, {"theta", rng.uniform(0.0, 6.28)}});
    for (const Vec4d& x : sample_points(p.box, kPoints, 100 + t)) {
      const ResidualSet r = evaluate_check(p, "heterotic", x);
      entries = r.entries.size();
      susy = std::max(susy, r.max());
    }
    bianchi = std::max(bianchi, max_residual_over(p, "bianchi", 110 + t));
  }
  o.require(susy <= tol::kHeterotic);
  o.require(bianchi <= tol::kBianchi);
  o.detail << entries << " residual entries worst " << sci(susy) << ", Bianchi " << sci(bianchi);
}

std::string capture(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw InvariantError("cannot run " + cmd);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

void determinism(Outcome& o) {
  const std::string cli = KASPIN_CLI_PATH;
  const std::vector<std::string> campaigns{
      " check-metric --preset ads4-deformed-bessel --seed 11 --points 20",
      " check-metric --preset heterotic-ppwave --seed 12",
      " verify-algebra --p 4 --q 2 --trials 50 --seed 13",
  };
  int identical = 0;
  for (const std::string& args : campaigns) {
    const std::string cmd = "env -u KASPIN_TOL " + cli + args + " 2>/dev/null";
    const std::string a = capture(cmd);
    const std::string b = capture(cmd);
    if (!a.empty() && a == b) ++identical;
  }
  o.require(identical == static_cast<int>(campaigns.size()));
  o.detail << identical << "/" << campaigns.size() << " campaigns byte-identical";
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace kaspin

int main() {
  using namespace kaspin;
  const std::vector<Criterion> criteria{
      {"algebra isomorphism and trace", algebra_isomorphism},
      {"pairing symmetry table", pairing_table},
      {"squaring round trip", squaring_round_trip},
      {"square variety membership", variety_membership},
      {"degree filter", degree_filter},
      {"(3,1) and (2,2) normal forms", low_dimensional_normal_forms},
      {"AdS4 Einstein and Killing pair", ads4},
      {"deformed Walker families", deformed_families},
      {"Walker eigenvalue identity", walker_eigenvalue},
      {"heterotic pp-wave", heterotic_ppwave},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].run(o);
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << "exception: " << ex.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
