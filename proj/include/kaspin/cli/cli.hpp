#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "kaspin/json.hpp"
#include "kaspin/ka_core/signature.hpp"

namespace kaspin::cli {

// Exit codes: 0 success (including negative mathematical verdicts),
// 1 failed property in verify-algebra or an internal error, 2 bad input.
enum ExitCode : int { kOk = 0, kFailed = 1, kBadInput = 2 };

struct RunConfig {
  std::string subcommand;
  Signature sig{3, 1};
  int trials = 200;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out_path;
};

// Associativity, Clifford relation, isomorphism, trace, quantize round trip,
// pairing table and pairing adjoint checks on `trials` seeded random elements.
// Sets *pass to whether every maximum is within tol.
Json verify_algebra(const Signature& sig, int trials, std::uint64_t seed, double tol, bool* pass);

// KASPIN_TOL when set and valid; throws ParseError when set but unparsable.
std::optional<double> env_tol();

// Entry point shared by the executable and the tests. JSON goes to `out` (or
// the --out file), human-readable summaries to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kaspin::cli
