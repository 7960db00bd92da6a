#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "freeinv/io.hpp"

namespace freeinv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string command;
  std::string group = "even2";
  int max_degree = 4;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int trials = 20;
  std::vector<int> sizes{2, 3, 4};
  std::optional<BasisMethod> method;  // empty = auto
  std::string out;
  std::string basis_path;        // verify: load instead of building
  std::string poly_text;         // rewrite
  std::string poly_file;         // rewrite
  int pad = 2;                   // verify: superorthogonality padding
  bool max_degree_given = false;
};

// Throws InputError when the config is out of range.
void validate(const RunConfig& config);

Json cmd_count(const RunConfig& config);
Json cmd_basis(const RunConfig& config);
Json cmd_rewrite(const RunConfig& config);

struct VerifyOutcome {
  Json report;
  bool passed = false;
};
VerifyOutcome cmd_verify(const RunConfig& config);
VerifyOutcome cmd_demo(const RunConfig& config);

// Parses argv, runs one subcommand and writes its JSON to `out` (or --out).
// Returns kExitOk, kExitVerifyFailed or kExitInputError.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freeinv
