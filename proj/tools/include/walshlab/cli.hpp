#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "walshlab/counterexample.hpp"
#include "walshlab/dyadic.hpp"

namespace walshlab::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kResourceCap = 3 };

struct CommandConfig {
  std::string subcommand;
  std::uint64_t n = 1;
  std::string t_spec = "0";
  int depth = -1;  // -1: minimal depth for the command
  int exp_min = 0;
  int exp_max = 4;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string out;  // empty: the stream passed to run()
  std::string format = "csv";
  std::string backend = "auto";
  std::vector<std::string> checks;
  int a_max = 5;
  std::string pattern = "alternating";
  std::string kind = "dirichlet";
  unsigned threads = 0;
};

/// INT "/" INT | "bits:" BITS [ "(" BITS ")" ] | "0"
ConjugateParameter parse_t(std::string_view spec);

/// "alternating" or "Q1,P1,PERIOD".
BlockParameter parse_pattern(std::string_view spec);

/// Executes the subcommand. Reports go to config.out or `out`; diagnostics
/// to `err`. Returns an ExitCode.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace walshlab::cli
