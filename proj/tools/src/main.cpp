#include <iostream>

#include "CLI11.hpp"
#include "walshlab/cli.hpp"

namespace {

void add_common_options(CLI::App& sub, walshlab::cli::CommandConfig& c) {
  sub.add_option("--n", c.n, "frequency index n >= 1");
  sub.add_option("--t", c.t_spec, "t as P/Q, bits:PRE(PERIOD), or 0");
  sub.add_option("--depth", c.depth, "cylinder depth (-1: minimal)");
  sub.add_option("--exp-min", c.exp_min, "smallest |n| or octave");
  sub.add_option("--exp-max", c.exp_max, "largest |n| or octave");
  sub.add_option("--samples", c.samples, "random samples (scan: 0 means exhaustive)");
  sub.add_option("--seed", c.seed, "RNG seed");
  sub.add_option("--out", c.out, "output file (default stdout)");
  sub.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--backend", c.backend, "exact, float or auto")->check(CLI::IsMember({"exact", "float", "auto"}));
  sub.add_option("--checks", c.checks, "comma list of ts,mtk,sws,toledo")->delimiter(',');
  sub.add_option("--A-max", c.a_max, "largest block count A");
  sub.add_option("--pattern", c.pattern, "alternating or Q1,P1,PERIOD");
  sub.add_option("--kind", c.kind, "dirichlet, conj-dirichlet, fejer, conj-fejer");
  sub.add_option("--threads", c.threads, "worker threads (0: hardware)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walshlab: conjugate Walsh-Fourier experiments"};
  app.require_subcommand(1);
  walshlab::cli::CommandConfig config;

  const std::pair<const char*, const char*> commands[] = {
      {"lebesgue", "exact Lebesgue constant with J-breakdown"},
      {"scan", "bound verification scan"},
      {"fejer-norms", "per-octave conjugate Fejer kernel norms"},
      {"counterexample", "growth of the block-parameter counterexample"},
      {"kernel", "dump kernel values"},
      {"selftest", "oracle-equivalence suite"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common_options(*sub, config);
    sub->callback([&config, n = std::string(name)] { config.subcommand = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? walshlab::cli::kOk : walshlab::cli::kUsage;
  }
  return walshlab::cli::run(config, std::cout, std::cerr);
}
