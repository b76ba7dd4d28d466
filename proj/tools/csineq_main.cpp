// Command-line front end: selects carrier, construction, theorem and
// sampling parameters, runs the mapped checks and emits a text or JSON
// report. Exit codes: 0 holds/consistent, 1 counterexample found,
// 2 inconclusive at the requested precision, 3 usage/config error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "csineq/csineq.hpp"

namespace {

struct CliOptions {
  csineq::RunConfig config;
  std::string out_path;
  bool seed_given = false;
};

void add_common_options(CLI::App* cmd, CliOptions& opts, bool needs_theorem) {
  auto* theorem = cmd->add_option("--theorem", opts.config.theorem,
                                  "thm1plus|thm1|thm2|thm3|thm4|thm5|thm6|cor4|cor5|cor6|"
                                  "corA1|corA2|thmB|a9");
  if (needs_theorem) theorem->required();
  cmd->add_option("--carrier", opts.config.carrier,
                  "quad:p | gauss | poly | rational | reals-interval (default: per theorem)");
  cmd->add_option("--alpha", [&opts](const std::vector<std::string>& v) {
        opts.config.alpha = v.back();
        return true;
      },
      "value of the additive map at 1, e.g. '1', '1/2', '1+2*sqrt(2)'");
  cmd->add_option("--beta", [&opts](const std::vector<std::string>& v) {
        opts.config.beta = v.back();
        return true;
      },
      "value of the additive map at sqrt(p), e.g. 'sqrt(2)'");
  cmd->add_option("--q", [&opts](const std::vector<std::string>& v) {
        opts.config.q = v.back();
        return true;
      },
      "perturbation parameter in (0,1); selects the unit-perturbed identity");
  cmd->add_option("--c", opts.config.c, "evaluation point on Q[t] (default 2)");
  cmd->add_flag("--conjugate", opts.config.conjugate, "use conjugation as the Gaussian map");
  cmd->add_option("--target", opts.config.target,
                  "auto|additive|thmb|gauss|derivation|example-a|example-co");
  cmd->add_option("--samples", opts.config.samples, "sample count (default 1000)");
  cmd->add_option("--seed", opts.config.seed, "64-bit sampling seed (default 0)")
      ->each([&opts](const std::string&) { opts.seed_given = true; });
  cmd->add_option("--height-bound", opts.config.height_bound,
                  "max |numerator| and denominator of sampled coefficients (default 100)");
  cmd->add_option("--precision-digits", opts.config.precision_digits,
                  "interval enclosure precision (default 12)");
  cmd->add_option("--budget", opts.config.budget, "search pair budget (default 10000)");
  cmd->add_option("--depth", opts.config.depth,
                  "demo: continued-fraction refinement steps (default 3)");
  cmd->add_option("--format", opts.config.format, "text | json (default text)");
  cmd->add_option("--out", opts.out_path, "write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Cauchy-Schwarz-type inequalities for additive functions"};
  app.require_subcommand(1);

  CliOptions opts;
  add_common_options(app.add_subcommand("verify", "run the check battery for a theorem"), opts,
                     true);
  add_common_options(app.add_subcommand("search", "budget-bounded counterexample search"), opts,
                     true);
  app.get_subcommand("search")->add_option("--predicate", opts.config.predicate,
                                           "inequality id, e.g. 1<, 2<, 2<RA, 2xe, xy, 6xy");
  add_common_options(app.add_subcommand("demo", "worked demonstrations (thmB, cor5, cor6)"), opts,
                     true);
  add_common_options(app.add_subcommand("classify", "semidefiniteness classification of a map"),
                     opts, false);
  add_common_options(
      app.add_subcommand("equivalence", "two-sided sampled check of an iff characterization"),
      opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  opts.config.command = app.get_subcommands().front()->get_name();
  if (opts.config.command == "classify" && opts.config.theorem.empty()) {
    opts.config.theorem = "thm1";
  }
  if (!opts.seed_given) {
    if (const char* env_seed = std::getenv("CSINEQ_SEED")) {
      try {
        opts.config.seed = std::stoull(env_seed);
      } catch (const std::exception&) {
        std::cerr << "error: CSINEQ_SEED is not a valid 64-bit seed\n";
        return 3;
      }
    }
  }

  try {
    const csineq::RunResult result = csineq::execute(opts.config);
    if (!opts.out_path.empty()) {
      std::ofstream out(opts.out_path);
      if (!out) {
        std::cerr << "error: cannot write " << opts.out_path << "\n";
        return 3;
      }
      out << result.report;
    } else {
      std::cout << result.report;
    }
    return result.exit_code;
  } catch (const csineq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
