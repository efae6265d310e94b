#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "starcong/cli.hpp"

namespace {

using starcong::cli::CommandConfig;

void add_common_flags(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "relative rank tolerance")->capture_default_str();
  sub->add_option_function<std::string>(
         "--format",
         [&cfg](const std::string& v) {
           cfg.format = v == "json" ? CommandConfig::Format::Json
                                    : CommandConfig::Format::Ascii;
         },
         "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"miniversal deformations of matrices under *congruence"};
  app.require_subcommand(1);

  CommandConfig cfg;

  auto* pattern = app.add_subcommand("pattern", "render the deformation pattern of a spec");
  pattern->add_option("--spec", cfg.spec_path, "block spec JSON file")->required();
  add_common_flags(pattern, cfg);
  pattern->callback([&] { cfg.command = CommandConfig::Command::Pattern; });

  auto* codim = app.add_subcommand("codim", "orbit codimension, pattern count vs kernel");
  codim->add_option("--spec", cfg.spec_path, "block spec JSON file")->required();
  add_common_flags(codim, cfg);
  codim->callback([&] { cfg.command = CommandConfig::Command::Codim; });

  auto* verify = app.add_subcommand("verify", "tangent/pattern direct-sum certificate");
  verify->add_option("--spec", cfg.spec_path, "block spec JSON file")->required();
  add_common_flags(verify, cfg);
  verify->callback([&] { cfg.command = CommandConfig::Command::Verify; });

  auto* greedy = app.add_subcommand("greedy", "basis-extension miniversal pattern");
  greedy->add_option("--spec", cfg.spec_path, "block spec JSON file");
  greedy->add_option("--matrix", cfg.matrix_path, "matrix JSON file");
  add_common_flags(greedy, cfg);
  greedy->callback([&] { cfg.command = CommandConfig::Command::Greedy; });

  auto* reduce = app.add_subcommand("reduce", "reduce a perturbed canonical matrix");
  reduce->add_option("--spec", cfg.spec_path, "block spec JSON file")->required();
  reduce->add_option("--matrix", cfg.matrix_path, "perturbation JSON file");
  reduce->add_option("--seed", cfg.seed, "seed for a generated perturbation");
  reduce->add_option("--norm", cfg.norm, "Frobenius norm of the generated perturbation");
  add_common_flags(reduce, cfg);
  reduce->callback([&] { cfg.command = CommandConfig::Command::Reduce; });

  auto* split = app.add_subcommand("split", "Hermitian pair split a = h + i k");
  split->add_option("--matrix", cfg.matrix_path, "matrix JSON file")->required();
  add_common_flags(split, cfg);
  split->callback([&] { cfg.command = CommandConfig::Command::Split; });

  auto* suite = app.add_subcommand("suite", "certification campaign over the spec grid");
  suite->add_option("--max-n", cfg.max_n, "total dimension bound")->capture_default_str();
  suite->add_option("--seed", cfg.seed, "base seed for reduce trials");
  suite->add_option("--trials", cfg.trials, "number of random reduce trials")
      ->capture_default_str();
  suite->add_option("--norm", cfg.norm, "Frobenius norm of generated perturbations");
  add_common_flags(suite, cfg);
  suite->callback([&] { cfg.command = CommandConfig::Command::Suite; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  return starcong::cli::run(cfg, std::cout, std::cerr);
}
