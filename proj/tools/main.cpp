// lrcolor: factor colorings of linearly recurrent words.
//
//   lrcolor gen        --spec fib.yaml --n 13
//   lrcolor returns    --spec fib.yaml --n 2
//   lrcolor estimate-k --spec fib.yaml --n 34
//   lrcolor color      --spec fib.yaml --n 81
//   lrcolor verify     --spec fib.yaml --n 200 --format machine --out report.json
//   lrcolor ramsey     --spec fib.yaml --n 2000 --t 10 --coloring first-letter

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "lrcolor/commands.hpp"

namespace {

  void add_common(CLI::App* sub, lrcolor::RunConfig& config) {
    sub->add_option("--spec", config.spec_path, "word specification file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--n", config.n, "length, base length or horizon (per command)");
    sub->add_option("--window", config.window, "buffer / window length");
    sub->add_option("--out", config.out, "write the result to this file");
    sub->add_option("--format", config.format, "text or machine")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, lrcolor::ReportFormat>{
                {"text", lrcolor::ReportFormat::Text},
                {"machine", lrcolor::ReportFormat::Machine}},
            CLI::ignore_case));
  }

  void add_coloring(CLI::App* sub, lrcolor::RunConfig& config) {
    sub->add_option("--k", config.K, "linear recurrence constant (estimated if absent)")
        ->check(CLI::Range(std::size_t(2), std::size_t(1) << 20));
    sub->add_option("--max-base", config.max_base,
                    "factor length bound used when estimating K");
    sub->add_option("--coloring", config.coloring,
                    "theorem, first-letter, or constant (debug)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, lrcolor::ColoringChoice>{
                {"theorem", lrcolor::ColoringChoice::Theorem},
                {"first-letter", lrcolor::ColoringChoice::FirstLetter},
                {"constant", lrcolor::ColoringChoice::Constant}},
            CLI::ignore_case));
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor colorings of linearly recurrent words"};
  app.require_subcommand(1);
  lrcolor::RunConfig config;

  auto* gen = app.add_subcommand("gen", "print a prefix of the word");
  add_common(gen, config);

  auto* returns = app.add_subcommand("returns", "return words to a prefix");
  add_common(returns, config);

  auto* estimate = app.add_subcommand("estimate-k", "estimate the linear recurrence constant");
  add_common(estimate, config);

  auto* color = app.add_subcommand("color", "colors of the prefixes under the theorem coloring");
  add_common(color, config);
  color->add_option("--k", config.K, "linear recurrence constant (estimated if absent)")
      ->check(CLI::Range(std::size_t(2), std::size_t(1) << 20));
  color->add_option("--max-base", config.max_base, "factor length bound used when estimating K");

  auto* verify = app.add_subcommand(
      "verify", "exhaustively search for monotone monochromatic prefix factorizations");
  verify->set_help_flag("--help", "print this help and exit");
  add_common(verify, config);
  add_coloring(verify, config);
  verify->add_option("--h", config.h, "factorization length (default K + 1)");
  verify->add_flag("--parallel", config.parallel, "fan out over prefix lengths");

  auto* ramsey = app.add_subcommand("ramsey", "find a strongly monochromatic tail");
  add_common(ramsey, config);
  add_coloring(ramsey, config);
  ramsey->add_option("--t", config.t, "number of blocks (default 10)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : lrcolor::kExitError;
  }
  config.command = app.get_subcommands().front()->get_name();
  return lrcolor::run_command(config, std::cout, std::cerr);
}
