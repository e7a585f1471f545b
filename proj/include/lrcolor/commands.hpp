#ifndef LRCOLOR_COMMANDS_HPP_
#define LRCOLOR_COMMANDS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace lrcolor {

  enum class ReportFormat { Text, Machine };
  enum class ColoringChoice { Theorem, FirstLetter, Constant };

  struct RunConfig {
    std::filesystem::path      spec_path;
    std::string                command;
    std::optional<std::size_t> K;       // override; estimated when absent
    std::optional<std::size_t> n;       // length / base length / horizon, per command
    std::optional<std::size_t> h;       // factorization length, default K + 1
    std::optional<std::size_t> window;  // buffer or window length
    std::optional<std::size_t> t;       // ramsey block count
    std::size_t                max_base = 16;
    std::optional<std::filesystem::path> out;
    ReportFormat               format   = ReportFormat::Text;
    ColoringChoice             coloring = ColoringChoice::Theorem;
    bool                       parallel = false;
  };

  // Exit codes shared by every command.
  inline constexpr int kExitOk       = 0;
  inline constexpr int kExitNegative = 1;  // counterexample / horizon insufficient
  inline constexpr int kExitError    = 2;

  //! Dispatches on config.command. Results go to config.out when set and to
  //! `out` otherwise; diagnostics go to `err`. Never throws.
  int run_command(RunConfig const& config, std::ostream& out, std::ostream& err);

  int cmd_gen(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_returns(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_estimate_k(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_color(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_verify(RunConfig const& config, std::ostream& out, std::ostream& err);
  int cmd_ramsey(RunConfig const& config, std::ostream& out, std::ostream& err);

}  // namespace lrcolor

#endif  // LRCOLOR_COMMANDS_HPP_
