#ifndef LRCOLOR_REPORT_HPP_
#define LRCOLOR_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrcolor/verifier.hpp"

namespace lrcolor {

  //! Pipeline facts recorded next to a VerificationReport.
  struct VerifyNotes {
    std::string                K_source = "estimate";  // or "override"
    std::optional<bool>        K_margin_ok;
    std::optional<std::size_t> detected_period;
    std::size_t                buffer_length = 0;
    std::size_t                level0_codes  = 0;
  };

  //! Witness lists in machine reports are truncated to this many entries;
  //! the counts are always complete.
  inline constexpr std::size_t kMaxWitnesses = 10;

  [[nodiscard]] nlohmann::json to_json(Lemma2Audit const& audit);

  //! The machine-readable verify report. Every field except "timing" is a
  //! deterministic function of the run configuration.
  [[nodiscard]] nlohmann::json to_json(VerificationReport const& report,
                                       VerifyNotes const&        notes);

  //! Human-readable summary of the same data.
  [[nodiscard]] std::string to_text(VerificationReport const& report, VerifyNotes const& notes);

  //! Schema problems of a machine report produced by any command; empty
  //! when the document is valid.
  [[nodiscard]] std::vector<std::string> validate_machine_report(nlohmann::json const& doc);

  //! Text of a machine report with the "timing" field removed.
  [[nodiscard]] std::string strip_timing(std::string const& machine_report);

}  // namespace lrcolor

#endif  // LRCOLOR_REPORT_HPP_
