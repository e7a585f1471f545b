#ifndef LRCOLOR_SPEC_FILE_HPP_
#define LRCOLOR_SPEC_FILE_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "lrcolor/word.hpp"

namespace lrcolor {

  //! A word specification file, e.g.
  //!
  //!     id: fibonacci
  //!     kind: substitution
  //!     alphabet: [a, b]
  //!     seed: a
  //!     images:
  //!       a: ab
  //!       b: a
  //!
  //! Other kinds: `sturmian` (coefficients: [1, 2]), `eventually_periodic`
  //! (preperiod, period) and `literal` (text).
  struct WordSpec {
    std::string id;
    WordSource  source;
  };

  //! Throws Error(SpecParse) naming the offending field and line.
  [[nodiscard]] WordSpec parse_word_spec(std::string_view text, std::string_view default_id);
  [[nodiscard]] WordSpec load_word_spec(std::filesystem::path const& path);

  //! The spec text of a literal word, suitable for parse_word_spec.
  [[nodiscard]] std::string literal_spec_text(std::string_view id,
                                              Alphabet const&  alphabet,
                                              std::string_view text);

}  // namespace lrcolor

#endif  // LRCOLOR_SPEC_FILE_HPP_
