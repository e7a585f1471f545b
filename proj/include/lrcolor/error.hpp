#ifndef LRCOLOR_ERROR_HPP_
#define LRCOLOR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrcolor {

  enum class Errc {
    InvalidArgument,
    NotProlongable,
    MissingImage,
    InvalidCoefficients,
    LiteralExhausted,
    EmptyPattern,
    NotAPrefix,
    WindowTooSmall,
    IndexOutOfRange,
    AlignmentFailure,
    Unstable,
    BufferTooShort,
    OutOfRange,
    CodeBound,
    SpecParse,
  };

  std::string_view to_string(Errc code) noexcept;

  //! Every failure raised by the library carries one of the codes above; the
  //! CLI maps them all to exit status 2.
  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what);

    [[nodiscard]] Errc code() const noexcept {
      return _code;
    }
    //! The message without the leading error-code name.
    [[nodiscard]] std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    Errc        _code;
    std::string _detail;
  };

}  // namespace lrcolor

#endif  // LRCOLOR_ERROR_HPP_
