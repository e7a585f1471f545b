#include "lrcolor/error.hpp"

namespace lrcolor {

  std::string_view to_string(Errc code) noexcept {
    switch (code) {
      case Errc::InvalidArgument:
        return "InvalidArgument";
      case Errc::NotProlongable:
        return "NotProlongable";
      case Errc::MissingImage:
        return "MissingImage";
      case Errc::InvalidCoefficients:
        return "InvalidCoefficients";
      case Errc::LiteralExhausted:
        return "LiteralExhausted";
      case Errc::EmptyPattern:
        return "EmptyPattern";
      case Errc::NotAPrefix:
        return "NotAPrefix";
      case Errc::WindowTooSmall:
        return "WindowTooSmall";
      case Errc::IndexOutOfRange:
        return "IndexOutOfRange";
      case Errc::AlignmentFailure:
        return "AlignmentFailure";
      case Errc::Unstable:
        return "Unstable";
      case Errc::BufferTooShort:
        return "BufferTooShort";
      case Errc::OutOfRange:
        return "OutOfRange";
      case Errc::CodeBound:
        return "CodeBound";
      case Errc::SpecParse:
        return "SpecParse";
    }
    return "Unknown";
  }

  Error::Error(Errc code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code),
        _detail(what) {}

}  // namespace lrcolor
