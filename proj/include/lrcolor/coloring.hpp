#ifndef LRCOLOR_COLORING_HPP_
#define LRCOLOR_COLORING_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint8_t, uint32_t
#include <functional>  // for function, hash
#include <memory>      // for shared_ptr
#include <string>      // for string
#include <variant>     // for variant
#include <vector>      // for vector

#include <boost/multiprecision/cpp_int.hpp>

#include "lrcolor/returns.hpp"
#include "lrcolor/word.hpp"

namespace lrcolor {

  // Colors. The theorem coloring only ever produces Hash, Dollar and Code;
  // Palette is for the simple demonstration colorings.

  struct HashColor {
    bool operator==(HashColor const&) const = default;
  };

  struct DollarColor {
    bool operator==(DollarColor const&) const = default;
  };

  struct CodeColor {
    std::uint8_t parity = 0;
    IndexWord    r;
    bool         operator==(CodeColor const&) const = default;
  };

  struct PaletteColor {
    std::uint32_t id = 0;
    bool          operator==(PaletteColor const&) const = default;
  };

  using Color = std::variant<HashColor, DollarColor, CodeColor, PaletteColor>;

  //! "#", "$", "(p;i0.i1.....im)" or "c<id>".
  [[nodiscard]] std::string to_string(Color const& c);

  struct ColorHash {
    std::size_t operator()(Color const& c) const noexcept;
  };

  //! The unique n with K^n <= len < K^(n+1), in exact integer arithmetic.
  [[nodiscard]] std::size_t n_of(std::size_t len, std::size_t K);

  //! K^e, saturating at SIZE_MAX.
  [[nodiscard]] std::size_t saturating_pow(std::size_t K, std::size_t e) noexcept;

  //! One return system per anchor prefix p_n = x[0, K^n) with K^n <= target.
  class ColoringContext {
   public:
    ColoringContext(PrefixBuffer buffer, std::size_t K, std::vector<ReturnSystem> levels,
                    std::size_t max_colorable_len);

    [[nodiscard]] PrefixBuffer const& buffer() const noexcept {
      return _buffer;
    }
    [[nodiscard]] std::size_t K() const noexcept {
      return _K;
    }
    [[nodiscard]] std::vector<ReturnSystem> const& levels() const noexcept {
      return _levels;
    }
    [[nodiscard]] std::size_t max_colorable_len() const noexcept {
      return _max_len;
    }

   private:
    PrefixBuffer              _buffer;
    std::size_t               _K;
    std::vector<ReturnSystem> _levels;
    std::size_t               _max_len;
  };

  //! Requires buffer.size() >= (K + 2) * target_len (BufferTooShort) and
  //! every level stable (Unstable).
  [[nodiscard]] ColoringContext build_context(PrefixBuffer buffer,
                                              std::size_t  K,
                                              std::size_t  target_len);

  //! The factor coloring. Hash for non-prefixes; for a prefix u with
  //! n = n_of(|u|), Code(n mod 2, r(u)) when |u| is reached by at most K^2
  //! returns to p_n, where r(u) parses u over the returns to p_{n-1} (p_0 when
  //! n = 0); Dollar otherwise. Throws OutOfRange beyond max_colorable_len and
  //! CodeBound if a code would violate |r| < K^5 or |r| < m K^3.
  [[nodiscard]] Color classify(ColoringContext const& ctx, WordView u);

  //! Exact number of colors, 2 + sum_{i < K^5} 2 K^i (K+1)^(2i), via the
  //! closed geometric form.
  [[nodiscard]] boost::multiprecision::cpp_int color_count_bound(std::size_t K);

  //! A factor coloring over words, as consumed by the verifier.
  class FactorColoring {
   public:
    using Fn = std::function<Color(WordView)>;

    FactorColoring(std::string name, Fn fn) : _name(std::move(name)), _fn(std::move(fn)) {}

    Color operator()(WordView factor) const {
      return _fn(factor);
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

   private:
    std::string _name;
    Fn          _fn;
  };

  [[nodiscard]] FactorColoring theorem_coloring(std::shared_ptr<ColoringContext const> ctx);
  //! Palette(first letter id).
  [[nodiscard]] FactorColoring first_letter_coloring();
  //! Palette(0) everywhere.
  [[nodiscard]] FactorColoring constant_coloring();

}  // namespace lrcolor

#endif  // LRCOLOR_COLORING_HPP_
