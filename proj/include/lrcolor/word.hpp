#ifndef LRCOLOR_WORD_HPP_
#define LRCOLOR_WORD_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <string_view>
#include <variant>  // for variant
#include <vector>   // for vector

namespace lrcolor {

  //! Dense letter id. Names are kept only in the Alphabet for I/O.
  using Symbol = std::uint8_t;
  using Word   = std::vector<Symbol>;
  using WordView = std::span<Symbol const>;

  //! Ordered set of single-character letter names; letter i has id i.
  class Alphabet {
   public:
    explicit Alphabet(std::string_view names);

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] char name(Symbol s) const;
    [[nodiscard]] std::optional<Symbol> id(char name) const noexcept;
    [[nodiscard]] std::string const& names() const noexcept {
      return _names;
    }

    //! Throws InvalidArgument on a character outside the alphabet.
    [[nodiscard]] Word        encode(std::string_view text) const;
    [[nodiscard]] std::string decode(WordView w) const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::string _names;
  };

  class Substitution {
   public:
    //! images[i] is the image of letter i. Throws MissingImage when a letter
    //! has no image or an empty one.
    Substitution(Alphabet alphabet, std::vector<Word> images);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] Word const& image(Symbol s) const {
      return _images.at(s);
    }
    [[nodiscard]] Word apply(WordView w) const;

   private:
    Alphabet          _alphabet;
    std::vector<Word> _images;
  };

  struct PrimitivityResult {
    bool                       primitive = false;
    std::optional<std::size_t> witness_power;
  };

  //! Tests powers 1..|A|^2 of the boolean incidence matrix.
  [[nodiscard]] PrimitivityResult check_primitive(Substitution const& sub);

  // Word sources: recipes for one infinite (or, for Literal, finite) word.

  struct SubstitutionFixedPoint {
    Substitution sub;
    Symbol       seed = 0;
  };

  //! Characteristic Sturmian word with slope [0; a1, a2, ...], the
  //! coefficient list being cycled forever. Letter 0 of the alphabet plays
  //! the role of s_0, letter 1 of s_{-1}.
  struct SturmianCF {
    Alphabet                 alphabet;
    std::vector<std::size_t> coefficients;
  };

  struct EventuallyPeriodic {
    Alphabet alphabet;
    Word     preperiod;
    Word     period;
  };

  struct Literal {
    Alphabet alphabet;
    Word     text;
  };

  using WordSource
      = std::variant<SubstitutionFixedPoint, SturmianCF, EventuallyPeriodic, Literal>;

  [[nodiscard]] Alphabet const& alphabet_of(WordSource const& source) noexcept;

  //! Largest prefix length the source can produce, or nullopt if unbounded.
  [[nodiscard]] std::optional<std::size_t> source_limit(WordSource const& source) noexcept;

  //! A materialized prefix of the word defined by a WordSource. Immutable once
  //! built; a longer prefix is obtained by building a new buffer.
  class PrefixBuffer {
   public:
    PrefixBuffer(WordSource source, Word data);

    [[nodiscard]] std::size_t size() const noexcept {
      return _data.size();
    }
    [[nodiscard]] Symbol operator[](std::size_t i) const {
      return _data[i];
    }
    [[nodiscard]] WordView view() const noexcept {
      return _data;
    }
    [[nodiscard]] WordView view(std::size_t start, std::size_t len) const;
    [[nodiscard]] Word const& data() const noexcept {
      return _data;
    }
    [[nodiscard]] WordSource const& source() const noexcept {
      return _source;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_of(_source);
    }
    [[nodiscard]] std::string str() const {
      return alphabet().decode(_data);
    }
    [[nodiscard]] bool has_prefix(WordView u) const noexcept;

   private:
    WordSource _source;
    Word       _data;
  };

  //! Exactly target_len letters of the fixed point sigma^omega(seed).
  //! Throws NotProlongable unless sigma(seed) starts with seed and has length
  //! at least 2.
  [[nodiscard]] PrefixBuffer expand_substitution(Substitution const& sub,
                                                 Symbol              seed,
                                                 std::size_t         target_len);

  //! Exactly target_len letters of the characteristic Sturmian word built by
  //! s_n = s_{n-1}^{a_n} s_{n-2}. Throws InvalidCoefficients.
  [[nodiscard]] PrefixBuffer sturmian_prefix(Alphabet                        alphabet,
                                             std::vector<std::size_t> const& coefficients,
                                             std::size_t                     target_len);

  //! Dispatches on the source kind. Literal sources throw LiteralExhausted
  //! when n exceeds their length.
  [[nodiscard]] PrefixBuffer prefix(WordSource const& source, std::size_t n);

  //! Smallest period of the finite word, reported only when it is at most
  //! half the length. A screening heuristic, not a proof of aperiodicity.
  [[nodiscard]] std::optional<std::size_t> detect_period(WordView w);

}  // namespace lrcolor

#endif  // LRCOLOR_WORD_HPP_
