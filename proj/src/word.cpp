#include "lrcolor/word.hpp"

#include <algorithm>  // for equal, all_of
#include <cctype>     // for isprint, isspace

#include "lrcolor/error.hpp"

namespace lrcolor {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::string_view names) : _names(names) {
    if (_names.empty()) {
      throw Error(Errc::InvalidArgument, "alphabet must be nonempty");
    }
    if (_names.size() > 256) {
      throw Error(Errc::InvalidArgument, "alphabet has more than 256 letters");
    }
    for (std::size_t i = 0; i < _names.size(); ++i) {
      auto c = static_cast<unsigned char>(_names[i]);
      if (!std::isprint(c) || std::isspace(c)) {
        throw Error(Errc::InvalidArgument,
                    "letter names must be printable non-space characters");
      }
      if (_names.find(_names[i]) != i) {
        throw Error(Errc::InvalidArgument,
                    std::string("duplicate letter '") + _names[i] + "'");
      }
    }
  }

  char Alphabet::name(Symbol s) const {
    if (s >= _names.size()) {
      throw Error(Errc::IndexOutOfRange, "letter id " + std::to_string(s));
    }
    return _names[s];
  }

  std::optional<Symbol> Alphabet::id(char name) const noexcept {
    auto pos = _names.find(name);
    if (pos == std::string::npos) {
      return std::nullopt;
    }
    return static_cast<Symbol>(pos);
  }

  Word Alphabet::encode(std::string_view text) const {
    Word out;
    out.reserve(text.size());
    for (char c : text) {
      auto s = id(c);
      if (!s) {
        throw Error(Errc::InvalidArgument,
                    std::string("letter '") + c + "' is not in alphabet \"" + _names
                        + "\"");
      }
      out.push_back(*s);
    }
    return out;
  }

  std::string Alphabet::decode(WordView w) const {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) {
      out.push_back(name(s));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
      : _alphabet(std::move(alphabet)), _images(std::move(images)) {
    if (_images.size() < _alphabet.size()) {
      throw Error(Errc::MissingImage,
                  std::string("no image for letter '")
                      + _alphabet.name(static_cast<Symbol>(_images.size())) + "'");
    }
    if (_images.size() > _alphabet.size()) {
      throw Error(Errc::InvalidArgument, "more images than letters");
    }
    for (std::size_t a = 0; a < _images.size(); ++a) {
      if (_images[a].empty()) {
        throw Error(Errc::MissingImage,
                    std::string("empty image for letter '")
                        + _alphabet.name(static_cast<Symbol>(a)) + "'");
      }
      for (Symbol s : _images[a]) {
        if (s >= _alphabet.size()) {
          throw Error(Errc::InvalidArgument, "image uses a letter outside the alphabet");
        }
      }
    }
  }

  Word Substitution::apply(WordView w) const {
    Word out;
    for (Symbol s : w) {
      auto const& img = _images[s];
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  }

  PrimitivityResult check_primitive(Substitution const& sub) {
    using Matrix = std::vector<std::vector<bool>>;
    std::size_t const n = sub.alphabet().size();

    // incidence[a][b]: letter b occurs in sigma(a)
    Matrix incidence(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (Symbol b : sub.image(static_cast<Symbol>(a))) {
        incidence[a][b] = true;
      }
    }

    auto full = [](Matrix const& m) {
      return std::all_of(m.begin(), m.end(), [](auto const& row) {
        return std::all_of(row.begin(), row.end(), [](bool v) { return v; });
      });
    };

    Matrix power = incidence;
    for (std::size_t k = 1; k <= n * n; ++k) {
      if (full(power)) {
        return {true, k};
      }
      Matrix next(n, std::vector<bool>(n, false));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!power[a][c]) {
            continue;
          }
          for (std::size_t b = 0; b < n; ++b) {
            if (incidence[c][b]) {
              next[a][b] = true;
            }
          }
        }
      }
      power = std::move(next);
    }
    return {false, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Sources and buffers
  ////////////////////////////////////////////////////////////////////////

  Alphabet const& alphabet_of(WordSource const& source) noexcept {
    return std::visit(
        [](auto const& s) -> Alphabet const& {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SubstitutionFixedPoint>) {
            return s.sub.alphabet();
          } else {
            return s.alphabet;
          }
        },
        source);
  }

  std::optional<std::size_t> source_limit(WordSource const& source) noexcept {
    if (auto const* lit = std::get_if<Literal>(&source)) {
      return lit->text.size();
    }
    return std::nullopt;
  }

  PrefixBuffer::PrefixBuffer(WordSource source, Word data)
      : _source(std::move(source)), _data(std::move(data)) {}

  WordView PrefixBuffer::view(std::size_t start, std::size_t len) const {
    if (start > _data.size() || len > _data.size() - start) {
      throw Error(Errc::OutOfRange,
                  "factor [" + std::to_string(start) + ", " + std::to_string(start + len)
                      + ") exceeds buffer of length " + std::to_string(_data.size()));
    }
    return WordView(_data).subspan(start, len);
  }

  bool PrefixBuffer::has_prefix(WordView u) const noexcept {
    return u.size() <= _data.size() && std::equal(u.begin(), u.end(), _data.begin());
  }

  PrefixBuffer expand_substitution(Substitution const& sub,
                                   Symbol              seed,
                                   std::size_t         target_len) {
    if (seed >= sub.alphabet().size()) {
      throw Error(Errc::InvalidArgument, "seed is not a letter of the alphabet");
    }
    Word const& first = sub.image(seed);
    if (first.size() < 2 || first.front() != seed) {
      throw Error(Errc::NotProlongable,
                  std::string("image of '") + sub.alphabet().name(seed)
                      + "' must start with it and have length at least 2");
    }
    // x = sigma(x): letter i of x determines the block sigma(x_i), and since
    // |sigma(x_0)| >= 2 the read position always trails the write position.
    Word out(first.begin(), first.end());
    for (std::size_t read = 1; out.size() < target_len; ++read) {
      auto const& img = sub.image(out[read]);
      out.insert(out.end(), img.begin(), img.end());
    }
    out.resize(target_len);
    return PrefixBuffer(SubstitutionFixedPoint{sub, seed}, std::move(out));
  }

  PrefixBuffer sturmian_prefix(Alphabet                        alphabet,
                               std::vector<std::size_t> const& coefficients,
                               std::size_t                     target_len) {
    if (coefficients.empty()) {
      throw Error(Errc::InvalidCoefficients, "coefficient list is empty");
    }
    if (std::any_of(coefficients.begin(), coefficients.end(), [](auto a) {
          return a < 1;
        })) {
      throw Error(Errc::InvalidCoefficients, "coefficients must be at least 1");
    }
    if (alphabet.size() != 2) {
      throw Error(Errc::InvalidArgument, "Sturmian words need a two-letter alphabet");
    }
    Word older{1};  // s_{-1}
    Word old{0};    // s_0
    for (std::size_t n = 0; old.size() < target_len; ++n) {
      std::size_t const a = coefficients[n % coefficients.size()];
      Word              next;
      next.reserve(a * old.size() + older.size());
      for (std::size_t i = 0; i < a; ++i) {
        next.insert(next.end(), old.begin(), old.end());
      }
      next.insert(next.end(), older.begin(), older.end());
      older = std::move(old);
      old   = std::move(next);
    }
    old.resize(target_len);
    return PrefixBuffer(SturmianCF{std::move(alphabet), coefficients}, std::move(old));
  }

  PrefixBuffer prefix(WordSource const& source, std::size_t n) {
    return std::visit(
        [&](auto const& s) -> PrefixBuffer {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SubstitutionFixedPoint>) {
            return expand_substitution(s.sub, s.seed, n);
          } else if constexpr (std::is_same_v<T, SturmianCF>) {
            return sturmian_prefix(s.alphabet, s.coefficients, n);
          } else if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
            if (s.period.empty()) {
              throw Error(Errc::InvalidArgument, "period must be nonempty");
            }
            Word out;
            out.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
              out.push_back(i < s.preperiod.size()
                                ? s.preperiod[i]
                                : s.period[(i - s.preperiod.size()) % s.period.size()]);
            }
            return PrefixBuffer(source, std::move(out));
          } else {
            if (n > s.text.size()) {
              throw Error(Errc::LiteralExhausted,
                          "requested " + std::to_string(n) + " letters from a literal of length "
                              + std::to_string(s.text.size()));
            }
            return PrefixBuffer(source, Word(s.text.begin(), s.text.begin() + n));
          }
        },
        source);
  }

  std::optional<std::size_t> detect_period(WordView w) {
    std::size_t const n = w.size();
    if (n < 2) {
      return std::nullopt;
    }
    // border[i]: length of the longest proper border of w[0, i)
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
      while (k > 0 && w[i] != w[k]) {
        k = border[k];
      }
      if (w[i] == w[k]) {
        ++k;
      }
      border[i + 1] = k;
    }
    std::size_t const p = n - border[n];
    if (2 * p > n) {
      return std::nullopt;
    }
    return p;
  }

}  // namespace lrcolor
