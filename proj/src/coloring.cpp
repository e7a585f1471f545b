#include "lrcolor/coloring.hpp"

#include <limits>  // for numeric_limits
#include <sstream>

#include "lrcolor/error.hpp"

namespace lrcolor {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;
  }  // namespace

  std::string to_string(Color const& c) {
    return std::visit(overloaded{[](HashColor) -> std::string { return "#"; },
                                 [](DollarColor) -> std::string { return "$"; },
                                 [](CodeColor const& code) {
                                   std::ostringstream out;
                                   out << '(' << int(code.parity) << ';';
                                   for (std::size_t i = 0; i < code.r.size(); ++i) {
                                     out << (i == 0 ? "" : ".") << code.r[i];
                                   }
                                   out << ')';
                                   return out.str();
                                 },
                                 [](PaletteColor p) { return "c" + std::to_string(p.id); }},
                      c);
  }

  std::size_t ColorHash::operator()(Color const& c) const noexcept {
    std::size_t h = c.index() * 0x9e3779b97f4a7c15ULL;
    auto        mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    if (auto const* code = std::get_if<CodeColor>(&c)) {
      mix(code->parity);
      for (auto i : code->r) {
        mix(i);
      }
    } else if (auto const* p = std::get_if<PaletteColor>(&c)) {
      mix(p->id);
    }
    return h;
  }

  std::size_t n_of(std::size_t len, std::size_t K) {
    if (len == 0 || K < 2) {
      throw Error(Errc::InvalidArgument, "n_of needs len >= 1 and K >= 2");
    }
    std::size_t n = 0;
    for (std::size_t p = 1; p <= len / K; p *= K) {
      ++n;
    }
    return n;
  }

  std::size_t saturating_pow(std::size_t K, std::size_t e) noexcept {
    std::size_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
      if (K != 0 && out > std::numeric_limits<std::size_t>::max() / K) {
        return std::numeric_limits<std::size_t>::max();
      }
      out *= K;
    }
    return out;
  }

  ColoringContext::ColoringContext(PrefixBuffer              buffer,
                                   std::size_t               K,
                                   std::vector<ReturnSystem> levels,
                                   std::size_t               max_colorable_len)
      : _buffer(std::move(buffer)),
        _K(K),
        _levels(std::move(levels)),
        _max_len(max_colorable_len) {
    if (_K < 2) {
      throw Error(Errc::InvalidArgument, "K must be at least 2");
    }
    for (std::size_t n = 0; n < _levels.size(); ++n) {
      if (_levels[n].base.size() != saturating_pow(_K, n)) {
        throw Error(Errc::InvalidArgument, "level " + std::to_string(n) + " has the wrong base");
      }
    }
    if (_max_len >= saturating_pow(_K, _levels.size())) {
      throw Error(Errc::InvalidArgument, "not enough levels for the colorable length");
    }
  }

  ColoringContext build_context(PrefixBuffer buffer, std::size_t K, std::size_t target_len) {
    if (K < 2) {
      throw Error(Errc::InvalidArgument, "K must be at least 2");
    }
    if (target_len == 0) {
      throw Error(Errc::InvalidArgument, "target length must be positive");
    }
    if (buffer.size() / (K + 2) < target_len) {
      throw Error(Errc::BufferTooShort,
                  "coloring up to length " + std::to_string(target_len) + " with K = "
                      + std::to_string(K) + " needs a buffer of "
                      + std::to_string((K + 2) * target_len) + ", have "
                      + std::to_string(buffer.size()));
    }
    std::vector<ReturnSystem> levels;
    for (std::size_t n = 0, len = 1; len <= target_len; ++n, len *= K) {
      auto sys = return_system(buffer, len, buffer.size());
      if (!sys.stable) {
        throw Error(Errc::Unstable, "returns to the prefix of length " + std::to_string(len)
                                        + " are not stable in a window of "
                                        + std::to_string(buffer.size()));
      }
      levels.push_back(std::move(sys));
    }
    return ColoringContext(std::move(buffer), K, std::move(levels), target_len);
  }

  Color classify(ColoringContext const& ctx, WordView u) {
    if (u.empty() || u.size() > ctx.max_colorable_len()) {
      throw Error(Errc::OutOfRange, "factor length " + std::to_string(u.size())
                                        + " outside [1, "
                                        + std::to_string(ctx.max_colorable_len()) + "]");
    }
    if (!ctx.buffer().has_prefix(u)) {
      return HashColor{};
    }
    std::size_t const K     = ctx.K();
    std::size_t const n     = n_of(u.size(), K);
    auto const&       level = ctx.levels()[n];
    auto const        m     = level.boundary_index(u.size());
    if (!m || *m > K * K) {
      return DollarColor{};
    }
    auto const& parse_level = ctx.levels()[n == 0 ? 0 : n - 1];
    auto        r           = parse_by_returns(parse_level, u);
    if (!r) {
      throw Error(Errc::AlignmentFailure, "boundary " + std::to_string(u.size())
                                              + " of level " + std::to_string(n)
                                              + " is not a boundary one level down");
    }
    std::size_t const K3 = saturating_pow(K, 3);
    if (r->size() >= saturating_pow(K, 5) || r->size() / *m >= K3) {
      throw Error(Errc::CodeBound, "code of length " + std::to_string(r->size()) + " for "
                                       + std::to_string(*m) + " tiles exceeds the bound");
    }
    return CodeColor{static_cast<std::uint8_t>(n % 2), std::move(*r)};
  }

  boost::multiprecision::cpp_int color_count_bound(std::size_t K) {
    using boost::multiprecision::cpp_int;
    if (K < 2) {
      throw Error(Errc::InvalidArgument, "K must be at least 2");
    }
    std::size_t const terms = saturating_pow(K, 5);
    if (terms > (std::size_t(1) << 20)) {
      throw Error(Errc::OutOfRange, "K = " + std::to_string(K) + " is too large to evaluate");
    }
    cpp_int const ratio = cpp_int(K) * (K + 1) * (K + 1);
    cpp_int const power = boost::multiprecision::pow(ratio, static_cast<unsigned>(terms));
    return 2 + 2 * (power - 1) / (ratio - 1);
  }

  FactorColoring theorem_coloring(std::shared_ptr<ColoringContext const> ctx) {
    return FactorColoring("theorem", [ctx = std::move(ctx)](WordView f) {
      return classify(*ctx, f);
    });
  }

  FactorColoring first_letter_coloring() {
    return FactorColoring("first-letter", [](WordView f) -> Color {
      if (f.empty()) {
        throw Error(Errc::OutOfRange, "empty factor");
      }
      return PaletteColor{f.front()};
    });
  }

  FactorColoring constant_coloring() {
    return FactorColoring("constant", [](WordView) -> Color { return PaletteColor{0}; });
  }

}  // namespace lrcolor
