#include <doctest.h>

#include <random>

#include "lrcolor/coloring.hpp"
#include "lrcolor/error.hpp"
#include "oracles.hpp"

using namespace lrcolor;

namespace {

  Alphabet const ab("ab");

  PrefixBuffer literal(std::string const& text) {
    return prefix(Literal{ab, ab.encode(text)}, text.size());
  }

  std::string color_at(ColoringContext const& ctx, std::size_t len) {
    return to_string(classify(ctx, ctx.buffer().view(0, len)));
  }

}  // namespace

TEST_CASE("n_of") {
  CHECK(n_of(1, 3) == 0);
  CHECK(n_of(2, 3) == 0);
  CHECK(n_of(3, 3) == 1);
  CHECK(n_of(9, 3) == 2);
  CHECK(n_of(26, 3) == 2);
  CHECK(n_of(27, 3) == 3);
  for (std::size_t K : {2, 3, 5, 8}) {
    for (std::size_t len = 1; len < 5000; len += 13) {
      std::size_t const n = n_of(len, K);
      CHECK(saturating_pow(K, n) <= len);
      CHECK(len < saturating_pow(K, n + 1));
    }
  }
  CHECK(saturating_pow(10, 40) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("to_string") {
  CHECK(to_string(HashColor{}) == "#");
  CHECK(to_string(DollarColor{}) == "$");
  CHECK(to_string(CodeColor{1, {0, 1, 0}}) == "(1;0.1.0)");
  CHECK(to_string(PaletteColor{4}) == "c4");
  ColorHash hash;
  CHECK(hash(CodeColor{0, {1}}) == hash(CodeColor{0, {1}}));
}

TEST_CASE("build_context") {
  auto const ctx = build_context(literal(oracle::fibonacci(500)), 3, 81);
  CHECK(ctx.levels().size() == 5);  // K^0 .. K^4
  for (std::size_t n = 0; n < ctx.levels().size(); ++n) {
    CHECK(ctx.levels()[n].base.size() == saturating_pow(3, n));
    CHECK(ctx.levels()[n].stable);
  }
  CHECK(ctx.max_colorable_len() >= 81);

  try {
    (void) build_context(literal(oracle::fibonacci(100)), 3, 81);
    FAIL("expected BufferTooShort");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::BufferTooShort);
  }
  CHECK_THROWS_AS((void) build_context(literal(oracle::fibonacci(500)), 1, 20), Error);
}

TEST_CASE("classify on Fibonacci with K = 3") {
  auto const ctx = build_context(literal(oracle::fibonacci(2000)), 3, 81);

  std::vector<std::string> const expected{"$", "(0;0)", "(1;0.1)", "$", "(1;0.1.0)",
                                          "$", "$",     "(1;0.1.0.0.1)", "$", "$"};
  for (std::size_t len = 1; len <= expected.size(); ++len) {
    CAPTURE(len);
    CHECK(color_at(ctx, len) == expected[len - 1]);
  }

  CHECK(std::holds_alternative<HashColor>(classify(ctx, ab.encode("bb"))));
  CHECK(std::holds_alternative<HashColor>(classify(ctx, ab.encode("baab"))));
  auto const c = classify(ctx, ab.encode("aba"));
  CHECK(c == Color{CodeColor{1, {0, 1}}});
  CHECK(std::holds_alternative<DollarColor>(classify(ctx, ab.encode("abaa"))));
  CHECK_THROWS_AS((void) classify(ctx, WordView{}), Error);
}

TEST_CASE("classify invariants") {
  std::vector<std::pair<std::string, std::size_t>> const words{
      {oracle::fibonacci(4000), 3}, {oracle::thue_morse(4000), 8}};
  for (auto const& [x, K] : words) {
    auto const        ctx = build_context(literal(x), K, 200);
    for (std::size_t len = 1; len <= 200; ++len) {
      CAPTURE(len);
      auto const c = classify(ctx, ctx.buffer().view(0, len));
      CHECK_FALSE(std::holds_alternative<HashColor>(c));
      if (auto const* code = std::get_if<CodeColor>(&c)) {
        std::size_t const n     = n_of(len, K);
        auto const&       below = ctx.levels()[n == 0 ? 0 : n - 1];
        CHECK(code->parity == n % 2);
        Word const w = theta(below, code->r);
        CHECK(w == Word(ctx.buffer().data().begin(), ctx.buffer().data().begin() + len));
        CHECK(code->r.size() < saturating_pow(K, 5));
      }
    }
    // a factor that is not a prefix is always '#'
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t const start = std::uniform_int_distribution<std::size_t>(1, 1000)(rng);
      std::size_t const len   = std::uniform_int_distribution<std::size_t>(1, 150)(rng);
      auto const        f     = ctx.buffer().view(start, len);
      bool const        is_prefix
          = std::equal(f.begin(), f.end(), ctx.buffer().data().begin());
      CHECK(std::holds_alternative<HashColor>(classify(ctx, f)) == !is_prefix);
    }
  }
}

TEST_CASE("color_count_bound") {
  for (unsigned K : {2u, 3u, 4u}) {
    CAPTURE(K);
    auto const k = color_count_bound(K);
    CHECK(k == oracle::color_count_ascending(K));
    CHECK(k == oracle::color_count_descending(K));
  }
  using boost::multiprecision::cpp_int;
  cpp_int const q = 18;
  CHECK(color_count_bound(2) == 2 + 2 * (boost::multiprecision::pow(q, 32) - 1) / 17);
  CHECK_THROWS_AS((void) color_count_bound(20), Error);
}

TEST_CASE("factor colorings") {
  auto const fl = first_letter_coloring();
  CHECK(fl(ab.encode("ba")) == Color{PaletteColor{1}});
  CHECK(fl(ab.encode("ab")) == Color{PaletteColor{0}});
  auto const cst = constant_coloring();
  CHECK(cst(ab.encode("ba")) == cst(ab.encode("aaaa")));

  auto ctx = std::make_shared<ColoringContext const>(
      build_context(literal(oracle::fibonacci(500)), 3, 81));
  auto const th = theorem_coloring(ctx);
  CHECK(th(ab.encode("aba")) == classify(*ctx, ab.encode("aba")));
}
