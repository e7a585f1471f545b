#include <doctest.h>

#include <random>

#include "lrcolor/error.hpp"
#include "lrcolor/returns.hpp"
#include "oracles.hpp"

using namespace lrcolor;

namespace {

  Alphabet const ab("ab");

  PrefixBuffer literal(std::string const& text, Alphabet const& alpha = ab) {
    return prefix(Literal{alpha, alpha.encode(text)}, text.size());
  }

  PrefixBuffer fib(std::size_t n) {
    return literal(oracle::fibonacci(n));
  }

  PrefixBuffer tmorse(std::size_t n) {
    return literal(oracle::thue_morse(n));
  }

  std::vector<std::string> names(ReturnSystem const& sys) {
    std::vector<std::string> out;
    for (auto const& r : sys.returns) {
      out.push_back(ab.decode(r));
    }
    return out;
  }

}  // namespace

TEST_CASE("occurrences") {
  CHECK(occurrences(ab.encode("abaababaabaab"), ab.encode("ab"))
        == std::vector<std::size_t>{0, 3, 5, 8, 11});
  CHECK(occurrences(ab.encode("aaaa"), ab.encode("aa")) == std::vector<std::size_t>{0, 1, 2});
  Alphabet const abcd("abcd");
  CHECK(occurrences(abcd.encode("abc"), abcd.encode("d")).empty());
  CHECK_THROWS_AS((void) occurrences(ab.encode("ab"), Word{}), Error);

  SUBCASE("matches std::string::find") {
    auto const x = oracle::thue_morse(600);
    for (std::string u : {"a", "abba", "baab", "aabbab", "bbb"}) {
      std::vector<std::size_t> got = occurrences(ab.encode(x), ab.encode(u));
      CHECK(got == oracle::occurrences(x, u));
    }
  }
}

TEST_CASE("return_system examples") {
  auto const buf = fib(200);

  auto const a = return_system(buf, 1, buf.size());
  CHECK(names(a) == std::vector<std::string>{"ab", "a"});
  CHECK(IndexWord(a.derived.begin(), a.derived.begin() + 5) == IndexWord{0, 1, 0, 0, 1});
  CHECK(a.stable);

  auto const abs = return_system(buf, 2, buf.size());
  CHECK(names(abs) == std::vector<std::string>{"aba", "ab"});
  CHECK(std::vector<std::size_t>(abs.boundaries.begin(), abs.boundaries.begin() + 5)
        == std::vector<std::size_t>{0, 3, 5, 8, 11});

  Alphabet const abc("abc");
  auto const     cabab = literal("cabab", abc);
  try {
    (void) return_system(cabab, 1, cabab.size());
    FAIL("expected WindowTooSmall");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::WindowTooSmall);
  }
  try {
    (void) return_system(buf, ab.encode("b"), buf.size());
    FAIL("expected NotAPrefix");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::NotAPrefix);
  }
}

TEST_CASE("theta") {
  auto const buf = fib(200);
  auto const a   = return_system(buf, 1, buf.size());
  auto const abs = return_system(buf, 2, buf.size());
  CHECK(ab.decode(theta(a, IndexWord{0, 1})) == "aba");
  CHECK(theta(a, IndexWord{}).empty());
  CHECK(ab.decode(theta(abs, IndexWord{1, 0})) == "ababa");
  CHECK_THROWS_AS((void) theta(abs, IndexWord{2}), Error);

  SUBCASE("morphism") {
    IndexWord r{0, 1, 1}, s{1, 0};
    IndexWord rs = r;
    rs.insert(rs.end(), s.begin(), s.end());
    Word expected = theta(abs, r);
    Word ts       = theta(abs, s);
    expected.insert(expected.end(), ts.begin(), ts.end());
    CHECK(theta(abs, rs) == expected);
  }
}

TEST_CASE("parse_by_returns") {
  auto const buf = fib(200);
  auto const a   = return_system(buf, 1, buf.size());
  auto const abs = return_system(buf, 2, buf.size());
  CHECK(parse_by_returns(abs, ab.encode("abaab")) == IndexWord{0, 1});
  Word abax = ab.encode("aba");
  abax.push_back(7);
  CHECK_FALSE(parse_by_returns(abs, abax).has_value());
  CHECK(parse_by_returns(a, ab.encode("ab")) == IndexWord{0});
  // length 4 is not a boundary of the "ab" tiling
  CHECK_FALSE(parse_by_returns(abs, ab.encode("abaa")).has_value());
  // a concatenation of returns that is not a prefix of the word
  CHECK(parse_by_returns(abs, ab.encode("abab")) == IndexWord{1, 1});
  CHECK(parse_by_returns(abs, ab.encode("ababaaba")) == IndexWord{1, 0, 0});
}

TEST_CASE("tiling reconstruction and parse round trip") {
  auto const   buf = fib(3000);
  std::mt19937 rng(7);
  for (std::size_t len : {1, 2, 3, 5, 8, 13, 21, 34, 55}) {
    auto const sys = return_system(buf, len, buf.size());
    REQUIRE(sys.stable);
    Word tiled = theta(sys, sys.derived);
    CHECK(tiled.size() == sys.boundaries.back());
    CHECK(std::equal(tiled.begin(), tiled.end(), buf.data().begin()));
    for (auto b : sys.boundaries) {
      CHECK(std::equal(sys.base.begin(), sys.base.end(), buf.data().begin() + b));
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(1, sys.derived.size())(rng);
      IndexWord   r(sys.derived.begin(), sys.derived.begin() + j);
      CHECK(parse_by_returns(sys, theta(sys, r)) == r);

      std::size_t const from = std::uniform_int_distribution<std::size_t>(1, sys.derived.size() - 1)(rng);
      std::size_t const len  = std::min<std::size_t>(1 + rng() % 12, sys.derived.size() - from);
      IndexWord const   mid(sys.derived.begin() + from, sys.derived.begin() + from + len);
      CHECK(parse_by_returns(sys, theta(sys, mid)) == mid);
    }
  }
}

TEST_CASE("lambda_morphism") {
  auto const buf = fib(2000);
  auto const a   = return_system(buf, 1, buf.size());
  auto const abs = return_system(buf, 2, buf.size());

  auto const m = lambda_morphism(abs, a);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == IndexWord{0, 1});
  CHECK(m[1] == IndexWord{0});

  auto const id = lambda_morphism(abs, abs);
  CHECK(id == std::vector<IndexWord>{{0}, {1}});

  SUBCASE("corrupted boundaries") {
    auto broken = a;
    broken.boundaries.erase(std::find(broken.boundaries.begin(), broken.boundaries.end(), 3));
    try {
      (void) lambda_morphism(abs, broken);
      FAIL("expected AlignmentFailure");
    } catch (Error const& e) {
      CHECK(e.code() == Errc::AlignmentFailure);
    }
  }

  SUBCASE("composition on Thue-Morse prefixes") {
    auto const t = tmorse(8000);
    for (std::size_t lu : {1, 2, 3, 4, 8, 16}) {
      for (std::size_t lv = 1; lv <= lu; ++lv) {
        auto const su = return_system(t, lu, t.size());
        auto const sv = return_system(t, lv, t.size());
        auto const mm = lambda_morphism(su, sv);
        for (std::size_t i = 0; i < su.returns.size(); ++i) {
          CHECK(theta(sv, mm[i]) == su.returns[i]);
        }
      }
    }
  }
}

TEST_CASE("stability monotonicity") {
  auto const buf = fib(4000);
  for (std::size_t len : {1, 3, 9, 27}) {
    std::size_t w = 8 * len;
    while (!return_system(buf, len, w).stable) {
      w *= 2;
    }
    auto const first = return_system(buf, len, w);
    for (std::size_t bigger = w; bigger <= buf.size(); bigger += 331) {
      CHECK(return_system(buf, len, bigger).returns == first.returns);
    }
  }
}

TEST_CASE("estimate_K") {
  SUBCASE("Fibonacci") {
    auto const buf = fib(16384);
    auto const est = estimate_K(buf, 34);
    CHECK(est.k_hat == 3);
    CHECK(est.k_hat == oracle::brute_force_K(oracle::fibonacci(6000), 34));
    CHECK(est.margin_ok);
  }
  SUBCASE("Thue-Morse") {
    auto const buf = tmorse(16384);
    auto const est = estimate_K(buf, 16);
    CHECK(est.k_hat == 8);
    CHECK(est.k_hat == oracle::brute_force_K(oracle::thue_morse(6000), 16));
    CHECK(est.margin_ok);
  }
  SUBCASE("properties of the samples") {
    for (auto const& buf : std::vector{fib(16384), tmorse(16384)}) {
      auto const        est = estimate_K(buf, 12);
      std::size_t const k   = est.k_hat;
      CHECK(k >= 2);
      for (auto const& s : est.samples) {
        CHECK(k * s.length >= s.max_return);
        CHECK(s.return_count <= k * (k + 1) * (k + 1));
        CHECK(s.length < k * s.min_return);
      }
    }
  }
  SUBCASE("periodic control") {
    std::string abab;
    for (int i = 0; i < 200; ++i) {
      abab += "ab";
    }
    auto const p   = literal(abab);
    auto const sys = return_system(p, 2, p.size());
    CHECK(names(sys) == std::vector<std::string>{"ab"});
    CHECK(estimate_K(p, 4).k_hat == 2);
    CHECK(detect_period(p.view()) == 2);
  }
  SUBCASE("too short") {
    auto const buf = fib(20);
    try {
      (void) estimate_K(buf, 8);
      FAIL("expected Unstable");
    } catch (Error const& e) {
      CHECK(e.code() == Errc::Unstable);
    }
  }
}
