#include "doctest.h"
#include "oracles.hpp"

#include "soleknot/braid.hpp"
#include "soleknot/error.hpp"
#include "soleknot/freegroup.hpp"

using namespace soleknot;

namespace {
Word W(const char *s) { return parse_word(s); }
} // namespace

TEST_CASE("reduce examples") {
  CHECK(reduce(std::vector<Letter>{{1, 1}, {1, -1}}).empty());
  CHECK(reduce(std::vector<Letter>{{1, 1}, {2, 1}, {2, -1}, {1, 1}}) == W("x1 x1"));
  CHECK(reduce(std::vector<Letter>{{2, -1}, {2, 1}, {2, -1}}) == W("X2"));
}

TEST_CASE("multiply and invert examples") {
  CHECK(multiply(W("x1 x2"), W("X2 x3")) == W("x1 x3"));
  const Word w = W("x1 X3 x2");
  CHECK(multiply(w, Word{}) == w);
  CHECK(multiply(w, invert(w)).empty());
  CHECK(invert(W("x1 x2")) == W("X2 X1"));
  CHECK(invert(Word{}).empty());
  CHECK(invert(W("X1")) == W("x1"));
}

TEST_CASE("apply_endo examples") {
  const FreeEndo s1 = artin_endo(parse_braid("2: s1"));
  CHECK(apply_endo(s1, W("x1")) == W("x1 x2 X1"));
  CHECK(apply_endo(FreeEndo::identity(3), W("x3 X1 x2")) == W("x3 X1 x2"));
  CHECK(apply_endo(s1, W("x1 x2")) == W("x1 x2"));
  CHECK_THROWS_AS(apply_endo(s1, W("x3")), Error);
  try {
    apply_endo(s1, W("x3"));
  } catch (const Error &e) {
    CHECK(e.code() == Errc::IndexOutOfRank);
  }
}

TEST_CASE("compose examples") {
  const FreeEndo s = artin_endo(parse_braid("2: s1"));
  const FreeEndo si = artin_endo(parse_braid("2: S1"));
  CHECK(compose(s, si) == FreeEndo::identity(2));
  CHECK(compose(s, s).image(1) == W("x1 x2 x1 X2 X1"));
  CHECK(compose(s, s).image(1) == apply_endo(s, apply_endo(s, W("x1"))));
  CHECK(compose(FreeEndo::identity(2), s) == s);
  CHECK_THROWS_AS(compose(s, FreeEndo::identity(3)), Error);
}

TEST_CASE("cyclic_decompose examples") {
  auto d = cyclic_decompose(W("x2 x1 X2"));
  CHECK(d.prefix == W("x2"));
  CHECK(d.core == W("x1"));
  d = cyclic_decompose(W("x1"));
  CHECK(d.prefix.empty());
  CHECK(d.core == W("x1"));
  d = cyclic_decompose(W("x1 x2 x1 X2 X1"));
  CHECK(d.prefix == W("x1 x2"));
  CHECK(d.core == W("x1"));
}

TEST_CASE("exponent_sum examples") {
  CHECK(exponent_sum(W("x1 x2 X1"), 1) == 0);
  CHECK(exponent_sum(power(W("x1 x2"), 3)) == 6);
  CHECK(exponent_sum(Word{}, 1) == 0);
}

TEST_CASE("word text round trip and parse errors") {
  CHECK(to_string(W("x1 x2 X1")) == "x1 x2 X1");
  CHECK(to_string(W("")) == "");
  CHECK(to_string(W("  x1  X1 x12 ")) == "x12");
  CHECK_THROWS_AS(W("x"), ParseError);
  CHECK_THROWS_AS(W("y1"), ParseError);
  CHECK_THROWS_AS(W("x0"), ParseError);
  CHECK_THROWS_AS(W("x1X2"), ParseError);
  try {
    W("x1 q2");
  } catch (const ParseError &e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("power") {
  CHECK(power(W("x1 x2"), -2) == W("X2 X1 X2 X1"));
  CHECK(power(W("x1 x2 X1"), 3) == W("x1 x2 x2 x2 X1"));
  CHECK(power(W("x1"), 0).empty());
}

TEST_CASE("property: reduce agrees with the naive oracle and is idempotent") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = oracle::random_raw(rng, 3, rng.uniform(0, 30));
    std::vector<Letter> letters;
    for (int v : raw)
      letters.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
    const Word w = reduce(letters);
    CHECK(oracle::to_raw(w) == oracle::naive_reduce(raw));
    CHECK(reduce(w.letters()) == w);
  }
}

TEST_CASE("property: group laws") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word a = oracle::random_word(rng, 3, 12);
    const Word b = oracle::random_word(rng, 3, 12);
    const Word c = oracle::random_word(rng, 3, 12);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, Word{}) == a);
    CHECK(multiply(Word{}, a) == a);
    CHECK(multiply(a, invert(a)).empty());
    CHECK(multiply(invert(a), a).empty());
    CHECK(oracle::to_raw(multiply(a, b)) ==
          oracle::naive_reduce(oracle::concat(oracle::to_raw(a), oracle::to_raw(b))));
  }
}

TEST_CASE("property: cyclic_decompose round trip") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = oracle::random_word(rng, 2, 14);
    const auto d = cyclic_decompose(w);
    CHECK(multiply(d.prefix, multiply(d.core, invert(d.prefix))) == w);
    if (d.core.size() >= 2)
      CHECK_FALSE(d.core.front().cancels(d.core.back()));
  }
}

TEST_CASE("property: apply_endo is a homomorphism") {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto b = oracle::random_braid(rng, 4, rng.uniform(0, 6));
    const FreeEndo e = artin_endo(b);
    const Word u = oracle::random_word(rng, 4, 10);
    const Word v = oracle::random_word(rng, 4, 10);
    CHECK(apply_endo(e, multiply(u, v)) == multiply(apply_endo(e, u), apply_endo(e, v)));
  }
}

TEST_CASE("FreeEndo construction checks") {
  CHECK_THROWS_AS(FreeEndo(2, {W("x1")}), Error);
  CHECK_THROWS_AS(FreeEndo(2, {W("x1"), W("x3")}), Error);
  CHECK(endo_power(FreeEndo::identity(2), 5) == FreeEndo::identity(2));
}
