#include "doctest.h"
#include "oracles.hpp"

#include "soleknot/error.hpp"
#include "soleknot/knotgrp.hpp"

using namespace soleknot;

namespace {

Word W(const char *s) { return parse_word(s); }
Braid B(const char *s) { return parse_braid(s); }
Presentation P(const char *s) { return parse_presentation(s); }

Errc code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

LaurentPoly poly(std::vector<int> ascending) {
  std::vector<BigInt> c(ascending.begin(), ascending.end());
  return LaurentPoly(0, std::move(c));
}

LaurentPoly torus_2(int k) {
  std::vector<int> c;
  for (int i = 0; i <= 2 * k; ++i)
    c.push_back(i % 2 ? -1 : 1);
  return poly(c);
}

Braid sigma1_power(int e) {
  return Braid(2, std::vector<BraidLetter>(static_cast<std::size_t>(e), BraidLetter{1, 1}));
}

// Unreduced Burau matrix of a braid, multiplied out letter by letter.
using PM = std::vector<std::vector<LaurentPoly>>;

PM burau(const Braid &b) {
  const auto n = static_cast<std::size_t>(b.strands());
  PM m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly ti = LaurentPoly::monomial(1, -1);
  for (const BraidLetter &l : b.word()) {
    PM g(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      g[i][i] = 1;
    const auto i = static_cast<std::size_t>(l.gen - 1);
    if (l.sign > 0) {
      g[i][i] = LaurentPoly(1) - t;
      g[i][i + 1] = t;
      g[i + 1][i] = 1;
      g[i + 1][i + 1] = {};
    } else {
      g[i][i] = {};
      g[i][i + 1] = 1;
      g[i + 1][i] = ti;
      g[i + 1][i + 1] = LaurentPoly(1) - ti;
    }
    PM r(n, std::vector<LaurentPoly>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k)
          r[a][c] += m[a][k] * g[k][c];
    m = std::move(r);
  }
  return m;
}

LaurentPoly laplace(const PM &m) {
  if (m.empty())
    return 1;
  LaurentPoly acc;
  for (std::size_t c = 0; c < m.size(); ++c) {
    PM sub;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != c)
          row.push_back(m[r][k]);
      sub.push_back(row);
    }
    const LaurentPoly term = m[0][c] * laplace(sub);
    acc = c % 2 ? acc - term : acc + term;
  }
  return acc;
}

// Alexander polynomial from the Burau representation: the minor of I - B
// with the last row and column removed.
LaurentPoly burau_alexander(const Braid &b) {
  const PM m = burau(b);
  const std::size_t n = m.size();
  PM a(n - 1, std::vector<LaurentPoly>(n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      a[i][j] = (i == j ? LaurentPoly(1) : LaurentPoly()) - m[i][j];
  return laplace(a).normalized();
}

} // namespace

TEST_CASE("sphere closure presentation of the trefoil") {
  const Presentation p = sphere_closure_presentation(B("2: s1 s1 s1"));
  CHECK(p.gens == std::vector<std::string>{"x1", "x2"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == W("X2 x1 x2 x1 X2 X1"));
  REQUIRE(p.peripheral);
  CHECK(p.peripheral->meridian == W("x1"));
  CHECK(p.peripheral->longitude == multiply(power(W("x1 x2"), 3), power(W("x1"), -6)));
}

TEST_CASE("sphere closure presentation of the cinquefoil and the unknot") {
  const Presentation five = sphere_closure_presentation(sigma1_power(5));
  CHECK(five.peripheral->longitude == multiply(power(W("x1 x2"), 5), power(W("x1"), -10)));
  CHECK(abelianize(five).infinite_cyclic());

  const Presentation one = sphere_closure_presentation(B("2: s1"));
  CHECK(one.relators == std::vector<Word>{W("X2 x1")});
  const Presentation simple = tietze_simplify(one);
  CHECK(simple.gens == std::vector<std::string>{"x1"});
  CHECK(simple.relators.empty());
  CHECK(to_string(abelianize(simple)) == "Z");

  CHECK(code_of([] { sphere_closure_presentation(B("2: s1 s1")); }) == Errc::NotAKnot);
}

TEST_CASE("abelianization examples") {
  const Presentation tre = sphere_closure_presentation(B("2: s1 s1 s1"));
  CHECK(to_string(exponent_matrix(tre)) == "[1 -1]\n");
  CHECK(to_string(abelianize(tre)) == "Z");
  const Abelianization z3 = abelianize(P("gens: a\nrel: a a a\n"));
  CHECK(z3.free_rank == 0);
  CHECK(z3.invariant_factors == std::vector<BigInt>{3});
  CHECK(to_string(z3) == "Z/3");
  CHECK(abelianize(P("gens: a b\n")).free_rank == 2);
  CHECK(to_string(abelianize(P("gens: a b c\nrel: a a b b\n"))) == "Z^2 + Z/2");
  CHECK(to_string(abelianize(P("gens: a\nrel: a\n"))) == "0");
  CHECK(to_string(abelianize(P("gens: a b\nrel: a a b b b b\nrel: a a a a a a b b b b\n"))) ==
        "Z/2 + Z/8");
}

TEST_CASE("h1 classes on the trefoil") {
  const Presentation tre = sphere_closure_presentation(B("2: s1 s1 s1"));
  CHECK(h1_class(tre, W("x1")) == 1);
  CHECK(h1_class(tre, tre.peripheral->longitude) == 0);
  CHECK(h1_class(tre, W("x2 x2")) == 2);
  CHECK(h1_class(tre, W("X2 x1 X1")) == -1);
  CHECK(code_of([&] { h1_class(tre, W("x3")); }) == Errc::IndexOutOfRank);

  Presentation bare = tre;
  bare.peripheral.reset();
  CHECK(code_of([&] { h1_class(bare, W("x1")); }) == Errc::MissingPeripheral);
  CHECK(code_of([] { h1_class(P("gens: a\nrel: a a\nmeridian: a\nlongitude:\n"), W("x1")); }) ==
        Errc::NotInfiniteCyclic);
  CHECK(code_of([] { h1_class(P("gens: a b\nrel: a B B\nmeridian: a\nlongitude:\n"), W("x1")); }) ==
        Errc::MeridianNotGenerator);
}

TEST_CASE("alexander polynomial examples") {
  CHECK(to_string(alexander_polynomial(sphere_closure_presentation(B("2: s1 s1 s1")))) ==
        "t^2 - t + 1");
  CHECK(alexander_polynomial(sphere_closure_presentation(B("2: s1"))) == LaurentPoly(1));
  CHECK(to_string(alexander_polynomial(sphere_closure_presentation(sigma1_power(5)))) ==
        "t^4 - t^3 + t^2 - t + 1");
  // Figure eight.
  CHECK(to_string(alexander_polynomial(sphere_closure_presentation(B("3: s1 S2 s1 S2")))) ==
        "t^2 - 3t + 1");
  CHECK(alexander_polynomial(P("gens: a\n")) == LaurentPoly(1));
  for (int k = 0; k <= 4; ++k) {
    const LaurentPoly d = alexander_polynomial(sphere_closure_presentation(sigma1_power(2 * k + 1)));
    CHECK(d == torus_2(k));
    CHECK(abs(d.at_one()) == 1);
  }
}

TEST_CASE("alexander polynomial preconditions") {
  CHECK(code_of([] { alexander_polynomial(P("gens: a b\n")); }) == Errc::NotKnotLike);
  CHECK(code_of([] { alexander_polynomial(P("gens: a b\nrel: a a\n")); }) == Errc::NotKnotLike);
  CHECK(code_of([] { alexander_polynomial(P("gens: a\nrel: a\nrel: a\n")); }) == Errc::NotKnotLike);
}

TEST_CASE("alexander polynomial accepts a redundant relator") {
  const Braid b = B("3: s1 s2 s1 s2");
  const Presentation p = sphere_closure_presentation(b);
  Presentation full = p;
  full.relators.push_back(multiply(Word::generator(1, -1), apply_endo(artin_endo(b), W("x1"))));
  CHECK(alexander_polynomial(full) == alexander_polynomial(p));

  // Powers of a relator give Fox rows that are integer multiples of it.
  Presentation tre = sphere_closure_presentation(B("2: s1 s1 s1"));
  const Word r = tre.relators[0];
  tre.relators.push_back(power(r, 2));
  CHECK(to_string(alexander_polynomial(tre)) == "t^2 - t + 1");
  tre.relators.push_back(power(r, 3));
  tre.relators.push_back(conjugate(power(r, -2), W("x2 x1")));
  CHECK(to_string(alexander_polynomial(tre)) == "t^2 - t + 1");
}

TEST_CASE("closure invariants over random knot braids") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const Braid b = oracle::random_knot_braid(rng, rng.uniform(2, 4), 9);
    CAPTURE(to_string(b));
    const Presentation p = sphere_closure_presentation(b);
    CHECK(abelianize(p).infinite_cyclic());
    CHECK(h1_class(p, p.peripheral->longitude) == 0);
    const LaurentPoly d = alexander_polynomial(p);
    CHECK(abs(d.at_one()) == 1);
    CHECK(d.mirror().normalized() == d);
    CHECK(d == burau_alexander(b));
  }
}

TEST_CASE("tietze moves") {
  const Presentation ab = tietze_simplify(P("gens: a b\nrel: B a\n"));
  CHECK(ab.gens == std::vector<std::string>{"a"});
  CHECK(ab.relators.empty());

  const Presentation tre = sphere_closure_presentation(B("2: s1 s1 s1"));
  CHECK(tietze_simplify(tre) == tre);

  const Presentation dup = tietze_simplify(P("gens: a b\nrel: a b A B\nrel: b a B A\nrel: a b A B\n"));
  CHECK(dup.relators.size() == 1);

  const Presentation triv = tietze_simplify(P("gens: a b\nrel: a A\nrel: b a B\n"));
  CHECK(triv.gens == std::vector<std::string>{"b"});
  CHECK(triv.relators.empty());

  const Presentation per = tietze_simplify(P("gens: a b\nrel: B a a\nmeridian: b\nlongitude: b a\n"));
  CHECK(to_text(per) == "gens: a\nmeridian: a a\nlongitude: a a a\n");
}

TEST_CASE("tietze preserves abelianization and alexander polynomial") {
  oracle::Rng rng(7);
  int shrunk = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Braid b = oracle::random_knot_braid(rng, rng.uniform(2, 4), 8);
    CAPTURE(to_string(b));
    const Presentation p = sphere_closure_presentation(b);
    const Presentation s = tietze_simplify(p);
    CHECK(abelianize(s) == abelianize(p));
    CHECK(alexander_polynomial(s) == alexander_polynomial(p));
    CHECK(h1_class(s, s.peripheral->meridian) == 1);
    CHECK(h1_class(s, s.peripheral->longitude) == 0);
    shrunk += s.rank() < p.rank();
  }
  CHECK(shrunk > 0);

  for (int trial = 0; trial < 80; ++trial) {
    Presentation p;
    p.gens = indexed_names(3, "g");
    const int rels = rng.uniform(0, 3);
    for (int r = 0; r < rels; ++r)
      p.relators.push_back(oracle::random_word(rng, 3, 6));
    CAPTURE(to_text(p));
    const Presentation s = tietze_simplify(p);
    CHECK(abelianize(s) == abelianize(p));
  }
}

TEST_CASE("smith normal form reconstructs the input") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(0, 5));
    const auto n = static_cast<std::size_t>(rng.uniform(0, 5));
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = rng.uniform(-6, 6) * (rng.coin() ? 1 : rng.uniform(0, 3));
    CAPTURE(to_string(a));
    const SmithForm s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j || i >= s.rank)
          CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i < s.rank; ++i) {
      CHECK(s.D(i, i) > 0);
      if (i + 1 < s.rank)
        CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    }
  }
}

TEST_CASE("laurent polynomial arithmetic") {
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly a = t * t - t + LaurentPoly(1);
  CHECK(to_string(a) == "t^2 - t + 1");
  CHECK(to_string(LaurentPoly::monomial(-2, 3)) == "-2t^3");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(LaurentPoly::monomial(1, -1)) == "t^-1");
  CHECK(LaurentPoly::divide_exact(a * (t + LaurentPoly(1)), a) == t + LaurentPoly(1));
  CHECK_THROWS_AS(LaurentPoly::divide_exact(a, t + LaurentPoly(1)), std::domain_error);
  CHECK(poly_gcd(a * (t - LaurentPoly(1)) * LaurentPoly(6), a * LaurentPoly(4) * t) ==
        a * LaurentPoly(2));
  CHECK(a.substitute_power(2) == t * t * t * t - t * t + LaurentPoly(1));
  CHECK(t.substitute_power(-1) == LaurentPoly::monomial(1, -1));
  CHECK((LaurentPoly::monomial(-3, -2) + LaurentPoly::monomial(-1, 0)).normalized() ==
        t * t + LaurentPoly(3));
}
