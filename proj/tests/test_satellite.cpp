#include "doctest.h"
#include "oracles.hpp"

#include <boost/rational.hpp>
#include <numeric>

#include "soleknot/error.hpp"
#include "soleknot/knotgrp.hpp"
#include "soleknot/satellite.hpp"

using namespace soleknot;

namespace {

Braid B(const char *s) { return parse_braid(s); }

Errc code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

Presentation trefoil() { return sphere_closure_presentation(B("2: s1 s1 s1")); }

Word named(const Presentation &p, const char *text) { return parse_named_word(text, p.gens); }

// Condition in its original rational form, with z and w recomputed here.
bool rational_condition(long s, long t, long p, long q, long d, long eps, long delta) {
  using R = boost::rational<long>;
  const long z = std::gcd(t, d), w = std::gcd(s, d * p * q + eps);
  if (!(d > 1 && std::abs(eps) == 1 && std::abs(delta) <= 1 && z > 1))
    return false;
  return R(p * q) - R(s, t) == R(-eps, d) + R(delta * z * w, d * t);
}

} // namespace

TEST_CASE("satellite of the trefoil by the trefoil pattern") {
  const Presentation p = satellite_presentation(trefoil(), B("2: s1 s1 s1"));
  CHECK(p.gens == std::vector<std::string>{"x1", "x2", "x1_1", "x2_1", "t_1"});
  REQUIRE(p.relators.size() == 5);
  CHECK(p.relators[0] == trefoil().relators[0]);
  CHECK(p.relators[3] == named(p, "X1 x1_1 x2_1"));
  CHECK(p.relators[4] == multiply(invert(trefoil().peripheral->longitude), named(p, "t_1")));
  CHECK(p.peripheral->meridian == named(p, "x1_1"));
  CHECK(p.peripheral->longitude ==
        named(p, "t_1 t_1 x1_1 x2_1 x1_1 x2_1 x1_1 x2_1 X1_1 X1_1 X1_1 X1_1 X1_1 X1_1"));
  CHECK(abelianize(p).infinite_cyclic());
  CHECK(h1_class(p, p.peripheral->longitude) == 0);
  CHECK(h1_class(p, named(p, "x1")) == 2);
}

TEST_CASE("satellite preconditions") {
  Presentation bare = trefoil();
  bare.peripheral.reset();
  CHECK(code_of([&] { satellite_presentation(bare, B("2: s1 s1 s1")); }) == Errc::MissingPeripheral);
  CHECK(code_of([&] { satellite_presentation(bare, B("1:")); }) == Errc::MissingPeripheral);
  CHECK(code_of([] { satellite_presentation(trefoil(), B("1:")); }) == Errc::WindingTooSmall);
  CHECK(code_of([] { satellite_presentation(trefoil(), B("2: s1 s1")); }) == Errc::NotAKnot);
}

TEST_CASE("generator names avoid collisions") {
  Presentation seed = parse_presentation("gens: x1_1 t_1\nrel: x1_1 T_1\nmeridian: x1_1\nlongitude:\n");
  const Presentation p = satellite_presentation(seed, B("2: s1"));
  CHECK(p.gens == std::vector<std::string>{"x1_1", "t_1", "x1_1_", "x2_1", "t_1_"});
}

TEST_CASE("filtration shape") {
  const std::vector<Braid> pats{B("2: s1 s1 s1"), B("3: s1 s2")};
  const auto stages = build_filtration(trefoil(), pats, 2);
  REQUIRE(stages.size() == 3);
  CHECK(stages[0].presentation.rank() == 2);
  CHECK(stages[1].presentation.rank() == 5);
  CHECK(stages[2].presentation.rank() == 9);
  CHECK(!stages[0].braid);
  CHECK(stages[0].inclusion.empty());
  CHECK(stages[2].inclusion.size() == 5);
  CHECK(h1_transition(stages, 0) == 2);
  CHECK(h1_transition(stages, 1) == 3);
  CHECK(code_of([&] { h1_transition(stages, 2); }) == Errc::IndexError);

  const auto zero = build_filtration(trefoil(), {}, 0);
  CHECK(zero.size() == 1);
  CHECK(code_of([&] { h1_transition(zero, 0); }) == Errc::IndexError);

  CHECK(code_of([&] { build_filtration(trefoil(), pats, 3); }) == Errc::DepthExceedsPatterns);
  CHECK(code_of([&] { build_filtration(trefoil(), {}, 1, true); }) == Errc::DepthExceedsPatterns);
  const auto rep = build_filtration(trefoil(), {B("2: s1 s1 s1")}, 2, true);
  CHECK(rep.size() == 3);
  CHECK(rep[2].braid == B("2: s1 s1 s1"));

  const nlohmann::json j = filtration_to_json(stages);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["braid"].is_null());
  CHECK(j[1]["braid"] == "2: s1 s1 s1");
  CHECK(parse_presentation(j[2]["presentation"].get<std::string>()) == stages[2].presentation);
  CHECK(j[1]["inclusion"][0] == nlohmann::json::array({"x1", "x1"}));
}

TEST_CASE("filtration invariants and the satellite alexander identity") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Braid> pats;
    for (int k = 0; k < 3; ++k)
      pats.push_back(rng.coin() ? B("2: s1 s1 s1") : oracle::random_knot_braid(rng, 3, 5));
    const int depth = trial < 3 ? 2 : 3;
    const auto stages = build_filtration(trefoil(), pats, depth);
    LaurentPoly prev = alexander_polynomial(stages[0].presentation);
    for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
      const Presentation &next = stages[k + 1].presentation;
      const Braid &pat = pats[k];
      CAPTURE(to_string(pat));
      CHECK(abelianize(next).infinite_cyclic());
      CHECK(h1_class(next, next.peripheral->longitude) == 0);
      CHECK(h1_transition(stages, k) == pat.strands());
      for (const Word &r : stages[k].presentation.relators)
        CHECK(std::find(next.relators.begin(), next.relators.end(), r) != next.relators.end());
      const LaurentPoly d = alexander_polynomial(next);
      const LaurentPoly expect =
          (alexander_polynomial(sphere_closure_presentation(pat)) * prev.substitute_power(pat.strands()))
              .normalized();
      CHECK(d == expect);
      prev = d;
    }
  }
}

TEST_CASE("cable criterion") {
  const CableCheck a = cable_tight_criterion(13, 2, 2, 3, 2, 1, 0);
  CHECK(a.satisfied);
  CHECK(a.z == 2);
  CHECK(a.w == 13);
  CHECK(cable_tight_criterion(11, 2, 2, 3, 2, -1, 0).satisfied);
  CHECK_FALSE(cable_tight_criterion(13, 2, 2, 3, 1, 1, 0).satisfied);
  CHECK_FALSE(cable_tight_criterion(13, 3, 2, 3, 2, 1, 0).satisfied);
  CHECK(code_of([] { cable_tight_criterion(1, 0, 2, 3, 2, 1, 0); }) == Errc::DomainError);
  CHECK(code_of([] { cable_tight_criterion(1, 2, 2, 3, 0, 1, 0); }) == Errc::DomainError);
  CHECK(code_of([] { cable_tight_criterion(1, 2, 2, 4, 2, 1, 0); }) == Errc::DomainError);

  const std::int64_t big = std::int64_t{1} << 40;
  const CableCheck b = cable_tight_criterion(13 * big, 2 * big, 2, 3, 2, 1, 0);
  CHECK(b.z == 2);
  CHECK(b.satisfied);
  CHECK_FALSE(cable_tight_criterion(13 * big + 1, 2 * big, 2, 3, 2, 1, 0).satisfied);

  int found = 0, nonzero_delta = 0;
  for (long s = -6; s <= 6; ++s)
    for (long t = -6; t <= 6; ++t)
      for (long p = -4; p <= 4; ++p)
        for (long q = -4; q <= 4; ++q)
          for (long d = -6; d <= 6; ++d)
            for (long e = -1; e <= 1; ++e)
              for (long dl = -1; dl <= 1; ++dl) {
                if (t == 0 || d == 0 || std::gcd(p, q) != 1)
                  continue;
                const bool got = cable_tight_criterion(s, t, p, q, d, e, dl).satisfied;
                REQUIRE(got == rational_condition(s, t, p, q, d, e, dl));
                found += got;
                nonzero_delta += got && dl != 0;
              }
  CHECK(found > 0);
  CHECK(nonzero_delta > 0);
}
