#pragma once

#include <cstdint>
#include <vector>

#include "soleknot/braid.hpp"
#include "soleknot/laurent.hpp"
#include "soleknot/presentation.hpp"
#include "soleknot/snf.hpp"

namespace soleknot {

/// Closure of beta in the 3-sphere: generators x1..xn, relators
/// x_i^-1 beta(x_i) for 2 <= i <= n (the one for x1 is a consequence),
/// meridian x1 and 0-framed longitude
/// w x1^-s with w the meridian conjugator and s its exponent sum.
Presentation sphere_closure_presentation(const Braid &beta);

/// Relators x generators matrix of exponent sums.
IntMatrix exponent_matrix(const Presentation &p);

struct Abelianization {
  std::vector<BigInt> invariant_factors; // entries > 1
  int free_rank = 0;

  bool infinite_cyclic() const { return free_rank == 1 && invariant_factors.empty(); }
  friend bool operator==(const Abelianization &, const Abelianization &) = default;
};

Abelianization abelianize(const Presentation &p);
/// `Z`, `Z/3`, `Z^2 + Z/2`, `0`.
std::string to_string(const Abelianization &a);

/// Image of w in H1 = Z, scaled so the meridian maps to +1. Throws
/// NotInfiniteCyclic, MissingPeripheral, or MeridianNotGenerator.
std::int64_t h1_class(const Presentation &p, const Word &w);

/// Fox derivatives pushed through the abelianization, one row per relator.
/// The meridian (or, without peripheral data, a chosen generator of H1) maps
/// to t. Throws NotKnotLike unless H1 = Z.
std::vector<std::vector<LaurentPoly>> fox_matrix(const Presentation &p);

/// Generator of the smallest principal ideal containing the first elementary
/// ideal (gcd of the (g-1)-minors of the Fox matrix), normalized. Needs at
/// least g-1 relators. Throws NotKnotLike.
LaurentPoly alexander_polynomial(const Presentation &p);

/// Cyclic reduction, removal of trivial and duplicate relators, and
/// elimination of generators that occur once in some relator whenever this
/// shortens the total relator length. Peripheral words are rewritten.
Presentation tietze_simplify(const Presentation &p);

} // namespace soleknot
