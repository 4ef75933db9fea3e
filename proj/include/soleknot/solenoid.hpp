#pragma once

// Solenoids are classified by the supernatural number prod n_i. For an
// eventually periodic sequence a prime dividing some period entry occurs
// infinitely often; every other prime occurs finitely often. Two such
// sequences give homeomorphic solenoids iff their supernatural numbers agree
// up to finitely many finite factors, and since finite exponents are always
// finite in number here, this reduces to equality of the infinite prime sets:
// deleting the preperiod and finitely many period blocks changes only finite
// exponents.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "soleknot/error.hpp"

namespace soleknot {

inline constexpr std::int64_t kDefaultFactorBound = 1'000'000;

/// n_1, n_2, ... given as preperiod followed by a repeated period block.
struct WindingSeq {
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period;

  friend bool operator==(const WindingSeq &, const WindingSeq &) = default;
};

/// `pre: 12 5 | per: 2 3`. The `pre:` part may be empty or omitted.
WindingSeq parse_winding_seq(std::string_view text);
std::string to_string(const WindingSeq &s);

struct PrimeProfile {
  std::map<std::int64_t, std::int64_t> finite;
  std::set<std::int64_t> infinite;

  friend bool operator==(const PrimeProfile &, const PrimeProfile &) = default;
};

/// `{2:2, 3:1, 5:inf}`, primes ascending.
std::string to_string(const PrimeProfile &p);
nlohmann::json to_json(const PrimeProfile &p);

/// Prime factorization of n >= 2 by trial division, primes ascending.
/// EntryTooSmall below 2, EntryTooLarge above `bound`.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n,
                                                    std::int64_t bound = kDefaultFactorBound);

/// Throws EntryTooSmall, EntryTooLarge or EmptyPeriod.
PrimeProfile profile(const WindingSeq &s, std::int64_t bound = kDefaultFactorBound);

bool solenoids_equivalent(const WindingSeq &a, const WindingSeq &b,
                          std::int64_t bound = kDefaultFactorBound);

struct Violation {
  Errc code;
  bool in_period = false;
  std::size_t position = 0;

  friend bool operator==(const Violation &, const Violation &) = default;
};

/// `EntryTooSmall at period 0`, `EmptyPeriod`.
std::string to_string(const Violation &v);

/// Entries below 2 and an empty period, in reading order.
std::vector<Violation> validate_sequence(const WindingSeq &s);

} // namespace soleknot
