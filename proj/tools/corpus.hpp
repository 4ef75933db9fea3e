#pragma once

#include <cstdint>
#include <vector>

#include "soleknot/braid.hpp"

namespace soleknot::corpus {

/// Every freely reduced braid word on 2..max_strands strands of length
/// 1..max_len whose closure is a knot.
std::vector<Braid> exhaustive_knot_braids(int max_strands, int max_len);

/// Seeded knot-closure braids with uniformly drawn strand count and length.
std::vector<Braid> random_knot_braids(std::uint64_t seed, int count, int min_strands, int max_strands,
                                      int max_len);

/// exhaustive_knot_braids(3, 5) followed by random_knot_braids(seed, 100, 2, 4, 8).
std::vector<Braid> default_corpus(std::uint64_t seed);

} // namespace soleknot::corpus
