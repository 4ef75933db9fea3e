#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "soleknot/braid.hpp"
#include "soleknot/presentation.hpp"
#include "soleknot/snf.hpp"

namespace soleknot {

/// Knot group of the satellite with the given companion and pattern braid.
/// The pattern contributes generators x1_<stage>..xn_<stage> and t_<stage>
/// (underscores are appended if a name is already taken). Relators, in order:
/// the companion's, t^-1 x_i t beta(x_i)^-1, mu_C^-1 x1..xn, lambda_C^-1 t.
/// The new meridian is x1 and the longitude t^n w x1^-s.
/// Errors are checked in the order MissingPeripheral, WindingTooSmall,
/// NotAKnot.
Presentation satellite_presentation(const Presentation &companion, const Braid &beta,
                                    int stage = 1);

struct FiltrationStage {
  int index = 0;
  std::optional<Braid> braid;
  Presentation presentation;
  /// Previous stage generator name -> name in this stage. Empty at stage 0.
  std::vector<std::pair<std::string, std::string>> inclusion;
};

/// Stage 0 is the seed; stage k+1 is the satellite of stage k by
/// patterns[k], cycling through the list when `repeat` is set.
std::vector<FiltrationStage> build_filtration(const Presentation &seed,
                                              const std::vector<Braid> &patterns, int depth,
                                              bool repeat = false);

/// H1 class in stage k+1 of the image of the stage-k meridian.
std::int64_t h1_transition(const std::vector<FiltrationStage> &stages, std::size_t k);

nlohmann::json filtration_to_json(const std::vector<FiltrationStage> &stages);

struct CableCheck {
  bool satisfied = false;
  BigInt z, w;
};

/// z = gcd(t, d), w = gcd(s, d p q + eps); satisfied iff d > 1, |eps| = 1,
/// |delta| <= 1, z > 1 and d (p q t - s) = -eps t + delta z w.
/// DomainError if t or d is zero or if p and q are not coprime.
CableCheck cable_tight_criterion(std::int64_t s, std::int64_t t, std::int64_t p, std::int64_t q,
                                 std::int64_t d, std::int64_t eps, std::int64_t delta);

} // namespace soleknot
