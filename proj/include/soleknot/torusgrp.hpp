#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "soleknot/braid.hpp"
#include "soleknot/freegroup.hpp"
#include "soleknot/presentation.hpp"

namespace soleknot {

/// Normal form t^texp * tail in the mapping-torus group F_n x| Z, with the
/// relation t^-1 x t = beta(x).
struct TorusElement {
  std::int64_t texp = 0;
  Word tail;

  friend bool operator==(const TorusElement &, const TorusElement &) = default;
};

/// `t^<m> | <word>`, e.g. `t^2 | x1 x2`; the identity prints as `t^0 |`.
std::string to_string(const TorusElement &e);
TorusElement parse_torus_element(std::string_view text);

/// Arithmetic context for one braid. Powers beta^k are memoized; the cache is
/// internally synchronized and only ever filled with the same values, so a
/// context can be shared between threads.
class MappingTorus {
public:
  explicit MappingTorus(Braid beta);

  const Braid &braid() const noexcept { return beta_; }
  int rank() const noexcept { return beta_.strands(); }

  /// beta^k for any integer k.
  const FreeEndo &endo_power(std::int64_t k) const;
  Word act(std::int64_t k, const Word &z) const;

  TorusElement multiply(const TorusElement &a, const TorusElement &b) const;
  TorusElement invert(const TorusElement &a) const;
  TorusElement pow(const TorusElement &a, std::int64_t k) const;

private:
  void check(const TorusElement &a) const;

  Braid beta_;
  mutable std::mutex mu_;
  mutable std::map<std::int64_t, std::unique_ptr<FreeEndo>> powers_;
};

/// (m1, z1)(m2, z2) = (m1 + m2, beta^m2(z1) z2).
TorusElement mt_multiply(const TorusElement &a, const TorusElement &b, const Braid &beta);
TorusElement mt_invert(const TorusElement &a, const Braid &beta);

struct SolidTorusPresentation {
  /// Generators x1..xn, t; relators t^-1 x_i t beta(x_i)^-1. The attached
  /// peripheral pair is the outer boundary: meridian x1...xn, longitude t.
  Presentation presentation;
  /// Meridian of the closed braid, x1.
  Word closure_meridian;
  /// t^n w for knot closures (empty otherwise), with w the meridian conjugator.
  Word closure_longitude;
};

SolidTorusPresentation solid_torus_presentation(const Braid &beta);

/// The w with beta^n(x1) = w x1 w^-1 that does not end in x1^{+-1}.
/// Throws NotAKnot for links and CoreMismatch if beta^n(x1) is not a
/// conjugate of x1.
Word meridian_conjugator(const Braid &beta);

struct CentralizerGenerators {
  TorusElement a; // (t^n, w)
  TorusElement b; // (t^0, x1)
};

CentralizerGenerators centralizer_generators(const Braid &beta);

/// Checks beta^{kn}(x1) == tail of t^{-kn} (t^n w)^k x1 (t^n w)^{-k} t^{kn}.
/// Runs on compressed words, so the exponential growth of beta^{kn}(x1) for
/// pseudo-Anosov braids is not an obstacle.
bool power_identity_check(const Braid &beta, int k);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// All (m, z) with |m| <= max_texp, |z| <= max_len commuting with x1.
/// Throws BudgetExceeded when the candidate count exceeds `budget`.
std::vector<TorusElement> centralizer_enumeration_oracle(const Braid &beta, int max_texp, int max_len,
                                                         std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of reduced words of length <= max_len in the free group of rank n.
std::uint64_t reduced_word_count(int rank, int max_len);

/// Membership in {(t^n w)^k x1^l}.
bool in_predicted_centralizer(const MappingTorus &mt, const TorusElement &a, const TorusElement &e);

} // namespace soleknot
