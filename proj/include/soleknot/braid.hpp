#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "soleknot/freegroup.hpp"

namespace soleknot {

/// sigma_gen^sign, 1 <= gen <= strands - 1.
struct BraidLetter {
  int gen = 1;
  int sign = 1;

  friend constexpr bool operator==(BraidLetter, BraidLetter) = default;
};

class Braid {
public:
  Braid() = default;
  /// Throws StrandsOutOfRange if a generator index is not below `strands`.
  Braid(int strands, std::vector<BraidLetter> word);

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter> &word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  friend bool operator==(const Braid &, const Braid &) = default;

private:
  int strands_ = 1;
  std::vector<BraidLetter> word_;
};

/// `<n>: s1 S2 ...`; S<i> is the inverse generator.
Braid parse_braid(std::string_view text);
std::string to_string(const Braid &b);

/// Reversed word with flipped signs.
Braid inverse(const Braid &b);
Braid concat(const Braid &a, const Braid &b);
Braid braid_power(const Braid &b, int k);
/// Signed length of the braid word.
std::int64_t exponent_sum(const Braid &b);

/// Action of a single generator on the free group of rank `strands`:
/// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, others fixed.
FreeEndo generator_endo(int strands, BraidLetter letter);

/// Composition of the generator actions in word order, using the "then"
/// order of compose().
FreeEndo artin_endo(const Braid &b);

/// Bijection of {1..n}, stored 1-based: perm(i) is the image of i.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int> &images() const noexcept { return images_; }

  /// Cycle decomposition including fixed points, each cycle starting at its
  /// smallest element.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

/// "p then q": result(i) = q(p(i)), matching compose() on endomorphisms.
Permutation then(const Permutation &p, const Permutation &q);
std::string to_string(const Permutation &p);

Permutation induced_permutation(const Braid &b);

/// Reads the permutation off an endomorphism whose images are conjugates of
/// single generators (the core of each image). Throws CoreMismatch otherwise.
Permutation permutation_from_cores(const FreeEndo &e);

struct ClosureInfo {
  int components = 0;
  int winding = 0;
  std::int64_t exponent_sum = 0;
  bool is_knot = false;

  friend bool operator==(const ClosureInfo &, const ClosureInfo &) = default;
};

ClosureInfo closure_info(const Braid &b);

} // namespace soleknot
