#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace soleknot {

/// A generator x_k (sign +1) or its inverse (sign -1). Indices are 1-based.
struct Letter {
  int index = 1;
  int sign = 1;

  constexpr Letter inverse() const noexcept { return {index, -sign}; }
  constexpr bool cancels(Letter other) const noexcept {
    return index == other.index && sign == -other.sign;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Freely reduced element of a free group. The only way to build one is
/// through reduction, so every Word value satisfies the reduced invariant.
class Word {
public:
  Word() = default;

  static Word reduce(std::span<const Letter> raw);
  static Word generator(int index, int sign = 1);
  /// Adopts letters already known to be reduced; checked in debug builds.
  static Word from_reduced(std::vector<Letter> letters);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Largest generator index used; 0 for the identity.
  int max_index() const noexcept;

  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &, const Word &) = default;

private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> raw);
Word multiply(const Word &a, const Word &b);
Word invert(const Word &a);
Word power(const Word &a, std::int64_t k);
/// g w g^-1.
Word conjugate(const Word &w, const Word &g);

struct CyclicDecomposition {
  Word prefix;
  Word core;
};

/// w = prefix * core * prefix^-1 with core cyclically reduced.
CyclicDecomposition cyclic_decompose(const Word &w);

/// Signed count of `generator` in w, or the total signed length when no
/// generator is given.
std::int64_t exponent_sum(const Word &w, std::optional<int> generator = {});

/// Parses `x1 x2 X1` (X = inverse). Empty text is the identity.
Word parse_word(std::string_view text);
std::string to_string(const Word &w);

/// Endomorphism of the free group of rank n, stored as generator images.
class FreeEndo {
public:
  FreeEndo() = default;
  /// Throws IndexOutOfRank if an image uses a generator above `rank`.
  FreeEndo(int rank, std::vector<Word> images);

  static FreeEndo identity(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Word> &images() const noexcept { return images_; }
  const Word &image(int index) const { return images_.at(index - 1); }

  friend bool operator==(const FreeEndo &, const FreeEndo &) = default;

private:
  int rank_ = 0;
  std::vector<Word> images_;
};

/// Substitutes generator images into w and reduces.
Word apply_endo(const FreeEndo &e, const Word &w);

/// "e1 then e2": apply_endo(compose(e1, e2), w) == apply_endo(e2,
/// apply_endo(e1, w)). With this order the k-th power of a braid endomorphism
/// is the endomorphism of the k-th power of the braid word.
FreeEndo compose(const FreeEndo &e1, const FreeEndo &e2);

/// k-fold composition for k >= 0.
FreeEndo endo_power(const FreeEndo &e, int k);

} // namespace soleknot
