#pragma once

// Exact compressed representation of reduced free-group words.
//
// A word is stored as the root of a canonical parse tree built by alternating
// stages: even stages merge maximal runs a^k into a Run node, odd stages cut
// the sequence into blocks that start wherever a symbol's priority drops below
// its left neighbour's. The parse of a string depends only on the string, and
// every interned node is the canonical root of its own expansion, so two words
// are equal exactly when their root ids are equal. Priorities are hashed from
// structural fingerprints; they influence only tree shape, never equality.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "soleknot/freegroup.hpp"

namespace soleknot::compressed {

using Id = std::uint32_t;
using Length = unsigned __int128;

inline constexpr Id kEmpty = 0xFFFFFFFFu;

class Pool {
public:
  enum class Kind : std::uint8_t { Leaf, Run, Block };

  struct Node {
    Kind kind = Kind::Leaf;
    std::int32_t stage = -1; // creation stage; -1 for leaves
    std::int32_t letter = 0; // signed generator index for leaves
    std::uint64_t count = 0; // run exponent
    std::uint32_t kid_begin = 0;
    std::uint32_t kid_count = 0;
    Length length = 0;
    std::uint64_t fp = 0;

    int level() const noexcept { return stage + 1; }
  };

  Pool() = default;
  Pool(const Pool &) = delete;
  Pool &operator=(const Pool &) = delete;

  /// Signed generator: +i for x_i, -i for its inverse.
  Id leaf(int signed_letter);
  /// Parses an explicit word from scratch. Used as the reference encoding.
  Id from_word(const Word &w);
  /// Expands to an explicit word; throws BudgetExceeded past `cap` letters.
  Word to_word(Id id, std::size_t cap = 50'000'000) const;

  Length length(Id id) const { return id == kEmpty ? 0 : nodes_[id].length; }
  const Node &node(Id id) const { return nodes_[id]; }
  Id kid(Id id, std::uint32_t i) const { return kids_[nodes_[id].kid_begin + i]; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Plain concatenation. The caller guarantees no cancellation at the seam
  /// when the result is meant to be a reduced word.
  Id concat(Id a, Id b);
  /// Free-group product with full cancellation.
  Id multiply(Id a, Id b);
  Id invert(Id a);
  Id prefix(Id a, Length n);
  Id drop(Id a, Length n);
  Id slice(Id a, Length from, Length n);
  /// Length of the longest common prefix.
  Length lcp(Id a, Id b);
  /// a^k as plain concatenation.
  Id raw_power(Id a, std::uint64_t k);
  /// a^k in the free group for a reduced word a.
  Id power(Id a, std::int64_t k);

  struct Cyclic {
    Id prefix = kEmpty;
    Id core = kEmpty;
  };
  /// a = prefix core prefix^-1 with core cyclically reduced.
  Cyclic cyclic_decompose(Id a);

  /// Generator index and sign of the first or last letter.
  int first_letter(Id a) const;
  int last_letter(Id a) const;

private:
  struct Item {
    Id sym;
    std::uint64_t count;
    std::int32_t tag; // creation stage of the node this item was expanded from
    std::uint64_t inst;
  };

  Id intern(Node n, const Id *kids);
  Id make_run(Id a, std::uint64_t k, int stage);
  Id make_block(const std::vector<Id> &kids, int stage);
  std::uint64_t priority(Id sym, int stage) const;

  std::vector<Item> parse_stage(std::vector<Item> &items, int stage);
  Id rebuild(std::vector<Item> left, std::vector<Item> mid, std::vector<Item> right_rev);
  void split_left(Id a, Length n, std::vector<Item> &left);
  void split_right(Id a, Length n, std::vector<Item> &right_rev);

  std::vector<Node> nodes_;
  std::vector<Id> kids_;
  std::unordered_multimap<std::uint64_t, Id> table_;
  std::unordered_map<Id, Id> inverse_;
  std::uint64_t next_inst_ = 0;
};

/// Free-group endomorphism acting on compressed words, with a per-node memo.
class Endo {
public:
  Endo(Pool &pool, const FreeEndo &e);

  Id apply(Id w);
  int rank() const noexcept { return rank_; }

private:
  Pool &pool_;
  int rank_;
  std::vector<Id> images_;
  std::vector<Id> inverse_images_;
  std::unordered_map<Id, Id> memo_;
};

} // namespace soleknot::compressed
