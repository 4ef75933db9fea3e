#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "soleknot/freegroup.hpp"

namespace soleknot {

struct PeripheralPair {
  Word meridian;
  Word longitude;

  friend bool operator==(const PeripheralPair &, const PeripheralPair &) = default;
};

/// Finitely presented group with named generators. Relator letters index the
/// generator list (1-based). Names start with a lowercase letter followed by
/// lowercase letters, digits or '_'; the inverse token capitalises the first
/// character.
struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
  std::optional<PeripheralPair> peripheral;

  int rank() const noexcept { return static_cast<int>(gens.size()); }
  /// 1-based index of a generator name, or 0.
  int index_of(std::string_view name) const;

  friend bool operator==(const Presentation &, const Presentation &) = default;
};

bool valid_generator_name(std::string_view name);
/// Throws InvalidArgument on bad or duplicate names, IndexOutOfRank on
/// relator or peripheral letters outside the generator list.
void validate(const Presentation &p);

std::string format_word(const Word &w, const std::vector<std::string> &gens);
Word parse_named_word(std::string_view text, const std::vector<std::string> &gens);

/// Line format:
///   gens: a b
///   rel: a b A B
///   meridian: a
///   longitude: b a A A
std::string to_text(const Presentation &p);
Presentation parse_presentation(std::string_view text);

nlohmann::json to_json(const Presentation &p);
Presentation presentation_from_json(const nlohmann::json &j);

/// Generator names x1..xn.
std::vector<std::string> indexed_names(int n, std::string_view stem = "x");

} // namespace soleknot
