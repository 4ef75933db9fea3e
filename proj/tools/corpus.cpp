#include "corpus.hpp"

#include <random>

namespace soleknot::corpus {

namespace {

void extend(int strands, int max_len, std::vector<BraidLetter> &word, std::vector<Braid> &out) {
  if (!word.empty()) {
    Braid b(strands, word);
    if (closure_info(b).is_knot)
      out.push_back(std::move(b));
  }
  if (static_cast<int>(word.size()) == max_len)
    return;
  for (int g = 1; g < strands; ++g)
    for (int sign : {1, -1}) {
      if (!word.empty() && word.back().gen == g && word.back().sign == -sign)
        continue;
      word.push_back({g, sign});
      extend(strands, max_len, word, out);
      word.pop_back();
    }
}

} // namespace

std::vector<Braid> exhaustive_knot_braids(int max_strands, int max_len) {
  std::vector<Braid> out;
  for (int n = 2; n <= max_strands; ++n) {
    std::vector<BraidLetter> word;
    extend(n, max_len, word, out);
  }
  return out;
}

std::vector<Braid> random_knot_braids(std::uint64_t seed, int count, int min_strands, int max_strands,
                                      int max_len) {
  std::mt19937_64 rng(seed);
  std::vector<Braid> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(min_strands, max_strands)(rng);
    const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
    std::vector<BraidLetter> w;
    for (int i = 0; i < len; ++i)
      w.push_back({std::uniform_int_distribution<int>(1, n - 1)(rng), rng() % 2 ? 1 : -1});
    Braid b(n, std::move(w));
    if (closure_info(b).is_knot)
      out.push_back(std::move(b));
  }
  return out;
}

std::vector<Braid> default_corpus(std::uint64_t seed) {
  std::vector<Braid> out = exhaustive_knot_braids(3, 5);
  for (Braid &b : random_knot_braids(seed, 100, 2, 4, 8))
    out.push_back(std::move(b));
  return out;
}

} // namespace soleknot::corpus
