#include "soleknot/freegroup.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>

#include "soleknot/error.hpp"

namespace soleknot {

namespace {

// Appends `l` to a reduced buffer, cancelling against its tail.
inline void push_reduced(std::vector<Letter> &out, Letter l) {
  if (!out.empty() && out.back().cancels(l))
    out.pop_back();
  else
    out.push_back(l);
}

[[maybe_unused]] bool is_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i - 1].cancels(letters[i]))
      return false;
  return true;
}

} // namespace

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l.index < 1 || (l.sign != 1 && l.sign != -1))
      throw Error(Errc::InvalidArgument, "letter must have index >= 1 and sign +-1");
    push_reduced(out, l);
  }
  return Word(std::move(out));
}

Word Word::generator(int index, int sign) {
  Letter l{index, sign};
  return reduce(std::span<const Letter>(&l, 1));
}

Word Word::from_reduced(std::vector<Letter> letters) {
  assert(is_reduced(letters));
  return Word(std::move(letters));
}

int Word::max_index() const noexcept {
  int m = 0;
  for (Letter l : letters_)
    m = std::max(m, l.index);
  return m;
}

Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }

Word multiply(const Word &a, const Word &b) {
  std::vector<Letter> out(a.letters().begin(), a.letters().end());
  out.reserve(a.size() + b.size());
  for (Letter l : b.letters())
    push_reduced(out, l);
  return Word::from_reduced(std::move(out));
}

Word invert(const Word &a) {
  std::vector<Letter> out;
  out.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word::from_reduced(std::move(out));
}

Word power(const Word &a, std::int64_t k) {
  Word base = k < 0 ? invert(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Word result;
  while (e > 0) {
    if (e & 1u)
      result = multiply(result, base);
    e >>= 1u;
    if (e > 0)
      base = multiply(base, base);
  }
  return result;
}

Word conjugate(const Word &w, const Word &g) {
  return multiply(multiply(g, w), invert(g));
}

CyclicDecomposition cyclic_decompose(const Word &w) {
  auto letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> prefix(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo));
  std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                           letters.begin() + static_cast<std::ptrdiff_t>(hi));
  return {Word::from_reduced(std::move(prefix)), Word::from_reduced(std::move(core))};
}

std::int64_t exponent_sum(const Word &w, std::optional<int> generator) {
  std::int64_t total = 0;
  for (Letter l : w.letters())
    if (!generator || l.index == *generator)
      total += l.sign;
  return total;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char c = text[i];
    if (c != 'x' && c != 'X')
      throw ParseError(start, "expected x<k> or X<k>");
    ++i;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == digits)
      throw ParseError(start, "missing generator index");
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(i, "unexpected character in word token");
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + i, index);
    if (ec != std::errc() || index < 1)
      throw ParseError(digits, "generator index must be a positive integer");
    raw.push_back({index, c == 'x' ? 1 : -1});
  }
  return reduce(raw);
}

std::string to_string(const Word &w) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += l.sign > 0 ? 'x' : 'X';
    out += std::to_string(l.index);
  }
  return out;
}

FreeEndo::FreeEndo(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 1)
    throw Error(Errc::InvalidArgument, "endomorphism rank must be positive");
  if (static_cast<int>(images_.size()) != rank)
    throw Error(Errc::RankMismatch, "expected one image per generator");
  for (const Word &img : images_)
    if (img.max_index() > rank)
      throw Error(Errc::IndexOutOfRank, "image uses generator x" +
                                            std::to_string(img.max_index()) +
                                            " above rank " + std::to_string(rank));
}

FreeEndo FreeEndo::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i)
    images.push_back(Word::generator(i));
  return FreeEndo(rank, std::move(images));
}

Word apply_endo(const FreeEndo &e, const Word &w) {
  if (w.max_index() > e.rank())
    throw Error(Errc::IndexOutOfRank, "word uses generator x" + std::to_string(w.max_index()) +
                                          " above rank " + std::to_string(e.rank()));
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    auto img = e.image(l.index).letters();
    if (l.sign > 0) {
      for (Letter m : img)
        push_reduced(out, m);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_reduced(out, it->inverse());
    }
  }
  return Word::from_reduced(std::move(out));
}

FreeEndo compose(const FreeEndo &e1, const FreeEndo &e2) {
  if (e1.rank() != e2.rank())
    throw Error(Errc::RankMismatch, "cannot compose endomorphisms of ranks " +
                                        std::to_string(e1.rank()) + " and " +
                                        std::to_string(e2.rank()));
  std::vector<Word> images;
  images.reserve(e1.images().size());
  for (const Word &img : e1.images())
    images.push_back(apply_endo(e2, img));
  return FreeEndo(e1.rank(), std::move(images));
}

FreeEndo endo_power(const FreeEndo &e, int k) {
  if (k < 0)
    throw Error(Errc::InvalidArgument, "endo_power needs a non-negative exponent");
  FreeEndo result = FreeEndo::identity(e.rank());
  for (int i = 0; i < k; ++i)
    result = compose(result, e);
  return result;
}

} // namespace soleknot
