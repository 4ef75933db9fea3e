#include "soleknot/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "soleknot/error.hpp"

namespace soleknot {

Braid::Braid(int strands, std::vector<BraidLetter> word)
    : strands_(strands), word_(std::move(word)) {
  if (strands < 1)
    throw Error(Errc::StrandsOutOfRange, "a braid needs at least one strand");
  for (BraidLetter l : word_) {
    if (l.sign != 1 && l.sign != -1)
      throw Error(Errc::InvalidArgument, "braid letter sign must be +-1");
    if (l.gen < 1 || l.gen >= strands)
      throw Error(Errc::StrandsOutOfRange,
                  "generator s" + std::to_string(l.gen) + " needs at least " +
                      std::to_string(l.gen + 1) + " strands, braid has " +
                      std::to_string(strands));
  }
}

namespace {

std::size_t skip_space(std::string_view text, std::size_t i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  return i;
}

} // namespace

Braid parse_braid(std::string_view text) {
  std::size_t i = skip_space(text, 0);
  const std::size_t nstart = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == nstart)
    throw ParseError(nstart, "braid must start with the strand count");
  int strands = 0;
  auto [p, ec] = std::from_chars(text.data() + nstart, text.data() + i, strands);
  if (ec != std::errc() || strands < 1)
    throw ParseError(nstart, "strand count must be a positive integer");
  if (i >= text.size() || text[i] != ':')
    throw ParseError(i, "expected ':' after strand count");
  ++i;

  std::vector<BraidLetter> word;
  while (true) {
    i = skip_space(text, i);
    if (i >= text.size())
      break;
    const std::size_t start = i;
    const char c = text[i];
    if (c != 's' && c != 'S')
      throw ParseError(start, "expected s<i> or S<i>");
    ++i;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == digits)
      throw ParseError(start, "missing generator index");
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(i, "unexpected character in braid token");
    int gen = 0;
    auto [q, ec2] = std::from_chars(text.data() + digits, text.data() + i, gen);
    if (ec2 != std::errc() || gen < 1)
      throw ParseError(digits, "generator index must be a positive integer");
    word.push_back({gen, c == 's' ? 1 : -1});
  }
  return Braid(strands, std::move(word));
}

std::string to_string(const Braid &b) {
  std::string out = std::to_string(b.strands()) + ":";
  for (BraidLetter l : b.word()) {
    out += ' ';
    out += l.sign > 0 ? 's' : 'S';
    out += std::to_string(l.gen);
  }
  return out;
}

Braid inverse(const Braid &b) {
  std::vector<BraidLetter> word(b.word().rbegin(), b.word().rend());
  for (auto &l : word)
    l.sign = -l.sign;
  return Braid(b.strands(), std::move(word));
}

Braid concat(const Braid &a, const Braid &b) {
  if (a.strands() != b.strands())
    throw Error(Errc::RankMismatch, "cannot concatenate braids on different strand counts");
  std::vector<BraidLetter> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return Braid(a.strands(), std::move(word));
}

Braid braid_power(const Braid &b, int k) {
  const Braid base = k < 0 ? inverse(b) : b;
  std::vector<BraidLetter> word;
  for (int i = 0; i < std::abs(k); ++i)
    word.insert(word.end(), base.word().begin(), base.word().end());
  return Braid(b.strands(), std::move(word));
}

std::int64_t exponent_sum(const Braid &b) {
  std::int64_t s = 0;
  for (BraidLetter l : b.word())
    s += l.sign;
  return s;
}

FreeEndo generator_endo(int strands, BraidLetter letter) {
  const int i = letter.gen;
  if (i < 1 || i >= strands)
    throw Error(Errc::StrandsOutOfRange, "generator index out of range");
  std::vector<Word> images;
  for (int k = 1; k <= strands; ++k)
    images.push_back(Word::generator(k));
  const Word xi = Word::generator(i), xj = Word::generator(i + 1);
  if (letter.sign > 0) {
    images[i - 1] = conjugate(xj, xi);
    images[i] = xi;
  } else {
    images[i - 1] = xj;
    images[i] = conjugate(xi, invert(xj));
  }
  return FreeEndo(strands, std::move(images));
}

FreeEndo artin_endo(const Braid &b) {
  // Letters act left to right: the image of sigma_a sigma_b is sigma_a then sigma_b.
  FreeEndo result = FreeEndo::identity(b.strands());
  for (BraidLetter l : b.word())
    result = compose(result, generator_endo(b.strands(), l));
  return result;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw Error(Errc::InvalidArgument, "permutation images must be a bijection of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
  std::vector<int> images = identity(n).images();
  std::swap(images.at(static_cast<std::size_t>(i - 1)), images.at(static_cast<std::size_t>(j - 1)));
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)])
      continue;
    std::vector<int> cycle;
    for (int v = start; !seen[static_cast<std::size_t>(v - 1)]; v = (*this)(v)) {
      seen[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation then(const Permutation &p, const Permutation &q) {
  if (p.size() != q.size())
    throw Error(Errc::RankMismatch, "permutations act on different sets");
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i)
    images[static_cast<std::size_t>(i - 1)] = q(p(i));
  return Permutation(std::move(images));
}

std::string to_string(const Permutation &p) {
  std::string out;
  for (const auto &cycle : p.cycles()) {
    if (cycle.size() == 1)
      continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation induced_permutation(const Braid &b) {
  Permutation result = Permutation::identity(b.strands());
  for (BraidLetter l : b.word())
    result = then(result, Permutation::transposition(b.strands(), l.gen, l.gen + 1));
  return result;
}

Permutation permutation_from_cores(const FreeEndo &e) {
  std::vector<int> images;
  for (const Word &img : e.images()) {
    const Word core = cyclic_decompose(img).core;
    if (core.size() != 1 || core.front().sign != 1)
      throw Error(Errc::CoreMismatch,
                  "image core is not a single positive generator: " + to_string(img));
    images.push_back(core.front().index);
  }
  return Permutation(std::move(images));
}

ClosureInfo closure_info(const Braid &b) {
  const auto cycles = induced_permutation(b).cycles();
  ClosureInfo info;
  info.components = static_cast<int>(cycles.size());
  info.winding = b.strands();
  info.exponent_sum = exponent_sum(b);
  info.is_knot = info.components == 1;
  return info;
}

} // namespace soleknot
