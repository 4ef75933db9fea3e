#include "soleknot/torusgrp.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "soleknot/cword.hpp"
#include "soleknot/error.hpp"

namespace soleknot {

std::string to_string(const TorusElement &e) {
  std::string out = "t^" + std::to_string(e.texp) + " |";
  if (!e.tail.empty())
    out += " " + to_string(e.tail);
  return out;
}

TorusElement parse_torus_element(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (text.substr(i, 2) != "t^")
    throw ParseError(i, "expected 't^<m>'");
  i += 2;
  const std::size_t num = i;
  if (i < text.size() && (text[i] == '-' || text[i] == '+'))
    ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  TorusElement e;
  const char *first = text.data() + num + (num < text.size() && text[num] == '+' ? 1 : 0);
  auto [p, ec] = std::from_chars(first, text.data() + i, e.texp);
  if (ec != std::errc() || p != text.data() + i)
    throw ParseError(num, "invalid t exponent");
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i >= text.size() || text[i] != '|')
    throw ParseError(i, "expected '|' after t exponent");
  ++i;
  try {
    e.tail = parse_word(text.substr(i));
  } catch (const ParseError &err) {
    throw ParseError(i + err.position(), "in tail word");
  }
  return e;
}

MappingTorus::MappingTorus(Braid beta) : beta_(std::move(beta)) {}

const FreeEndo &MappingTorus::endo_power(std::int64_t k) const {
  std::lock_guard lock(mu_);
  if (auto it = powers_.find(k); it != powers_.end())
    return *it->second;
  if (powers_.empty()) {
    powers_.emplace(0, std::make_unique<FreeEndo>(FreeEndo::identity(rank())));
    powers_.emplace(1, std::make_unique<FreeEndo>(artin_endo(beta_)));
    powers_.emplace(-1, std::make_unique<FreeEndo>(artin_endo(inverse(beta_))));
  }
  const std::int64_t step = k > 0 ? 1 : -1;
  const FreeEndo &unit = *powers_.at(step);
  std::int64_t j = step;
  while (powers_.count(j + step) && j != k)
    j += step;
  while (j != k) {
    const FreeEndo &prev = *powers_.at(j);
    j += step;
    powers_.emplace(j, std::make_unique<FreeEndo>(compose(prev, unit)));
  }
  return *powers_.at(k);
}

Word MappingTorus::act(std::int64_t k, const Word &z) const {
  if (k == 0 || z.empty())
    return z;
  return apply_endo(endo_power(k), z);
}

void MappingTorus::check(const TorusElement &a) const {
  if (a.tail.max_index() > rank())
    throw Error(Errc::IndexOutOfRank, "tail uses generator x" + std::to_string(a.tail.max_index()) +
                                          " on a " + std::to_string(rank()) + "-strand braid");
}

TorusElement MappingTorus::multiply(const TorusElement &a, const TorusElement &b) const {
  check(a);
  check(b);
  return {a.texp + b.texp, soleknot::multiply(act(b.texp, a.tail), b.tail)};
}

TorusElement MappingTorus::invert(const TorusElement &a) const {
  check(a);
  return {-a.texp, act(-a.texp, soleknot::invert(a.tail))};
}

TorusElement MappingTorus::pow(const TorusElement &a, std::int64_t k) const {
  TorusElement base = k < 0 ? invert(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  TorusElement result;
  while (e > 0) {
    if (e & 1u)
      result = multiply(result, base);
    e >>= 1u;
    if (e > 0)
      base = multiply(base, base);
  }
  return result;
}

TorusElement mt_multiply(const TorusElement &a, const TorusElement &b, const Braid &beta) {
  return MappingTorus(beta).multiply(a, b);
}

TorusElement mt_invert(const TorusElement &a, const Braid &beta) {
  return MappingTorus(beta).invert(a);
}

namespace {

void require_knot(const Braid &beta) {
  const ClosureInfo info = closure_info(beta);
  if (!info.is_knot)
    throw Error(Errc::NotAKnot, "closure has " + std::to_string(info.components) + " components");
}

Word strip_trailing_x1(const Word &p) {
  std::size_t end = p.size();
  while (end > 0 && p[end - 1].index == 1)
    --end;
  return Word::from_reduced({p.letters().begin(), p.letters().begin() + static_cast<std::ptrdiff_t>(end)});
}

} // namespace

SolidTorusPresentation solid_torus_presentation(const Braid &beta) {
  const int n = beta.strands();
  const FreeEndo e = artin_endo(beta);
  SolidTorusPresentation out;
  Presentation &p = out.presentation;
  p.gens = indexed_names(n);
  p.gens.push_back("t");
  const Word t = Word::generator(n + 1);
  Word product;
  for (int i = 1; i <= n; ++i) {
    const Word x = Word::generator(i);
    p.relators.push_back(multiply(multiply(invert(t), multiply(x, t)), invert(e.image(i))));
    product = multiply(product, x);
  }
  p.peripheral = PeripheralPair{product, t};
  out.closure_meridian = Word::generator(1);
  if (closure_info(beta).is_knot)
    out.closure_longitude = multiply(power(t, n), meridian_conjugator(beta));
  return out;
}

Word meridian_conjugator(const Braid &beta) {
  require_knot(beta);
  const MappingTorus mt(beta);
  const Word image = mt.act(beta.strands(), Word::generator(1));
  const CyclicDecomposition cd = cyclic_decompose(image);
  if (cd.core != Word::generator(1))
    throw Error(Errc::CoreMismatch, "beta^n(x1) is not a conjugate of x1: core " + to_string(cd.core));
  return strip_trailing_x1(cd.prefix);
}

CentralizerGenerators centralizer_generators(const Braid &beta) {
  return {{beta.strands(), meridian_conjugator(beta)}, {0, Word::generator(1)}};
}

bool power_identity_check(const Braid &beta, int k) {
  require_knot(beta);
  namespace cw = compressed;
  const std::int64_t n = beta.strands();
  cw::Pool pool;
  cw::Endo fwd(pool, artin_endo(beta));
  cw::Endo bwd(pool, artin_endo(inverse(beta)));
  auto act = [&](std::int64_t m, cw::Id z) {
    for (std::int64_t i = 0; i < (m < 0 ? -m : m); ++i)
      z = (m > 0 ? fwd : bwd).apply(z);
    return z;
  };
  struct Elem {
    std::int64_t m;
    cw::Id z;
  };
  auto mul = [&](const Elem &a, const Elem &b) -> Elem {
    return {a.m + b.m, pool.multiply(act(b.m, a.z), b.z)};
  };
  auto inv = [&](const Elem &a) -> Elem { return {-a.m, act(-a.m, pool.invert(a.z))}; };

  const cw::Id x1 = pool.leaf(1);
  const auto cd = pool.cyclic_decompose(act(n, x1));
  if (cd.core != x1)
    throw Error(Errc::CoreMismatch, "beta^n(x1) is not a conjugate of x1");
  cw::Id w = cd.prefix;
  if (w != cw::kEmpty) {
    const int last = pool.last_letter(w);
    if (last == 1 || last == -1) {
      const auto len = pool.length(w);
      const cw::Length run = pool.lcp(pool.invert(w), pool.raw_power(pool.leaf(-last), static_cast<std::uint64_t>(len)));
      w = pool.prefix(w, len - run);
    }
  }

  const Elem a{n, w};
  Elem ak{0, cw::kEmpty};
  const Elem step = k >= 0 ? a : inv(a);
  for (int i = 0; i < (k < 0 ? -k : k); ++i)
    ak = mul(ak, step);
  const std::int64_t kn = static_cast<std::int64_t>(k) * n;
  const Elem rhs = mul(mul(mul(mul(Elem{-kn, cw::kEmpty}, ak), Elem{0, x1}), inv(ak)), Elem{kn, cw::kEmpty});
  return rhs.m == 0 && rhs.z == act(kn, x1);
}

std::uint64_t reduced_word_count(int rank, int max_len) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1, layer = 2 * static_cast<std::uint64_t>(rank);
  for (int l = 1; l <= max_len; ++l) {
    if (total > cap - layer)
      return cap;
    total += layer;
    const std::uint64_t branch = 2 * static_cast<std::uint64_t>(rank) - 1;
    layer = branch != 0 && layer > cap / branch ? cap : layer * branch;
  }
  return total;
}

std::vector<TorusElement> centralizer_enumeration_oracle(const Braid &beta, int max_texp, int max_len,
                                                         std::uint64_t budget) {
  require_knot(beta);
  if (max_texp < 0 || max_len < 0)
    throw Error(Errc::InvalidArgument, "enumeration bounds must be non-negative");
  const int n = beta.strands();
  const std::uint64_t words = reduced_word_count(n, max_len);
  const std::uint64_t slices = 2 * static_cast<std::uint64_t>(max_texp) + 1;
  if (words > budget / slices)
    throw Error(Errc::BudgetExceeded, "enumeration needs " + std::to_string(words) + " words x " +
                                          std::to_string(slices) + " t-exponents, budget is " +
                                          std::to_string(budget));

  const MappingTorus mt(beta);
  const Word x1 = Word::generator(1);
  std::vector<TorusElement> found;
  std::vector<Letter> buf;
  for (int m = -max_texp; m <= max_texp; ++m) {
    const Word img = mt.act(m, x1);
    // z x1 = img z forces |img| <= 2|z| + 1.
    if (img.size() > 2 * static_cast<std::size_t>(max_len) + 1)
      continue;
    auto visit = [&](auto &&self) -> void {
      if (img.size() <= 2 * buf.size() + 1) {
        const Word z = Word::from_reduced(buf);
        if (multiply(z, x1) == multiply(img, z))
          found.push_back({m, z});
      }
      if (static_cast<int>(buf.size()) == max_len)
        return;
      for (int g = 1; g <= n; ++g) {
        for (int s : {1, -1}) {
          const Letter l{g, s};
          if (!buf.empty() && buf.back().cancels(l))
            continue;
          buf.push_back(l);
          self(self);
          buf.pop_back();
        }
      }
    };
    visit(visit);
  }
  return found;
}

bool in_predicted_centralizer(const MappingTorus &mt, const TorusElement &a, const TorusElement &e) {
  auto pure_x1_power = [](const Word &w) {
    for (Letter l : w.letters())
      if (l.index != 1)
        return false;
    return true;
  };
  if (a.texp == 0)
    return e.texp == 0 && pure_x1_power(e.tail);
  if (e.texp % a.texp != 0)
    return false;
  const TorusElement rest = mt.multiply(mt.pow(a, -(e.texp / a.texp)), e);
  return rest.texp == 0 && pure_x1_power(rest.tail);
}

} // namespace soleknot
