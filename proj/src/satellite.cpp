#include "soleknot/satellite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "soleknot/error.hpp"
#include "soleknot/knotgrp.hpp"
#include "soleknot/torusgrp.hpp"

namespace soleknot {

namespace {

Word shifted(const Word &w, int offset) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters())
    out.push_back({l.index + offset, l.sign});
  return Word::from_reduced(std::move(out));
}

std::string fresh(std::string name, const std::set<std::string> &taken) {
  while (taken.count(name))
    name += '_';
  return name;
}

} // namespace

Presentation satellite_presentation(const Presentation &companion, const Braid &beta, int stage) {
  validate(companion);
  if (!companion.peripheral)
    throw Error(Errc::MissingPeripheral, "companion has no peripheral pair");
  const int n = beta.strands();
  if (n < 2)
    throw Error(Errc::WindingTooSmall, "pattern needs at least 2 strands, got " + std::to_string(n));
  const ClosureInfo info = closure_info(beta);
  if (!info.is_knot)
    throw Error(Errc::NotAKnot, "closure has " + std::to_string(info.components) + " components");

  const int g = companion.rank();
  const int t = g + n + 1;
  Presentation p = companion;
  std::set<std::string> taken(p.gens.begin(), p.gens.end());
  const std::string suffix = "_" + std::to_string(stage);
  for (int i = 1; i <= n; ++i) {
    p.gens.push_back(fresh("x" + std::to_string(i) + suffix, taken));
    taken.insert(p.gens.back());
  }
  p.gens.push_back(fresh("t" + suffix, taken));

  const FreeEndo e = artin_endo(beta);
  const Word tw = Word::generator(t);
  for (int i = 1; i <= n; ++i) {
    const Word xi = Word::generator(g + i);
    p.relators.push_back(
        multiply(multiply(invert(tw), xi), multiply(tw, invert(shifted(e.image(i), g)))));
  }
  std::vector<Letter> product;
  for (int i = 1; i <= n; ++i)
    product.push_back({g + i, 1});
  p.relators.push_back(multiply(invert(companion.peripheral->meridian), reduce(product)));
  p.relators.push_back(multiply(invert(companion.peripheral->longitude), tw));

  const Word w = shifted(meridian_conjugator(beta), g);
  const Word x1 = Word::generator(g + 1);
  p.peripheral = PeripheralPair{
      x1, multiply(multiply(power(tw, n), w), power(x1, -exponent_sum(w)))};
  if (h1_class(p, p.peripheral->longitude) != 0)
    throw std::logic_error("satellite longitude is not nullhomologous");
  return p;
}

std::vector<FiltrationStage> build_filtration(const Presentation &seed,
                                              const std::vector<Braid> &patterns, int depth,
                                              bool repeat) {
  if (depth < 0)
    throw Error(Errc::InvalidArgument, "depth must be non-negative");
  const auto want = static_cast<std::size_t>(depth);
  if (want > 0 && (patterns.empty() || (!repeat && want > patterns.size())))
    throw Error(Errc::DepthExceedsPatterns, "depth " + std::to_string(depth) + " exceeds " +
                                                std::to_string(patterns.size()) + " patterns");
  if (!seed.peripheral)
    throw Error(Errc::MissingPeripheral, "seed has no peripheral pair");
  validate(seed);

  std::vector<FiltrationStage> stages;
  stages.push_back({0, std::nullopt, seed, {}});
  for (std::size_t k = 0; k < want; ++k) {
    const Braid &b = patterns[k % patterns.size()];
    FiltrationStage next;
    next.index = static_cast<int>(k) + 1;
    next.braid = b;
    next.presentation = satellite_presentation(stages.back().presentation, b, next.index);
    for (const std::string &name : stages.back().presentation.gens)
      next.inclusion.emplace_back(name, name);
    stages.push_back(std::move(next));
  }
  return stages;
}

std::int64_t h1_transition(const std::vector<FiltrationStage> &stages, std::size_t k) {
  if (k + 1 >= stages.size())
    throw Error(Errc::IndexError, "no transition " + std::to_string(k) + " in a filtration with " +
                                      std::to_string(stages.size()) + " stages");
  const Presentation &from = stages[k].presentation;
  const Presentation &to = stages[k + 1].presentation;
  // The inclusion is a renaming, so map the meridian letter by letter.
  std::vector<Letter> image;
  for (Letter l : from.peripheral->meridian.letters()) {
    const std::string &name = from.gens[static_cast<std::size_t>(l.index - 1)];
    const auto it = std::find_if(stages[k + 1].inclusion.begin(), stages[k + 1].inclusion.end(),
                                 [&](const auto &pr) { return pr.first == name; });
    image.push_back({to.index_of(it->second), l.sign});
  }
  return h1_class(to, reduce(image));
}

nlohmann::json filtration_to_json(const std::vector<FiltrationStage> &stages) {
  nlohmann::json out = nlohmann::json::array();
  for (const FiltrationStage &s : stages) {
    nlohmann::json inc = nlohmann::json::array();
    for (const auto &[a, b] : s.inclusion)
      inc.push_back({a, b});
    out.push_back({{"index", s.index},
                   {"braid", s.braid ? nlohmann::json(to_string(*s.braid)) : nlohmann::json()},
                   {"presentation", to_text(s.presentation)},
                   {"inclusion", inc}});
  }
  return out;
}

namespace {

constexpr std::int64_t kSmall = std::int64_t{1} << 20;

bool small(std::int64_t v) { return v > -kSmall && v < kSmall; }

std::int64_t binary_gcd(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  std::uint64_t y = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  if (x == 0)
    return static_cast<std::int64_t>(y);
  if (y == 0)
    return static_cast<std::int64_t>(x);
  const int shift = __builtin_ctzll(x | y);
  x >>= __builtin_ctzll(x);
  do {
    y >>= __builtin_ctzll(y);
    if (x > y)
      std::swap(x, y);
    y -= x;
  } while (y != 0);
  return static_cast<std::int64_t>(x << shift);
}

// Searches call this with p, q, t, d fixed over long runs of s, eps, delta, so
// the last two gcds are remembered per thread.
struct GcdMemo {
  std::int64_t a = 0, b = 0, g = 0;

  std::int64_t operator()(std::int64_t x, std::int64_t y) {
    if (x != a || y != b || g == 0) {
      a = x;
      b = y;
      g = binary_gcd(x, y);
    }
    return g;
  }
};

} // namespace

CableCheck cable_tight_criterion(std::int64_t s, std::int64_t t, std::int64_t p, std::int64_t q,
                                 std::int64_t d, std::int64_t eps, std::int64_t delta) {
  if (t == 0 || d == 0)
    throw Error(Errc::DomainError, "t and d must be nonzero");
  CableCheck out;
  if (small(s) && small(t) && small(p) && small(q) && small(d) && small(eps) && small(delta)) {
    thread_local GcdMemo pq_memo, td_memo;
    if (pq_memo(p, q) != 1)
      throw Error(Errc::DomainError, "p and q must be coprime");
    const std::int64_t z = td_memo(t, d);
    const std::int64_t w = binary_gcd(s, d * p * q + eps);
    out.z = z;
    out.w = w;
    if (d > 1 && (eps == 1 || eps == -1) && delta >= -1 && delta <= 1 && z > 1) {
      using I = __int128;
      out.satisfied = I(d) * (I(p) * q * t - s) == I(-eps) * t + I(delta) * z * w;
    }
    return out;
  }
  const BigInt S = s, T = t, P = p, Q = q, D = d, E = eps, Dl = delta;
  if (gcd(P, Q) != 1)
    throw Error(Errc::DomainError, "p and q must be coprime");
  out.z = gcd(T, D);
  out.w = gcd(S, D * P * Q + E);
  out.satisfied = d > 1 && (eps == 1 || eps == -1) && delta >= -1 && delta <= 1 && out.z > 1 &&
                  D * (P * Q * T - S) == -E * T + Dl * out.z * out.w;
  return out;
}

} // namespace soleknot
