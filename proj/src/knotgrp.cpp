#include "soleknot/knotgrp.hpp"

#include <algorithm>
#include <set>

#include "soleknot/error.hpp"
#include "soleknot/torusgrp.hpp"

namespace soleknot {

Presentation sphere_closure_presentation(const Braid &beta) {
  const ClosureInfo info = closure_info(beta);
  if (!info.is_knot)
    throw Error(Errc::NotAKnot, "closure has " + std::to_string(info.components) + " components");
  const int n = beta.strands();
  const FreeEndo e = artin_endo(beta);
  Presentation p;
  p.gens = indexed_names(n);
  for (int i = 2; i <= n; ++i)
    p.relators.push_back(multiply(Word::generator(i, -1), e.image(i)));
  const Word w = meridian_conjugator(beta);
  const Word x1 = Word::generator(1);
  p.peripheral = PeripheralPair{x1, multiply(w, power(x1, -exponent_sum(w)))};
  return p;
}

IntMatrix exponent_matrix(const Presentation &p) {
  validate(p);
  IntMatrix m(p.relators.size(), p.gens.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (Letter l : p.relators[r].letters())
      m(r, static_cast<std::size_t>(l.index - 1)) += l.sign;
  return m;
}

Abelianization abelianize(const Presentation &p) {
  const IntMatrix a = exponent_matrix(p);
  const SmithForm s = smith_normal_form(a);
  Abelianization out;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1)
      out.invariant_factors.push_back(s.D(i, i));
  out.free_rank = p.rank() - static_cast<int>(s.rank);
  return out;
}

std::string to_string(const Abelianization &a) {
  std::string out;
  if (a.free_rank == 1)
    out = "Z";
  else if (a.free_rank > 1)
    out = "Z^" + std::to_string(a.free_rank);
  for (const auto &f : a.invariant_factors)
    out += (out.empty() ? "Z/" : " + Z/") + f.str();
  return out.empty() ? "0" : out;
}

namespace {

// Homomorphism Z^gens -> H1 = Z as integer weights on generators.
std::vector<BigInt> h1_weights(const Presentation &p, bool use_meridian) {
  const IntMatrix a = exponent_matrix(p);
  const SmithForm s = smith_normal_form(a);
  const auto g = static_cast<std::size_t>(p.rank());
  bool units = true;
  for (std::size_t i = 0; i < s.rank; ++i)
    units = units && s.D(i, i) == 1;
  if (s.rank + 1 != g || !units)
    throw Error(Errc::NotInfiniteCyclic, "first homology is not infinite cyclic");
  std::vector<BigInt> phi(g);
  for (std::size_t j = 0; j < g; ++j)
    phi[j] = s.V(j, s.rank);
  if (!use_meridian)
    return phi;
  if (!p.peripheral)
    throw Error(Errc::MissingPeripheral, "presentation has no meridian");
  BigInt m = 0;
  for (Letter l : p.peripheral->meridian.letters())
    m += l.sign * phi[static_cast<std::size_t>(l.index - 1)];
  if (m != 1 && m != -1)
    throw Error(Errc::MeridianNotGenerator, "meridian has class " + m.str() + " in H1");
  if (m == -1)
    for (auto &v : phi)
      v = -v;
  return phi;
}

BigInt evaluate(const std::vector<BigInt> &phi, const Word &w) {
  BigInt s = 0;
  for (Letter l : w.letters())
    s += l.sign * phi[static_cast<std::size_t>(l.index - 1)];
  return s;
}

std::int64_t to_i64(const BigInt &v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(Errc::BudgetExceeded, "homology class out of range");
  return static_cast<std::int64_t>(v);
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free elimination; pivots on the sparsest nonzero entry.
LaurentPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0)
    return LaurentPoly(1);
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = n;
    for (std::size_t r = i; r < n; ++r)
      if (!m[r][i].is_zero() && (p == n || m[r][i].coeffs().size() < m[p][i].coeffs().size()))
        p = r;
    if (p == n)
      return {};
    if (p != i) {
      std::swap(m[i], m[p]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      for (std::size_t c = i + 1; c < n; ++c) {
        LaurentPoly v = m[r][c] * m[i][i];
        if (!m[r][i].is_zero() && !m[i][c].is_zero())
          v = v - m[r][i] * m[i][c];
        m[r][c] = LaurentPoly::divide_exact(v, prev);
      }
      m[r][i] = {};
    }
    prev = m[i][i];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

PolyMatrix minor_matrix(const PolyMatrix &a, std::size_t skip_row, std::size_t skip_col) {
  PolyMatrix out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == skip_row)
      continue;
    std::vector<LaurentPoly> row;
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (c != skip_col)
        row.push_back(a[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

std::int64_t h1_class(const Presentation &p, const Word &w) {
  if (w.max_index() > p.rank())
    throw Error(Errc::IndexOutOfRank, "word uses a generator outside the presentation");
  return to_i64(evaluate(h1_weights(p, true), w));
}

std::vector<std::vector<LaurentPoly>> fox_matrix(const Presentation &p) {
  std::vector<BigInt> phi;
  try {
    phi = h1_weights(p, p.peripheral.has_value());
  } catch (const Error &e) {
    throw Error(Errc::NotKnotLike, e.what());
  }
  PolyMatrix m(p.relators.size(), std::vector<LaurentPoly>(p.gens.size()));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::int64_t e = 0;
    for (Letter l : p.relators[r].letters()) {
      const auto j = static_cast<std::size_t>(l.index - 1);
      const std::int64_t pj = to_i64(phi[j]);
      if (l.sign > 0) {
        m[r][j] += LaurentPoly::monomial(1, e);
        e += pj;
      } else {
        e -= pj;
        m[r][j] += LaurentPoly::monomial(-1, e);
      }
    }
  }
  return m;
}

namespace {

bool is_unit(const LaurentPoly &v) {
  return v.coeffs().size() == 1 && (v.coeffs()[0] == 1 || v.coeffs()[0] == -1);
}

// Pivots on unit entries. Each pivot removes one row and one column and
// preserves the ideal of (columns - 1)-minors.
void eliminate_units(PolyMatrix &m, std::size_t &cols) {
  while (true) {
    std::size_t best_r = m.size(), best_c = 0, best_cost = 0;
    std::vector<std::size_t> col_count(cols, 0);
    for (const auto &row : m)
      for (std::size_t c = 0; c < cols; ++c)
        col_count[c] += !row[c].is_zero();
    for (std::size_t r = 0; r < m.size(); ++r) {
      std::size_t row_count = 0;
      for (std::size_t c = 0; c < cols; ++c)
        row_count += !m[r][c].is_zero();
      for (std::size_t c = 0; c < cols; ++c) {
        if (!is_unit(m[r][c]))
          continue;
        const std::size_t cost = (row_count - 1) * (col_count[c] - 1);
        if (best_r == m.size() || cost < best_cost) {
          best_r = r;
          best_c = c;
          best_cost = cost;
        }
      }
    }
    if (best_r == m.size())
      return;
    const LaurentPoly inv =
        LaurentPoly::monomial(m[best_r][best_c].coeffs()[0], -m[best_r][best_c].low_exp());
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == best_r || m[r][best_c].is_zero())
        continue;
      const LaurentPoly f = m[r][best_c] * inv;
      for (std::size_t c = 0; c < cols; ++c)
        if (!m[best_r][c].is_zero())
          m[r][c] = m[r][c] - f * m[best_r][c];
    }
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(best_r));
    for (auto &row : m)
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(best_c));
    --cols;
  }
}

// Drops zero rows and rows equal to an earlier row up to a unit.
void drop_redundant_rows(PolyMatrix &m) {
  PolyMatrix kept;
  for (auto &row : m) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero())
      ++lead;
    if (lead == row.size())
      continue;
    bool dup = false;
    for (const auto &k : kept) {
      if (k[lead].is_zero() || k[lead].coeffs().size() != row[lead].coeffs().size())
        continue;
      const LaurentPoly shift = LaurentPoly::monomial(1, row[lead].low_exp() - k[lead].low_exp());
      for (const LaurentPoly &sign : {LaurentPoly(1), LaurentPoly(-1)}) {
        bool same = true;
        for (std::size_t c = 0; c < row.size() && same; ++c)
          same = row[c] == sign * shift * k[c];
        dup = dup || same;
      }
      if (dup)
        break;
    }
    if (!dup)
      kept.push_back(std::move(row));
  }
  m = std::move(kept);
}

LaurentPoly gcd_of_minors(const PolyMatrix &f, std::size_t cols) {
  const std::size_t rows = f.size(), k = cols - 1;
  const std::size_t none = static_cast<std::size_t>(-1);
  if (k == 0)
    return LaurentPoly(1);
  if (rows < k)
    return {};
  if (rows == k) {
    LaurentPoly acc;
    for (std::size_t j = 0; j < cols; ++j)
      acc = poly_gcd(acc, determinant(minor_matrix(f, none, j)));
    return acc;
  }
  if (rows == cols) {
    // The adjugate of a rank cols-1 matrix has rank one, so with a nonzero
    // minor M_ab every minor is M_ib M_aj / M_ab and the gcd of all of them
    // is gcd_i(M_ib) gcd_j(M_aj) / M_ab.
    for (std::size_t a = rows; a-- > 0;) {
      for (std::size_t b = 0; b < cols; ++b) {
        const LaurentPoly mab = determinant(minor_matrix(f, a, b));
        if (mab.is_zero())
          continue;
        LaurentPoly col, row;
        for (std::size_t i = 0; i < rows; ++i)
          col = poly_gcd(col, i == a ? mab : determinant(minor_matrix(f, i, b)));
        for (std::size_t j = 0; j < cols; ++j)
          row = poly_gcd(row, j == b ? mab : determinant(minor_matrix(f, a, j)));
        return LaurentPoly::divide_exact(col * row, mab.normalized());
      }
    }
    return {};
  }
  // Every choice of k rows, then every dropped column.
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  LaurentPoly acc;
  do {
    PolyMatrix sub;
    for (std::size_t r = 0; r < rows; ++r)
      if (pick[r])
        sub.push_back(f[r]);
    for (std::size_t j = 0; j < cols; ++j) {
      acc = poly_gcd(acc, determinant(minor_matrix(sub, none, j)));
      if (acc == LaurentPoly(1))
        return acc;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return acc;
}

} // namespace

LaurentPoly alexander_polynomial(const Presentation &p) {
  const std::size_t g = p.gens.size(), r = p.relators.size();
  if (g == 0 || r + 1 < g)
    throw Error(Errc::NotKnotLike, "need at least one relator fewer than generators, got " +
                                       std::to_string(r) + " relators on " + std::to_string(g) +
                                       " generators");
  PolyMatrix f = fox_matrix(p);
  std::size_t cols = g;
  eliminate_units(f, cols);
  drop_redundant_rows(f);
  return gcd_of_minors(f, cols).normalized();
}

namespace {

std::size_t total_length(const std::vector<Word> &rels) {
  std::size_t n = 0;
  for (const Word &r : rels)
    n += r.size();
  return n;
}

// Replaces generator x by `expr` and renumbers the generators above x.
Word substitute(const Word &w, int x, const Word &expr) {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    if (l.index == x) {
      const Word piece = l.sign > 0 ? expr : invert(expr);
      for (Letter m : piece.letters())
        raw.push_back({m.index > x ? m.index - 1 : m.index, m.sign});
    } else {
      raw.push_back({l.index > x ? l.index - 1 : l.index, l.sign});
    }
  }
  return reduce(raw);
}

// Smallest representative among cyclic rotations of w and w^-1.
std::vector<Letter> relator_key(const Word &w) {
  std::vector<Letter> best;
  for (const Word &v : {w, invert(w)}) {
    const auto l = v.letters();
    for (std::size_t s = 0; s < l.size(); ++s) {
      std::vector<Letter> rot(l.begin() + static_cast<std::ptrdiff_t>(s), l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(s));
      if (best.empty() || rot < best)
        best = std::move(rot);
    }
  }
  return best;
}

void cleanup(Presentation &p) {
  std::vector<Word> kept;
  std::set<std::vector<Letter>> seen;
  for (const Word &r : p.relators) {
    const Word core = cyclic_decompose(r).core;
    if (core.empty())
      continue;
    if (seen.insert(relator_key(core)).second)
      kept.push_back(core);
  }
  p.relators = std::move(kept);
}

bool try_eliminate(Presentation &p) {
  const std::size_t before = total_length(p.relators);
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    const Word &r = p.relators[ri];
    std::vector<int> count(static_cast<std::size_t>(p.rank()) + 1, 0);
    for (Letter l : r.letters())
      ++count[static_cast<std::size_t>(l.index)];
    for (int x = p.rank(); x >= 1; --x) {
      if (count[static_cast<std::size_t>(x)] != 1)
        continue;
      // Rotate so that x^e leads: r ~ x^e v, hence x = v^-e.
      const auto l = r.letters();
      std::size_t at = 0;
      while (l[at].index != x)
        ++at;
      const int e = l[at].sign;
      std::vector<Letter> rest(l.begin() + static_cast<std::ptrdiff_t>(at) + 1, l.end());
      rest.insert(rest.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(at));
      const Word v = reduce(rest);
      const Word expr = e > 0 ? invert(v) : v;

      std::vector<Word> rels;
      for (std::size_t k = 0; k < p.relators.size(); ++k)
        if (k != ri)
          rels.push_back(substitute(p.relators[k], x, expr));
      if (total_length(rels) >= before)
        continue;
      if (p.peripheral)
        p.peripheral = PeripheralPair{substitute(p.peripheral->meridian, x, expr),
                                      substitute(p.peripheral->longitude, x, expr)};
      p.gens.erase(p.gens.begin() + (x - 1));
      p.relators = std::move(rels);
      return true;
    }
  }
  return false;
}

} // namespace

Presentation tietze_simplify(const Presentation &p) {
  validate(p);
  Presentation out = p;
  do
    cleanup(out);
  while (try_eliminate(out));
  return out;
}

} // namespace soleknot
