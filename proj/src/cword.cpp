#include "soleknot/cword.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "soleknot/error.hpp"

namespace soleknot::compressed {

namespace {

constexpr std::int32_t kRootTag = INT32_MAX;
constexpr int kMaxStages = 1 << 14;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Length checked_add(Length a, Length b) {
  const Length sum = a + b;
  if (sum < a)
    throw Error(Errc::BudgetExceeded, "compressed word length overflow");
  return sum;
}

Length checked_mul(Length a, std::uint64_t k) {
  if (k != 0 && a > ~Length{0} / k)
    throw Error(Errc::BudgetExceeded, "compressed word length overflow");
  return a * k;
}

} // namespace

Id Pool::intern(Node n, const Id *kids) {
  std::uint64_t h = mix(static_cast<std::uint64_t>(n.kind) * 0x100000001B3ull ^
                        static_cast<std::uint64_t>(static_cast<std::int64_t>(n.stage)));
  h = mix(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(n.letter)));
  h = mix(h ^ n.count);
  for (std::uint32_t i = 0; i < n.kid_count; ++i)
    h = mix(h ^ nodes_[kids[i]].fp);
  n.fp = h;

  auto [lo, hi] = table_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    const Node &m = nodes_[it->second];
    if (m.kind != n.kind || m.stage != n.stage || m.letter != n.letter || m.count != n.count ||
        m.kid_count != n.kid_count)
      continue;
    if (std::equal(kids, kids + n.kid_count, kids_.begin() + m.kid_begin))
      return it->second;
  }
  if (nodes_.size() >= kEmpty - 1)
    throw Error(Errc::BudgetExceeded, "compressed node pool exhausted");
  n.kid_begin = static_cast<std::uint32_t>(kids_.size());
  kids_.insert(kids_.end(), kids, kids + n.kid_count);
  const Id id = static_cast<Id>(nodes_.size());
  nodes_.push_back(n);
  table_.emplace(h, id);
  return id;
}

Id Pool::leaf(int signed_letter) {
  if (signed_letter == 0)
    throw Error(Errc::InvalidArgument, "letter index must be nonzero");
  Node n;
  n.kind = Kind::Leaf;
  n.letter = signed_letter;
  n.length = 1;
  return intern(n, nullptr);
}

Id Pool::make_run(Id a, std::uint64_t k, int stage) {
  Node n;
  n.kind = Kind::Run;
  n.stage = stage;
  n.count = k;
  n.kid_count = 1;
  n.length = checked_mul(nodes_[a].length, k);
  return intern(n, &a);
}

Id Pool::make_block(const std::vector<Id> &kids, int stage) {
  Node n;
  n.kind = Kind::Block;
  n.stage = stage;
  n.kid_count = static_cast<std::uint32_t>(kids.size());
  for (Id k : kids)
    n.length = checked_add(n.length, nodes_[k].length);
  return intern(n, kids.data());
}

std::uint64_t Pool::priority(Id sym, int stage) const {
  return mix(nodes_[sym].fp ^ (static_cast<std::uint64_t>(stage) + 1) * 0x9E3779B97F4A7C15ull);
}

std::vector<Pool::Item> Pool::parse_stage(std::vector<Item> &items, int stage) {
  std::vector<Item> out;
  if (stage % 2 == 0) {
    for (const Item &it : items) {
      if (!out.empty() && out.back().sym == it.sym)
        out.back().count += it.count;
      else
        out.push_back({it.sym, it.count, 0, 0});
    }
    for (Item &it : out) {
      if (it.count > 1) {
        it.sym = make_run(it.sym, it.count, stage);
        it.count = 1;
      }
    }
    return out;
  }

  std::vector<std::uint64_t> prio(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].count != 1)
      throw std::logic_error("compressed parse: repeated symbol at a block stage");
    prio[i] = priority(items[i].sym, stage);
  }
  std::vector<Id> group;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= items.size(); ++i) {
    if (i < items.size() && prio[i] >= prio[i - 1])
      continue;
    if (i - start == 1) {
      out.push_back({items[start].sym, 1, 0, 0});
    } else {
      group.clear();
      for (std::size_t k = start; k < i; ++k)
        group.push_back(items[k].sym);
      out.push_back({make_block(group, stage), 1, 0, 0});
    }
    start = i;
  }
  return out;
}

// `left` holds the untouched part of the left operand with its rightmost item
// at the back; `right_rev` holds the right operand with its leftmost item at
// the back. Items carry the creation stage of the node they were expanded from
// (their tag) and an instance number shared by siblings of one expansion.
// At stage j the parse of the combined string agrees with the operands' own
// parses everywhere except near the seam: the last stage-j group of the left
// side and the first stage-j group of the right side are moved into `mid` and
// reparsed together with it, everything else is carried up unchanged.
Id Pool::rebuild(std::vector<Item> left, std::vector<Item> mid, std::vector<Item> right_rev) {
  auto expand_edge = [&](std::vector<Item> &side, int stage, bool is_left) {
    while (true) {
      const Item top = side.back();
      const Node &n = nodes_[top.sym];
      if (n.kind == Kind::Leaf || n.level() <= stage)
        return;
      if (top.count > 1)
        side.back().count -= 1;
      else
        side.pop_back();
      const std::uint64_t inst = next_inst_++;
      const std::int32_t tag = n.stage;
      if (n.kind == Kind::Run) {
        side.push_back({kid(top.sym, 0), n.count, tag, inst});
      } else if (is_left) {
        for (std::uint32_t i = 0; i < n.kid_count; ++i)
          side.push_back({kid(top.sym, i), 1, tag, inst});
      } else {
        for (std::uint32_t i = n.kid_count; i-- > 0;)
          side.push_back({kid(top.sym, i), 1, tag, inst});
      }
    }
  };
  // Removes the edge group of `side` at `stage`, in edge-to-inner order.
  auto pull_group = [&](std::vector<Item> &side, int stage, std::vector<Item> &pulled) {
    Item &top = side.back();
    if (top.tag == stage) {
      const std::uint64_t inst = top.inst;
      while (!side.empty() && side.back().inst == inst) {
        pulled.push_back(side.back());
        side.pop_back();
      }
    } else if (top.tag > stage) {
      pulled.push_back({top.sym, 1, top.tag, top.inst});
      if (top.count > 1)
        top.count -= 1;
      else
        side.pop_back();
    } else {
      throw std::logic_error("compressed rebuild: stale item on operand edge");
    }
  };

  std::vector<Item> work, pulled;
  for (int j = 0;; ++j) {
    if (j > kMaxStages)
      throw std::logic_error("compressed rebuild did not converge");
    if (left.empty() && right_rev.empty()) {
      if (mid.empty())
        return kEmpty;
      if (mid.size() == 1 && mid[0].count == 1)
        return mid[0].sym;
    }
    work.clear();
    if (!left.empty()) {
      expand_edge(left, j, true);
      pulled.clear();
      pull_group(left, j, pulled);
      work.assign(pulled.rbegin(), pulled.rend());
    }
    work.insert(work.end(), mid.begin(), mid.end());
    if (!right_rev.empty()) {
      expand_edge(right_rev, j, false);
      pulled.clear();
      pull_group(right_rev, j, pulled);
      work.insert(work.end(), pulled.begin(), pulled.end());
    }
    mid = parse_stage(work, j);
  }
}

void Pool::split_left(Id a, Length n, std::vector<Item> &left) {
  if (n == 0)
    return;
  if (n >= length(a)) {
    left.push_back({a, 1, kRootTag, next_inst_++});
    return;
  }
  Id cur = a;
  Length pos = n;
  while (pos > 0) {
    const Node &nd = nodes_[cur];
    const std::uint64_t inst = next_inst_++;
    if (nd.kind == Kind::Run) {
      const Id base = kid(cur, 0);
      const Length bl = nodes_[base].length;
      const auto q = static_cast<std::uint64_t>(pos / bl);
      const Length r = pos % bl;
      if (q > 0)
        left.push_back({base, q, nd.stage, inst});
      cur = base;
      pos = r;
    } else if (nd.kind == Kind::Block) {
      const Id parent = cur;
      for (std::uint32_t i = 0; i < nd.kid_count; ++i) {
        const Id c = kid(parent, i);
        const Length cl = nodes_[c].length;
        if (pos >= cl) {
          left.push_back({c, 1, nd.stage, inst});
          pos -= cl;
          if (pos == 0)
            break;
        } else {
          cur = c;
          break;
        }
      }
    } else {
      throw std::logic_error("compressed split reached a leaf");
    }
  }
}

void Pool::split_right(Id a, Length n, std::vector<Item> &right_rev) {
  if (n >= length(a))
    return;
  if (n == 0) {
    right_rev.push_back({a, 1, kRootTag, next_inst_++});
    return;
  }
  Id cur = a;
  Length pos = n;
  while (pos > 0) {
    const Node &nd = nodes_[cur];
    const std::uint64_t inst = next_inst_++;
    if (nd.kind == Kind::Run) {
      const Id base = kid(cur, 0);
      const Length bl = nodes_[base].length;
      const auto q = static_cast<std::uint64_t>(pos / bl);
      const Length r = pos % bl;
      const std::uint64_t whole = nd.count - q - (r == 0 ? 0 : 1);
      if (whole > 0)
        right_rev.push_back({base, whole, nd.stage, inst});
      cur = base;
      pos = r;
    } else if (nd.kind == Kind::Block) {
      const Id parent = cur;
      const std::uint32_t kc = nd.kid_count;
      const std::int32_t stage = nd.stage;
      Length cum = 0;
      std::uint32_t i = 0;
      while (cum + nodes_[kid(parent, i)].length <= pos) {
        cum += nodes_[kid(parent, i)].length;
        ++i;
      }
      // Child i straddles or starts at the cut.
      const bool at_boundary = cum == pos;
      for (std::uint32_t k = kc; k-- > (at_boundary ? i : i + 1);)
        right_rev.push_back({kid(parent, k), 1, stage, inst});
      cur = kid(parent, i);
      pos = at_boundary ? 0 : pos - cum;
    } else {
      throw std::logic_error("compressed split reached a leaf");
    }
  }
}

Id Pool::from_word(const Word &w) {
  std::vector<Item> mid;
  mid.reserve(w.size());
  for (Letter l : w.letters())
    mid.push_back({leaf(l.index * l.sign), 1, 0, 0});
  return rebuild({}, std::move(mid), {});
}

Word Pool::to_word(Id id, std::size_t cap) const {
  if (id == kEmpty)
    return {};
  if (length(id) > cap)
    throw Error(Errc::BudgetExceeded, "compressed word too long to expand");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length(id)));
  std::vector<std::pair<Id, std::uint64_t>> stack{{id, 1}};
  while (!stack.empty()) {
    auto [s, c] = stack.back();
    if (c > 1)
      stack.back().second -= 1;
    else
      stack.pop_back();
    const Node &n = nodes_[s];
    if (n.kind == Kind::Leaf) {
      out.push_back({n.letter > 0 ? n.letter : -n.letter, n.letter > 0 ? 1 : -1});
    } else if (n.kind == Kind::Run) {
      stack.emplace_back(kid(s, 0), n.count);
    } else {
      for (std::uint32_t i = n.kid_count; i-- > 0;)
        stack.emplace_back(kid(s, i), 1);
    }
  }
  return Word::from_reduced(std::move(out));
}

Id Pool::concat(Id a, Id b) {
  if (a == kEmpty)
    return b;
  if (b == kEmpty)
    return a;
  std::vector<Item> left{{a, 1, kRootTag, next_inst_++}};
  std::vector<Item> right{{b, 1, kRootTag, next_inst_++}};
  return rebuild(std::move(left), {}, std::move(right));
}

Id Pool::multiply(Id a, Id b) {
  if (a == kEmpty)
    return b;
  if (b == kEmpty)
    return a;
  const Length c = lcp(invert(a), b);
  std::vector<Item> left, right;
  split_left(a, length(a) - c, left);
  split_right(b, c, right);
  return rebuild(std::move(left), {}, std::move(right));
}

Id Pool::invert(Id a) {
  if (a == kEmpty)
    return kEmpty;
  if (auto it = inverse_.find(a); it != inverse_.end())
    return it->second;
  const Node n = nodes_[a];
  Id r = kEmpty;
  if (n.kind == Kind::Leaf) {
    r = leaf(-n.letter);
  } else if (n.kind == Kind::Run) {
    r = raw_power(invert(kid(a, 0)), n.count);
  } else {
    for (std::uint32_t i = n.kid_count; i-- > 0;)
      r = concat(r, invert(kid(a, i)));
  }
  inverse_[a] = r;
  inverse_[r] = a;
  return r;
}

Id Pool::prefix(Id a, Length n) {
  if (n == 0 || a == kEmpty)
    return kEmpty;
  if (n >= length(a))
    return a;
  std::vector<Item> left;
  split_left(a, n, left);
  return rebuild(std::move(left), {}, {});
}

Id Pool::drop(Id a, Length n) {
  if (n == 0)
    return a;
  if (a == kEmpty || n >= length(a))
    return kEmpty;
  std::vector<Item> right;
  split_right(a, n, right);
  return rebuild({}, {}, std::move(right));
}

Id Pool::slice(Id a, Length from, Length n) { return prefix(drop(a, from), n); }

Length Pool::lcp(Id a, Id b) {
  if (a == kEmpty || b == kEmpty)
    return 0;
  using Entry = std::pair<Id, std::uint64_t>;
  std::vector<Entry> x{{a, 1}}, y{{b, 1}};
  auto expand = [&](std::vector<Entry> &s) {
    const auto [sym, c] = s.back();
    if (c > 1)
      s.back().second -= 1;
    else
      s.pop_back();
    const Node &n = nodes_[sym];
    if (n.kind == Kind::Run) {
      s.emplace_back(kid(sym, 0), n.count);
    } else {
      for (std::uint32_t i = n.kid_count; i-- > 0;)
        s.emplace_back(kid(sym, i), 1);
    }
  };
  Length total = 0;
  while (!x.empty() && !y.empty()) {
    Entry &p = x.back();
    Entry &q = y.back();
    if (p.first == q.first) {
      const std::uint64_t m = std::min(p.second, q.second);
      total += nodes_[p.first].length * m;
      p.second -= m;
      q.second -= m;
      if (p.second == 0)
        x.pop_back();
      if (q.second == 0)
        y.pop_back();
      continue;
    }
    const bool pl = nodes_[p.first].kind == Kind::Leaf;
    const bool ql = nodes_[q.first].kind == Kind::Leaf;
    if (pl && ql)
      break;
    if (!pl && (ql || nodes_[p.first].length >= nodes_[q.first].length))
      expand(x);
    else
      expand(y);
  }
  return total;
}

Id Pool::raw_power(Id a, std::uint64_t k) {
  Id result = kEmpty;
  Id base = a;
  while (k > 0) {
    if (k & 1u)
      result = concat(result, base);
    k >>= 1u;
    if (k > 0)
      base = concat(base, base);
  }
  return result;
}

Id Pool::power(Id a, std::int64_t k) {
  if (a == kEmpty || k == 0)
    return kEmpty;
  if (k < 0) {
    a = invert(a);
    k = -k;
  }
  if (k == 1)
    return a;
  const Cyclic cd = cyclic_decompose(a);
  const Id core = raw_power(cd.core, static_cast<std::uint64_t>(k));
  return concat(concat(cd.prefix, core), invert(cd.prefix));
}

Pool::Cyclic Pool::cyclic_decompose(Id a) {
  if (a == kEmpty)
    return {};
  const Length c = lcp(a, invert(a));
  const Length len = length(a);
  return {prefix(a, c), slice(a, c, len - 2 * c)};
}

int Pool::first_letter(Id a) const {
  if (a == kEmpty)
    throw Error(Errc::InvalidArgument, "empty word has no first letter");
  while (nodes_[a].kind != Kind::Leaf)
    a = kid(a, 0);
  return nodes_[a].letter;
}

int Pool::last_letter(Id a) const {
  if (a == kEmpty)
    throw Error(Errc::InvalidArgument, "empty word has no last letter");
  while (nodes_[a].kind != Kind::Leaf)
    a = kid(a, nodes_[a].kid_count - 1);
  return nodes_[a].letter;
}

Endo::Endo(Pool &pool, const FreeEndo &e) : pool_(pool), rank_(e.rank()) {
  for (const Word &img : e.images()) {
    images_.push_back(pool_.from_word(img));
    inverse_images_.push_back(pool_.invert(images_.back()));
  }
}

Id Endo::apply(Id w) {
  if (w == kEmpty)
    return kEmpty;
  if (auto it = memo_.find(w); it != memo_.end())
    return it->second;
  const Pool::Node n = pool_.node(w);
  Id r = kEmpty;
  switch (n.kind) {
  case Pool::Kind::Leaf: {
    const int idx = n.letter > 0 ? n.letter : -n.letter;
    if (idx > rank_)
      throw Error(Errc::IndexOutOfRank, "word uses generator x" + std::to_string(idx) +
                                            " above rank " + std::to_string(rank_));
    r = n.letter > 0 ? images_[static_cast<std::size_t>(idx - 1)]
                     : inverse_images_[static_cast<std::size_t>(idx - 1)];
    break;
  }
  case Pool::Kind::Run:
    r = pool_.power(apply(pool_.kid(w, 0)), static_cast<std::int64_t>(n.count));
    break;
  case Pool::Kind::Block:
    for (std::uint32_t i = 0; i < n.kid_count; ++i)
      r = pool_.multiply(r, apply(pool_.kid(w, i)));
    break;
  }
  memo_.emplace(w, r);
  return r;
}

} // namespace soleknot::compressed
