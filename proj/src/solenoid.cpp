#include "soleknot/solenoid.hpp"

#include <cctype>
#include <charconv>

namespace soleknot {

namespace {

struct Scanner {
  std::string_view text;
  std::size_t i = 0;

  void skip() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }
  bool keyword(std::string_view kw) {
    skip();
    if (text.substr(i, kw.size()) != kw)
      return false;
    std::size_t j = i + kw.size();
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j >= text.size() || text[j] != ':')
      return false;
    i = j + 1;
    return true;
  }
  bool at(char c) {
    skip();
    return i < text.size() && text[i] == c;
  }
  std::vector<std::int64_t> numbers() {
    std::vector<std::int64_t> out;
    while (true) {
      skip();
      if (i >= text.size() || !(text[i] == '-' || text[i] == '+' ||
                                std::isdigit(static_cast<unsigned char>(text[i]))))
        return out;
      const std::size_t start = i;
      if (text[i] == '+')
        ++i;
      std::int64_t v = 0;
      const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec == std::errc::result_out_of_range)
        throw ParseError(start, "integer out of range");
      if (ec != std::errc())
        throw ParseError(start, "expected an integer");
      i = static_cast<std::size_t>(end - text.data());
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '|')
        throw ParseError(i, "unexpected character after integer");
      out.push_back(v);
    }
  }
};

} // namespace

WindingSeq parse_winding_seq(std::string_view text) {
  Scanner sc{text};
  WindingSeq s;
  if (sc.keyword("pre")) {
    s.preperiod = sc.numbers();
    if (!sc.at('|'))
      throw ParseError(sc.i, "expected '|' before the period");
    ++sc.i;
  }
  if (!sc.keyword("per"))
    throw ParseError(sc.i, "expected 'per:'");
  s.period = sc.numbers();
  sc.skip();
  if (sc.i != text.size())
    throw ParseError(sc.i, "unexpected trailing input");
  return s;
}

std::string to_string(const WindingSeq &s) {
  std::string out = "pre:";
  for (auto v : s.preperiod)
    out += " " + std::to_string(v);
  out += " | per:";
  for (auto v : s.period)
    out += " " + std::to_string(v);
  return out;
}

std::string to_string(const PrimeProfile &p) {
  std::map<std::int64_t, std::string> all;
  for (const auto &[q, e] : p.finite)
    all[q] = std::to_string(e);
  for (auto q : p.infinite)
    all[q] = "inf";
  std::string out = "{";
  for (const auto &[q, e] : all) {
    if (out.size() > 1)
      out += ", ";
    out += std::to_string(q) + ":" + e;
  }
  return out + "}";
}

nlohmann::json to_json(const PrimeProfile &p) {
  nlohmann::json finite = nlohmann::json::object();
  for (const auto &[q, e] : p.finite)
    finite[std::to_string(q)] = e;
  return {{"finite", finite}, {"infinite", p.infinite}};
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n, std::int64_t bound) {
  if (n < 2)
    throw Error(Errc::EntryTooSmall, "entry " + std::to_string(n) + " is below 2");
  if (n > bound)
    throw Error(Errc::EntryTooLarge,
                "entry " + std::to_string(n) + " exceeds the factorization bound " + std::to_string(bound));
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

PrimeProfile profile(const WindingSeq &s, std::int64_t bound) {
  if (s.period.empty())
    throw Error(Errc::EmptyPeriod, "period is empty");
  PrimeProfile out;
  for (auto v : s.period)
    for (const auto &[p, e] : factorize(v, bound))
      out.infinite.insert(p);
  for (auto v : s.preperiod)
    for (const auto &[p, e] : factorize(v, bound))
      if (!out.infinite.count(p))
        out.finite[p] += e;
  return out;
}

bool solenoids_equivalent(const WindingSeq &a, const WindingSeq &b, std::int64_t bound) {
  return profile(a, bound).infinite == profile(b, bound).infinite;
}

std::string to_string(const Violation &v) {
  std::string out = to_string(v.code);
  if (v.code != Errc::EmptyPeriod)
    out += std::string(" at ") + (v.in_period ? "period " : "preperiod ") + std::to_string(v.position);
  return out;
}

std::vector<Violation> validate_sequence(const WindingSeq &s) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < s.preperiod.size(); ++i)
    if (s.preperiod[i] < 2)
      out.push_back({Errc::EntryTooSmall, false, i});
  for (std::size_t i = 0; i < s.period.size(); ++i)
    if (s.period[i] < 2)
      out.push_back({Errc::EntryTooSmall, true, i});
  if (s.period.empty())
    out.push_back({Errc::EmptyPeriod, true, 0});
  return out;
}

} // namespace soleknot
