#include "soleknot/presentation.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "soleknot/error.hpp"

namespace soleknot {

int Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name)
      return static_cast<int>(i) + 1;
  return 0;
}

bool valid_generator_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name.substr(1)) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::islower(u) || std::isdigit(u) || c == '_'))
      return false;
  }
  return true;
}

namespace {

void check_word(const Word &w, int rank, const char *what) {
  if (w.max_index() > rank)
    throw Error(Errc::IndexOutOfRank,
                std::string(what) + " uses generator " + std::to_string(w.max_index()) +
                    " but the presentation has " + std::to_string(rank));
}

std::string inverse_token(const std::string &name) {
  std::string t = name;
  t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  return t;
}

} // namespace

void validate(const Presentation &p) {
  std::set<std::string> seen;
  for (const auto &g : p.gens) {
    if (!valid_generator_name(g))
      throw Error(Errc::InvalidArgument, "invalid generator name '" + g + "'");
    if (!seen.insert(g).second)
      throw Error(Errc::InvalidArgument, "duplicate generator name '" + g + "'");
  }
  for (const Word &r : p.relators)
    check_word(r, p.rank(), "relator");
  if (p.peripheral) {
    check_word(p.peripheral->meridian, p.rank(), "meridian");
    check_word(p.peripheral->longitude, p.rank(), "longitude");
  }
}

std::string format_word(const Word &w, const std::vector<std::string> &gens) {
  std::string out;
  for (Letter l : w.letters()) {
    if (l.index < 1 || l.index > static_cast<int>(gens.size()))
      throw Error(Errc::IndexOutOfRank, "letter outside generator list");
    if (!out.empty())
      out += ' ';
    const std::string &name = gens[static_cast<std::size_t>(l.index - 1)];
    out += l.sign > 0 ? name : inverse_token(name);
  }
  return out;
}

Word parse_named_word(std::string_view text, const std::vector<std::string> &gens) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string tok(text.substr(start, i - start));
    int sign = 1;
    if (std::isupper(static_cast<unsigned char>(tok[0]))) {
      sign = -1;
      tok[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
    }
    int index = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens[g] == tok)
        index = static_cast<int>(g) + 1;
    if (index == 0)
      throw ParseError(start, "unknown generator '" + std::string(text.substr(start, i - start)) + "'");
    raw.push_back({index, sign});
  }
  return reduce(raw);
}

std::string to_text(const Presentation &p) {
  std::string out = "gens:";
  for (const auto &g : p.gens)
    out += " " + g;
  out += '\n';
  auto line = [&](const char *key, const Word &w) {
    out += key;
    if (!w.empty())
      out += " " + format_word(w, p.gens);
    out += '\n';
  };
  for (const Word &r : p.relators)
    line("rel:", r);
  if (p.peripheral) {
    line("meridian:", p.peripheral->meridian);
    line("longitude:", p.peripheral->longitude);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::optional<Word> meridian, longitude;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first])))
      ++first;
    if (first == line.size() || line[first] == '#')
      continue;
    const std::size_t colon = line.find(':', first);
    if (colon == std::string_view::npos)
      throw ParseError(line_start + first, "expected 'key:' at start of line");
    const std::string_view key = line.substr(first, colon - first);
    const std::string_view body = line.substr(colon + 1);
    const std::size_t body_start = line_start + colon + 1;

    auto parse_body = [&]() {
      try {
        return parse_named_word(body, p.gens);
      } catch (const ParseError &e) {
        throw ParseError(body_start + e.position(), "in '" + std::string(key) + "' line");
      }
    };

    if (key == "gens") {
      if (have_gens)
        throw ParseError(line_start + first, "duplicate gens line");
      have_gens = true;
      std::istringstream in{std::string(body)};
      std::string name;
      while (in >> name) {
        if (!valid_generator_name(name))
          throw ParseError(body_start, "invalid generator name '" + name + "'");
        p.gens.push_back(name);
      }
    } else if (!have_gens) {
      throw ParseError(line_start + first, "gens line must come first");
    } else if (key == "rel") {
      p.relators.push_back(parse_body());
    } else if (key == "meridian") {
      if (meridian)
        throw ParseError(line_start + first, "duplicate meridian line");
      meridian = parse_body();
    } else if (key == "longitude") {
      if (longitude)
        throw ParseError(line_start + first, "duplicate longitude line");
      longitude = parse_body();
    } else {
      throw ParseError(line_start + first, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_gens)
    throw ParseError(0, "missing gens line");
  if (meridian.has_value() != longitude.has_value())
    throw ParseError(text.size(), "meridian and longitude must be given together");
  if (meridian)
    p.peripheral = PeripheralPair{*meridian, *longitude};
  try {
    validate(p);
  } catch (const Error &e) {
    throw ParseError(0, e.what());
  }
  return p;
}

nlohmann::json to_json(const Presentation &p) {
  nlohmann::json j;
  j["gens"] = p.gens;
  auto rels = nlohmann::json::array();
  for (const Word &r : p.relators)
    rels.push_back(format_word(r, p.gens));
  j["relators"] = rels;
  if (p.peripheral)
    j["peripheral"] = {{"meridian", format_word(p.peripheral->meridian, p.gens)},
                       {"longitude", format_word(p.peripheral->longitude, p.gens)}};
  else
    j["peripheral"] = nullptr;
  return j;
}

Presentation presentation_from_json(const nlohmann::json &j) {
  try {
    Presentation p;
    p.gens = j.at("gens").get<std::vector<std::string>>();
    for (const auto &r : j.at("relators"))
      p.relators.push_back(parse_named_word(r.get<std::string>(), p.gens));
    if (j.contains("peripheral") && !j["peripheral"].is_null()) {
      const auto &per = j["peripheral"];
      p.peripheral = PeripheralPair{parse_named_word(per.at("meridian").get<std::string>(), p.gens),
                                    parse_named_word(per.at("longitude").get<std::string>(), p.gens)};
    }
    validate(p);
    return p;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("malformed presentation document: ") + e.what());
  }
}

std::vector<std::string> indexed_names(int n, std::string_view stem) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    names.push_back(std::string(stem) + std::to_string(i));
  return names;
}

} // namespace soleknot
