#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "soleknot/error.hpp"
#include "soleknot/knotgrp.hpp"
#include "soleknot/satellite.hpp"
#include "soleknot/solenoid.hpp"
#include "soleknot/torusgrp.hpp"
#include "verify.hpp"

namespace soleknot::cli {

namespace {

using nlohmann::json;

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

// Inline text, or the contents of a file when the argument starts with '@'.
std::string resolve(const std::string &arg) {
  if (arg.empty() || arg[0] != '@')
    return arg;
  std::ifstream in(arg.substr(1));
  if (!in)
    throw Error(Errc::InvalidArgument, "cannot read " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Braid braid_arg(const std::string &arg) { return parse_braid(trim(resolve(arg))); }

// A presentation in text form, or a braid whose closure in the sphere is used.
Presentation knot_arg(const std::string &arg) {
  const std::string text = resolve(arg);
  if (text.find("gens:") != std::string::npos)
    return parse_presentation(text);
  return sphere_closure_presentation(parse_braid(trim(text)));
}

std::uint64_t budget_from(std::uint64_t flag) {
  if (flag)
    return flag;
  if (const char *env = std::getenv("SOLEKNOT_BUDGET")) {
    std::uint64_t v = 0;
    const std::string s = env;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v == 0)
      throw Error(Errc::InvalidArgument, "SOLEKNOT_BUDGET must be a positive integer, got '" + s + "'");
    return v;
  }
  return kDefaultEnumerationBudget;
}

json coeffs_json(const LaurentPoly &p) {
  json c = json::array();
  for (const auto &v : p.coeffs())
    c.push_back(v.str());
  return c;
}

struct Args {
  std::string format = "compact";
  std::string braid, word, knot, pattern, ambient = "sphere", seq_a, seq_b, corpus = "default",
                                          class_word;
  std::vector<std::string> patterns, suites;
  std::int64_t power = 1;
  int max_texp = -1, max_len = -1, depth = -1;
  bool repeat = false, simplify = false;
  std::uint64_t budget = 0, seed = 1;
  std::int64_t bound = kDefaultFactorBound;
  std::vector<std::int64_t> cable;

  bool structured() const { return format == "structured"; }
};

int run_closure(const Args &a, std::ostream &out) {
  const Braid b = braid_arg(a.braid);
  const ClosureInfo c = closure_info(b);
  if (a.structured())
    out << json{{"command", "closure"},
                {"braid", to_string(b)},
                {"components", c.components},
                {"winding", c.winding},
                {"exponent_sum", c.exponent_sum},
                {"is_knot", c.is_knot},
                {"permutation", to_string(induced_permutation(b))}}
               .dump(2)
        << '\n';
  else
    out << "components=" << c.components << " winding=" << c.winding << " exponent_sum=" << c.exponent_sum
        << " is_knot=" << (c.is_knot ? "true" : "false") << '\n';
  return 0;
}

int run_act(const Args &a, std::ostream &out) {
  const Braid b = braid_arg(a.braid);
  const Word w = parse_word(trim(resolve(a.word)));
  const MappingTorus mt(b);
  const Word image = mt.act(a.power, w);
  if (a.structured())
    out << json{{"command", "act"}, {"braid", to_string(b)}, {"power", a.power}, {"word", to_string(w)},
                {"image", to_string(image)}}
               .dump(2)
        << '\n';
  else
    out << to_string(image) << '\n';
  return 0;
}

int run_centralizer(const Args &a, std::ostream &out) {
  const Braid b = braid_arg(a.braid);
  const CentralizerGenerators g = centralizer_generators(b);
  json doc{{"command", "centralizer"},
           {"braid", to_string(b)},
           {"generators", {to_string(g.a), to_string(g.b)}}};
  std::string text = to_string(g.a) + "\n" + to_string(g.b) + "\n";
  if (a.max_len >= 0 || a.max_texp >= 0) {
    const int texp = a.max_texp >= 0 ? a.max_texp : 2 * b.strands();
    const int len = a.max_len >= 0 ? a.max_len : 6;
    const MappingTorus mt(b);
    const auto found = centralizer_enumeration_oracle(b, texp, len, budget_from(a.budget));
    const auto predicted = static_cast<std::size_t>(
        std::count_if(found.begin(), found.end(), [&](const TorusElement &e) { return in_predicted_centralizer(mt, g.a, e); }));
    json elems = json::array();
    for (const auto &e : found)
      elems.push_back(to_string(e));
    doc["enumeration"] = {{"max_texp", texp}, {"max_len", len}, {"found", found.size()},
                          {"predicted", predicted}, {"elements", elems}};
    text += "enumerated=" + std::to_string(found.size()) + " predicted=" + std::to_string(predicted) + "\n";
  }
  out << (a.structured() ? doc.dump(2) + "\n" : text);
  return 0;
}

int run_present(const Args &a, std::ostream &out) {
  const Braid b = braid_arg(a.braid);
  json doc{{"command", "present"}, {"ambient", a.ambient}, {"braid", to_string(b)}};
  Presentation p;
  if (a.ambient == "torus") {
    const SolidTorusPresentation s = solid_torus_presentation(b);
    p = s.presentation;
    doc["closure_meridian"] = format_word(s.closure_meridian, p.gens);
    doc["closure_longitude"] = format_word(s.closure_longitude, p.gens);
  } else {
    p = sphere_closure_presentation(b);
  }
  if (a.simplify)
    p = tietze_simplify(p);
  doc["presentation"] = to_json(p);
  out << (a.structured() ? doc.dump(2) + "\n" : to_text(p));
  return 0;
}

int run_satellite(const Args &a, std::ostream &out) {
  const Presentation c = knot_arg(a.knot);
  const Presentation p = satellite_presentation(c, braid_arg(a.pattern));
  if (a.structured())
    out << json{{"command", "satellite"}, {"presentation", to_json(p)}}.dump(2) << '\n';
  else
    out << to_text(p);
  return 0;
}

int run_filtration(const Args &a, std::ostream &out) {
  const Presentation seed = knot_arg(a.knot);
  std::vector<Braid> pats;
  for (const std::string &s : a.patterns)
    pats.push_back(braid_arg(s));
  const int depth = a.depth >= 0 ? a.depth : static_cast<int>(pats.size());
  const auto stages = build_filtration(seed, pats, depth, a.repeat);
  if (a.structured()) {
    json transitions = json::array();
    for (std::size_t k = 0; k + 1 < stages.size(); ++k)
      transitions.push_back(h1_transition(stages, k));
    out << json{{"command", "filtration"}, {"stages", filtration_to_json(stages)}, {"transitions", transitions}}
               .dump(2)
        << '\n';
    return 0;
  }
  for (const FiltrationStage &s : stages) {
    out << "stage " << s.index;
    if (s.braid)
      out << " braid=\"" << to_string(*s.braid) << "\" transition="
          << h1_transition(stages, static_cast<std::size_t>(s.index - 1));
    out << " gens=" << s.presentation.rank() << " relators=" << s.presentation.relators.size() << '\n';
  }
  return 0;
}

int run_abelianize(const Args &a, std::ostream &out) {
  const Presentation p = knot_arg(a.knot);
  const Abelianization ab = abelianize(p);
  json doc{{"command", "abelianize"}, {"group", to_string(ab)}, {"free_rank", ab.free_rank}};
  json f = json::array();
  for (const auto &v : ab.invariant_factors)
    f.push_back(v.str());
  doc["invariant_factors"] = f;
  std::string text = to_string(ab) + "\n";
  if (!a.class_word.empty()) {
    const std::int64_t c = h1_class(p, parse_named_word(trim(resolve(a.class_word)), p.gens));
    doc["class"] = c;
    text += "class=" + std::to_string(c) + "\n";
  }
  out << (a.structured() ? doc.dump(2) + "\n" : text);
  return 0;
}

int run_alexander(const Args &a, std::ostream &out) {
  const LaurentPoly d = alexander_polynomial(knot_arg(a.knot));
  if (a.structured())
    out << json{{"command", "alexander"}, {"polynomial", to_string(d)}, {"coefficients", coeffs_json(d)}}.dump(2)
        << '\n';
  else
    out << to_string(d) << '\n';
  return 0;
}

int run_classify(const Args &a, std::ostream &out) {
  const WindingSeq x = parse_winding_seq(trim(resolve(a.seq_a)));
  const WindingSeq y = parse_winding_seq(trim(resolve(a.seq_b)));
  const PrimeProfile px = profile(x, a.bound), py = profile(y, a.bound);
  const bool eq = px.infinite == py.infinite;
  if (a.structured())
    out << json{{"command", "classify"}, {"equivalent", eq}, {"profiles", {to_json(px), to_json(py)}}}.dump(2)
        << '\n';
  else
    out << (eq ? "equivalent" : "inequivalent") << '\n' << to_string(px) << '\n' << to_string(py) << '\n';
  return 0;
}

int run_cable(const Args &a, std::ostream &out) {
  const auto &v = a.cable;
  const CableCheck c = cable_tight_criterion(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
  if (a.structured())
    out << json{{"command", "cable"}, {"satisfied", c.satisfied}, {"z", c.z.str()}, {"w", c.w.str()}}.dump(2)
        << '\n';
  else
    out << "satisfied=" << (c.satisfied ? "true" : "false") << " z=" << c.z << " w=" << c.w << '\n';
  return 0;
}

int run_verify(const Args &a, std::ostream &out) {
  if (a.corpus != "default" && a.corpus != "quick")
    throw Error(Errc::InvalidArgument, "unknown corpus '" + a.corpus + "'");
  const auto suites = verify::default_suites();
  for (const std::string &s : a.suites)
    if (!suites.count(s))
      throw Error(Errc::InvalidArgument, "unknown suite '" + s + "'");
  verify::Options o{a.seed, a.corpus, budget_from(a.budget)};
  return verify::print(verify::run(suites, o, a.suites), out, a.structured());
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Braids, closed-braid knot groups, satellites and solenoids", "soleknot"};
  app.fallthrough();
  app.require_subcommand(1);
  app.require_subcommand(1);
  Args a;
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"compact", "structured"}));

  auto *closure = app.add_subcommand("closure", "Components, winding and exponent sum of the closure");
  closure->add_option("braid", a.braid, "Braid, e.g. '3: s1 S2'")->required();

  auto *act = app.add_subcommand("act", "Apply the Artin action of a braid power to a word");
  act->add_option("braid", a.braid)->required();
  act->add_option("word", a.word, "Word, e.g. 'x1 X2'")->required();
  act->add_option("--power", a.power, "Apply beta^K");

  auto *cent = app.add_subcommand("centralizer", "Centralizer generators of x1 in the mapping torus");
  cent->add_option("braid", a.braid)->required();
  cent->add_option("--max-texp", a.max_texp, "Enumerate with |m| <= M")->check(CLI::NonNegativeNumber);
  cent->add_option("--max-len", a.max_len, "Enumerate with |z| <= L")->check(CLI::NonNegativeNumber);
  cent->add_option("--budget", a.budget, "Enumeration cap")->check(CLI::PositiveNumber);

  auto *present = app.add_subcommand("present", "Presentation of the braid complement");
  present->add_option("braid", a.braid)->required();
  present->add_option("--ambient", a.ambient)->check(CLI::IsMember({"torus", "sphere"}));
  present->add_flag("--simplify", a.simplify, "Apply Tietze simplification");

  auto *sat = app.add_subcommand("satellite", "Satellite knot group presentation");
  sat->add_option("companion", a.knot, "Presentation text or braid")->required();
  sat->add_option("pattern", a.pattern, "Pattern braid")->required();

  auto *filt = app.add_subcommand("filtration", "Iterated satellites K0 -> K1 -> ...");
  filt->add_option("seed", a.knot, "Presentation text or braid")->required();
  filt->add_option("patterns", a.patterns, "Pattern braids");
  filt->add_option("--depth", a.depth)->check(CLI::NonNegativeNumber);
  filt->add_flag("--repeat", a.repeat, "Cycle through the patterns");

  auto *ab = app.add_subcommand("abelianize", "First homology of a presentation or closed braid");
  ab->add_option("knot", a.knot)->required();
  ab->add_option("--class", a.class_word, "Also print the H1 class of this word");

  auto *alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex->add_option("knot", a.knot)->required();

  auto *cls = app.add_subcommand("classify", "Compare two solenoids given by winding sequences");
  cls->add_option("a", a.seq_a, "e.g. 'pre: 12 5 | per: 2 3'")->required();
  cls->add_option("b", a.seq_b)->required();
  cls->add_option("--bound", a.bound, "Largest entry accepted")->check(CLI::PositiveNumber);

  auto *cab = app.add_subcommand("cable", "Arithmetic cable criterion for s t p q d eps delta");
  cab->add_option("values", a.cable)->expected(7)->required();

  auto *ver = app.add_subcommand("verify", "Run the property suites");
  ver->add_option("--corpus", a.corpus);
  ver->add_option("--seed", a.seed);
  ver->add_option("--suite", a.suites, "Run only these suites");
  ver->add_option("--budget", a.budget)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*closure)
      return run_closure(a, out);
    if (*act)
      return run_act(a, out);
    if (*cent)
      return run_centralizer(a, out);
    if (*present)
      return run_present(a, out);
    if (*sat)
      return run_satellite(a, out);
    if (*filt)
      return run_filtration(a, out);
    if (*ab)
      return run_abelianize(a, out);
    if (*alex)
      return run_alexander(a, out);
    if (*cls)
      return run_classify(a, out);
    if (*cab)
      return run_cable(a, out);
    if (*ver)
      return run_verify(a, out);
  } catch (const Error &e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

} // namespace soleknot::cli
