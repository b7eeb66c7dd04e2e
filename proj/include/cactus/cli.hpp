#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cactus/diagrams.hpp"
#include "cactus/embedding.hpp"
#include "cactus/growth.hpp"
#include "cactus/json_io.hpp"
#include "cactus/local_rules.hpp"
#include "cactus/shapes.hpp"
#include "cactus/svg.hpp"
#include "cactus/tableaux.hpp"
#include "cactus/verify.hpp"

namespace cactus::cli {

enum ExitCode { ok = 0, verification_failed = 1, parse_failed = 2 };

// Raised for unusable input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string in;
  std::string out;
  std::string kind;
  std::optional<std::size_t> n;
};

// One input object: a JSON value or a line of compact text.
struct Item {
  std::optional<json> value;
  std::string text;
};

struct Input {
  std::vector<Item> items;
  bool batch = false;  // a JSON array or several text lines
  std::string raw;
};

inline Input read_input(const Options& o, std::istream& in) {
  std::string raw;
  if (o.in.empty() || o.in == "-") {
    raw.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(o.in);
    if (!f) throw InputError("cannot open '" + o.in + "'");
    raw.assign(std::istreambuf_iterator<char>(f), {});
  }
  Input input;
  input.raw = raw;
  std::string_view s = detail::trim(raw);
  if (s.empty()) throw InputError("no input");
  if (s.front() == '[' || (s.front() == '{' && s.find('"') != s.npos)) {
    json j = json::parse(s);
    if (j.is_array()) {
      input.batch = true;
      for (auto& x : j) input.items.push_back({x, ""});
    } else {
      input.items.push_back({j, ""});
    }
    return input;
  }
  for (auto line : detail::split(s, '\n')) {
    line = detail::trim(line);
    if (!line.empty() && line.front() != '#')
      input.items.push_back({std::nullopt, std::string(line)});
  }
  input.batch = input.items.size() > 1;
  return input;
}

using Tableau = std::variant<OscillatingTableau, AlternatingTableau>;

inline std::string tableau_kind(const Item& item, const Options& o) {
  if (item.value && item.value->contains("kind"))
    return item.value->at("kind").get<std::string>();
  if (!o.kind.empty()) return o.kind;
  if (item.value) throw InputError("JSON tableau needs a \"kind\"");
  auto first = detail::split(item.text, ';').front();
  bool alt = first.find(',') != std::string_view::npos ||
             item.text.find('-') != std::string::npos;
  return alt ? "alternating" : "oscillating";
}

inline OscillatingTableau least_rank(std::vector<Partition> shapes,
                                     std::optional<std::size_t> n) {
  std::size_t parts = 1;
  for (const auto& p : shapes) parts = std::max(parts, p.length());
  return OscillatingTableau(std::move(shapes), n.value_or(parts));
}

inline Tableau read_tableau(const Item& item, const Options& o) {
  std::string kind = tableau_kind(item, o);
  if (kind == "oscillating") {
    if (item.value) {
      json j = *item.value;
      if (!j.contains("n")) {
        std::vector<Partition> shapes;
        for (const auto& s : j.at("shapes"))
          shapes.emplace_back(s.get<std::vector<Int>>());
        return least_rank(std::move(shapes), o.n);
      }
      return j.get<OscillatingTableau>();
    }
    std::vector<Partition> shapes;
    for (auto f : detail::split(item.text, ';'))
      shapes.push_back(parse_partition(f));
    return least_rank(std::move(shapes), o.n);
  }
  if (kind == "alternating") {
    AlternatingTableau a = item.value ? item.value->get<AlternatingTableau>()
                                      : parse_alternating(item.text);
    return o.n ? pad_zeros(a, *o.n) : a;
  }
  throw InputError("unknown tableau kind '" + kind + "'");
}

template <class T>
T read_as(const Item& item, const Options& o) {
  Tableau t = read_tableau(item, o);
  if (!std::holds_alternative<T>(t))
    throw InputError("this command needs an " +
                     std::string(std::is_same_v<T, OscillatingTableau>
                                     ? "oscillating"
                                     : "alternating") +
                     " tableau");
  return std::get<T>(t);
}

// One result per item, rendered in the requested format.
struct Result {
  json value;
  std::string text;
};

inline void emit(const Options& o, const Input& input,
                 const std::vector<Result>& results, std::ostream& out) {
  std::ostringstream buf;
  if (o.format == "json") {
    if (input.batch) {
      json arr = json::array();
      for (const auto& r : results) arr.push_back(r.value);
      buf << arr.dump(2) << '\n';
    } else {
      for (const auto& r : results) buf << r.value.dump(2) << '\n';
    }
  } else {
    for (const auto& r : results) {
      buf << r.text;
      if (r.text.empty() || r.text.back() != '\n') buf << '\n';
    }
  }
  if (o.out.empty() || o.out == "-") {
    out << buf.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << buf.str();
  }
}

inline Result tableau_result(const Tableau& t) {
  return std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>,
                                     OscillatingTableau>)
          return Result{tableau_json(x), format_oscillating(x)};
        else
          return Result{tableau_json(x), format_alternating(x)};
      },
      t);
}

inline std::vector<Result> map_items(const Input& input,
                                     const std::function<Result(const Item&)>& f) {
  std::vector<Result> out;
  for (const auto& item : input.items) out.push_back(f(item));
  return out;
}

// Oscillating promotion as a two-row diagram of weights.
inline Result oscillating_promotion_diagram(const OscillatingTableau& o) {
  auto p = promote(o);
  std::vector<std::pair<std::size_t, std::vector<Staircase>>> rows{
      {0, o.weights()}, {1, p.weights()}};
  json j = {{"top", staircase_list(o.weights())},
            {"bottom", staircase_list(p.weights())}};
  return {j, detail::render_grid(rows)};
}

inline Result promote_cmd(const Item& item, const Options& o, bool diagram) {
  Tableau t = read_tableau(item, o);
  if (auto* a = std::get_if<AlternatingTableau>(&t)) {
    if (diagram) {
      auto d = promotion_diagram(*a);
      return {json(d), render_promotion_diagram(d)};
    }
    return tableau_result(promote(*a));
  }
  const auto& osc = std::get<OscillatingTableau>(t);
  if (diagram) return oscillating_promotion_diagram(osc);
  return tableau_result(promote(osc));
}

inline Result evacuate_cmd(const Item& item, const Options& o, bool diagram) {
  Tableau t = read_tableau(item, o);
  if (auto* a = std::get_if<AlternatingTableau>(&t)) {
    if (diagram) {
      auto d = a->shape().is_zero() ? decorated_evacuation_diagram(*a)
                                    : evacuation_diagram(*a);
      return {json(d), render_evacuation_diagram(d)};
    }
    return tableau_result(evacuate(*a));
  }
  const auto& osc = std::get<OscillatingTableau>(t);
  if (diagram) {
    auto d = evacuation_diagram(osc);
    return {json(d), render_evacuation_diagram(d)};
  }
  return tableau_result(evacuate(osc));
}

inline Result sundaram_cmd(const Item& item, const Options& o, bool diagram) {
  auto osc = read_as<OscillatingTableau>(item, o);
  auto s = sundaram(osc);
  json j = {{"r", osc.length()},
            {"n", osc.rank()},
            {"matching", s.matching},
            {"tableau", s.tableau}};
  std::string text = "matching " + format_matching(s.matching) +
                     "\ntableau " + format_syt(s.tableau) + "\n";
  if (diagram) {
    j["diagram"] = growth_json(s.diagram);
    text += render_growth_diagram(s.diagram);
  }
  return {j, text};
}

// Lines "keyword rest" of a multi-line text object.
inline std::map<std::string, std::string> keyword_lines(const std::string& raw) {
  std::map<std::string, std::string> out;
  for (auto line : detail::split(raw, '\n')) {
    line = detail::trim(line);
    if (line.empty()) continue;
    auto sp = line.find(' ');
    if (sp == std::string_view::npos)
      throw InputError("expected 'keyword value' in '" + std::string(line) +
                       "'");
    out[std::string(line.substr(0, sp))] =
        std::string(detail::trim(line.substr(sp + 1)));
  }
  return out;
}

inline std::string need(const std::map<std::string, std::string>& m,
                        const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw InputError("missing '" + key + "' line");
  return it->second;
}

inline std::size_t largest_entry(const PartialSYT& t) {
  auto e = t.entries();
  return e.empty() ? 0 : static_cast<std::size_t>(e.back());
}

inline std::vector<Result> sundaram_inverse_cmd(const Input& input,
                                                const Options& o) {
  if (input.items.front().value) {
    return map_items(input, [&](const Item& item) {
      const json& j = *item.value;
      std::size_t r = j.at("r").get<std::size_t>();
      auto m = PerfectMatching(r, j.at("matching")
                                      .at("pairs")
                                      .get<std::vector<std::pair<int, int>>>());
      auto t = j.at("tableau").get<PartialSYT>();
      std::optional<std::size_t> n = o.n;
      if (!n && j.contains("n")) n = j.at("n").get<std::size_t>();
      return tableau_result(sundaram_inverse(m, t, r, n));
    });
  }
  auto kv = keyword_lines(input.raw);
  auto t = parse_syt(need(kv, "tableau"));
  auto pre = parse_matching(need(kv, "matching"));
  std::size_t r = kv.count("r") ? static_cast<std::size_t>(detail::parse_int(
                                      kv.at("r"), "r"))
                                : std::max(pre.size(), largest_entry(t));
  PerfectMatching m(r, pre.pairs());
  return {tableau_result(sundaram_inverse(m, t, r, o.n))};
}

inline Result perm_cmd(const Item& item, const Options& o, bool diagram) {
  auto a = read_as<AlternatingTableau>(item, o);
  auto g = perm_growth(a);
  json j = {{"r", a.length()},
            {"n", a.rank()},
            {"permutation", g.permutation},
            {"P", g.p},
            {"Q", g.q}};
  std::string text = "permutation " + format_permutation(g.permutation) +
                     "\nP " + format_syt(g.p) + "\nQ " + format_syt(g.q) +
                     "\n";
  if (g.permutation.is_total())
    text += "one-line " + format_one_line(g.permutation) + "\n";
  if (diagram) {
    j["diagram"] = growth_json(g.diagram, a.rank());
    text += render_growth_diagram(g.diagram, a.rank());
  }
  return {j, text};
}

// Without a rank, the least one that admits the permutation and tableaux.
inline AlternatingTableau perm_inverse_any_rank(const PartialPermutation& pi,
                                                const PartialSYT& p,
                                                const PartialSYT& q,
                                                std::size_t r,
                                                std::optional<std::size_t> n) {
  if (n) return perm_growth_inverse(pi, p, q, r, *n);
  for (std::size_t k = 1;; ++k) {
    try {
      return perm_growth_inverse(pi, p, q, r, k);
    } catch (const ShapeError&) {
      if (k > 2 * r + 1) throw;
    }
  }
}

inline std::vector<Result> perm_inverse_cmd(const Input& input,
                                            const Options& o) {
  if (input.items.front().value) {
    return map_items(input, [&](const Item& item) {
      const json& j = *item.value;
      std::size_t r = j.at("r").get<std::size_t>();
      auto pi = PartialPermutation(
          r, j.at("permutation").at("map").get<std::vector<std::pair<int, int>>>());
      auto p = j.at("P").get<PartialSYT>();
      auto q = j.at("Q").get<PartialSYT>();
      std::optional<std::size_t> n = o.n;
      if (!n && j.contains("n")) n = j.at("n").get<std::size_t>();
      return tableau_result(perm_inverse_any_rank(pi, p, q, r, n));
    });
  }
  auto kv = keyword_lines(input.raw);
  auto p = parse_syt(need(kv, "P"));
  auto q = parse_syt(need(kv, "Q"));
  auto pre = parse_permutation(need(kv, "permutation"));
  std::size_t r =
      kv.count("r")
          ? static_cast<std::size_t>(detail::parse_int(kv.at("r"), "r"))
          : std::max({pre.size(), largest_entry(p), largest_entry(q)});
  PartialPermutation pi(r, pre.arcs());
  return {tableau_result(perm_inverse_any_rank(pi, p, q, r, o.n))};
}

// Chord-diagram object named by --kind or guessed from the text.
using Chord =
    std::variant<PerfectMatching, PartialPermutation, NoncrossingSetPartition>;

inline Chord read_chord(const Item& item, const Options& o) {
  std::string kind = o.kind;
  if (item.value) {
    const json& j = *item.value;
    if (j.contains("kind") || j.contains("shapes")) {
      Tableau t = read_tableau(item, o);
      if (auto* a = std::get_if<AlternatingTableau>(&t))
        return perm_growth(*a).permutation;
      return sundaram(std::get<OscillatingTableau>(t)).matching;
    }
    if (j.contains("pairs")) return j.get<PerfectMatching>();
    if (j.contains("map")) return j.get<PartialPermutation>();
    if (j.contains("blocks")) return j.get<NoncrossingSetPartition>();
    throw InputError("unrecognised JSON object");
  }
  const std::string& s = item.text;
  if (kind == "oscillating" || kind == "alternating" ||
      (kind.empty() && s.find(';') != std::string::npos)) {
    Tableau t = read_tableau(item, o);
    if (auto* a = std::get_if<AlternatingTableau>(&t))
      return perm_growth(*a).permutation;
    return sundaram(std::get<OscillatingTableau>(t)).matching;
  }
  if (kind == "matching") return parse_matching(s, o.n);
  if (kind == "permutation") return parse_permutation(s, o.n);
  if (kind == "ncpartition") return parse_blocks(s, o.n);
  if (!kind.empty()) throw InputError("unknown kind '" + kind + "'");
  if (s.find('(') != std::string::npos ||
      s.find('{') == std::string::npos)
    return parse_permutation(s);
  auto g = detail::integer_groups(detail::strip_outer_braces(s), '{', '}', ",");
  bool pairs = std::all_of(g.begin(), g.end(),
                           [](const auto& b) { return b.size() == 2; });
  if (pairs) return parse_matching(s);
  return parse_blocks(s);
}

inline Result render_cmd(const Item& item, const Options& o,
                         const std::string& what) {
  if (what == "chord") {
    Chord c = read_chord(item, o);
    std::string svg = std::visit(
        [](const auto& x) { return render_chord_svg(x); }, c);
    std::string text = std::visit(
        [](const auto& x) {
          using X = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<X, PerfectMatching>)
            return format_matching(x);
          else if constexpr (std::is_same_v<X, PartialPermutation>)
            return format_permutation(x);
          else
            return format_blocks(x);
        },
        c);
    json j = std::visit([](const auto& x) { return json(x); }, c);
    return {j, o.format == "svg" ? svg : text};
  }
  if (what == "promotion") return promote_cmd(item, o, true);
  if (what == "evacuation") return evacuate_cmd(item, o, true);
  if (what == "growth") {
    Tableau t = read_tableau(item, o);
    if (auto* a = std::get_if<AlternatingTableau>(&t)) {
      auto g = perm_growth(*a);
      return {growth_json(g.diagram, a->rank()),
              render_growth_diagram(g.diagram, a->rank())};
    }
    auto s = sundaram(std::get<OscillatingTableau>(t));
    return {growth_json(s.diagram), render_growth_diagram(s.diagram)};
  }
  throw InputError("unknown rendering '" + what + "'");
}

struct EnumerateArgs {
  std::size_t r = 0;
  bool empty = false;
  std::optional<std::size_t> max_extent;
  std::optional<std::size_t> bound;
  bool count = false;
};

inline std::vector<Result> enumerate_cmd(const Options& o,
                                         const EnumerateArgs& e) {
  std::vector<Result> out;
  std::size_t n = o.n.value_or(1);
  const std::string& kind = o.kind.empty() ? "oscillating" : o.kind;
  if (kind == "oscillating") {
    for (const auto& t : enumerate_oscillating(e.r, n, e.empty))
      out.push_back(tableau_result(t));
  } else if (kind == "alternating") {
    for (const auto& t : enumerate_alternating(e.r, n, e.empty, e.max_extent))
      out.push_back(tableau_result(t));
  } else if (kind == "matching") {
    for (const auto& m : enumerate_matchings(e.r, e.bound))
      out.push_back({json(m), format_matching(m)});
  } else if (kind == "permutation") {
    for (const auto& p : enumerate_permutations(e.r, e.bound))
      out.push_back({json(p), format_one_line(p)});
  } else if (kind == "ncpartition") {
    for (const auto& s : enumerate_ncpartitions(e.r))
      out.push_back({json(s), format_blocks(s)});
  } else {
    throw InputError("unknown kind '" + kind + "'");
  }
  if (e.count)
    return {{json(out.size()), std::to_string(out.size())}};
  return out;
}

inline std::string report_line(const TheoremReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-22s %-4s %9zu instances %6zu failures %8.3f s",
                r.id.c_str(), r.passed() ? "PASS" : "FAIL", r.instances,
                r.failures.size(), r.seconds);
  return buf;
}

inline std::string report_text(const std::vector<TheoremReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += report_line(r) + "\n";
    for (const auto& n : r.notes) out += "    note: " + n + "\n";
    for (const auto& f : r.failures) out += "    counterexample: " + f + "\n";
  }
  return out;
}

inline void write_text(const Options& o, const std::string& text,
                       std::ostream& out) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

inline int run(int argc, const char* const* argv, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Promotion, evacuation and growth diagrams for oscillating and "
               "alternating tableaux",
               "cactus"};
  app.require_subcommand(1);
  Options o;

  auto io = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(formats));
    c->add_option("--in", o.in, "Input file (default: stdin)");
    c->add_option("--out", o.out, "Output file (default: stdout)");
  };
  auto tableau_opts = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "Tableau kind")
        ->check(CLI::IsMember({"oscillating", "alternating"}));
    c->add_option("--n", o.n, "Rank (alternating input is padded to it)")
        ->check(CLI::PositiveNumber);
  };

  bool diagram = false, inverse = false, minimal = false;
  std::size_t p = 0, q = 0;
  std::optional<std::size_t> strip_m, pad_n, r_max, n_max;
  std::string what = "chord", suite = "all";
  unsigned jobs = 1;
  EnumerateArgs e;

  auto* promote_c = app.add_subcommand("promote", "Promote a tableau");
  io(promote_c, {"text", "json"});
  tableau_opts(promote_c);
  promote_c->add_flag("--diagram", diagram, "Print the promotion diagram");

  auto* evacuate_c = app.add_subcommand("evacuate", "Evacuate a tableau");
  io(evacuate_c, {"text", "json"});
  tableau_opts(evacuate_c);
  evacuate_c->add_flag("--diagram", diagram, "Print the evacuation diagram");

  auto* cactus_c =
      app.add_subcommand("cactus", "Apply the cactus generator s_{p,q}");
  io(cactus_c, {"text", "json"});
  tableau_opts(cactus_c);
  cactus_c->add_option("--p", p, "First index")->required();
  cactus_c->add_option("--q", q, "Last index")->required();

  auto* sundaram_c = app.add_subcommand(
      "sundaram", "Oscillating tableau to matching and partial tableau");
  io(sundaram_c, {"text", "json"});
  tableau_opts(sundaram_c);
  sundaram_c->add_flag("--diagram", diagram, "Include the growth diagram");
  sundaram_c->add_flag("--inverse", inverse,
                       "Matching and tableau back to the oscillating tableau");

  auto* perm_c = app.add_subcommand(
      "perm", "Alternating tableau to partial permutation and tableaux P, Q");
  io(perm_c, {"text", "json"});
  tableau_opts(perm_c);
  perm_c->add_flag("--diagram", diagram, "Include the growth diagram");
  perm_c->add_flag("--inverse", inverse,
                   "Permutation and P, Q back to the alternating tableau");

  auto* embed_c = app.add_subcommand(
      "embed", "Oscillating tableau as an alternating tableau");
  io(embed_c, {"text", "json"});
  embed_c->add_option("--n", o.n, "Rank of the alternating tableau")
      ->check(CLI::PositiveNumber);
  embed_c->add_flag("--minimal", minimal, "Print the least admissible rank");
  embed_c->add_flag("--restrict", inverse,
                    "Alternating tableau back to the oscillating tableau");

  auto* strip_c = app.add_subcommand(
      "strip", "Remove or insert zeros in every staircase");
  io(strip_c, {"text", "json"});
  auto* m_opt = strip_c->add_option("--m", strip_m, "Target rank m");
  auto* pad_opt = strip_c->add_option("--pad", pad_n, "Pad to rank n");
  m_opt->excludes(pad_opt);

  auto* render_c = app.add_subcommand("render", "Draw a diagram");
  io(render_c, {"text", "json", "svg"});
  render_c->add_option("--what", what, "What to draw")
      ->check(CLI::IsMember({"chord", "promotion", "evacuation", "growth"}));
  render_c->add_option("--kind", o.kind, "Input kind")
      ->check(CLI::IsMember({"oscillating", "alternating", "matching",
                             "permutation", "ncpartition"}));
  render_c->add_option("--n", o.n, "Rank, or ground set size for chords")
      ->check(CLI::PositiveNumber);

  auto* enumerate_c = app.add_subcommand("enumerate", "List objects");
  enumerate_c->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate_c->add_option("--out", o.out, "Output file (default: stdout)");
  enumerate_c->add_option("--kind", o.kind, "Object kind")
      ->check(CLI::IsMember({"oscillating", "alternating", "matching",
                             "permutation", "ncpartition"}));
  enumerate_c->add_option("--r", e.r, "Length or ground set size")->required();
  enumerate_c->add_option("--n", o.n, "Rank")->check(CLI::PositiveNumber);
  enumerate_c->add_flag("--empty", e.empty, "Empty shape only");
  enumerate_c->add_option("--max-extent", e.max_extent,
                          "Largest extent of a staircase");
  enumerate_c->add_option("--bound", e.bound, "Crossing or LIS bound");
  enumerate_c->add_flag("--count", e.count, "Print only the count");

  auto* verify_c = app.add_subcommand("verify", "Run theorem suites");
  verify_c->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify_c->add_option("--out", o.out, "Output file (default: stdout)");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_c->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember(suites));
  verify_c->add_option("--r-max", r_max, "Largest length");
  verify_c->add_option("--n-max", n_max, "Largest rank");
  verify_c->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* csp_c =
      app.add_subcommand("csp", "q-Catalan cyclic sieving check");
  csp_c->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  csp_c->add_option("--out", o.out, "Output file (default: stdout)");
  csp_c->add_option("--r-max", r_max, "Largest r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& h) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << "\n";
    return parse_failed;
  }

  try {
    if (*verify_c || *csp_c) {
      std::vector<TheoremReport> reports;
      if (*csp_c) {
        reports.push_back(check_csp(r_max.value_or(6)));
      } else {
        for (const auto& name : suite_names())
          if (suite == "all" || suite == name)
            reports.push_back(run_suite(name, {r_max, n_max}, jobs));
      }
      bool pass = std::all_of(reports.begin(), reports.end(),
                              [](const auto& r) { return r.passed(); });
      std::string text;
      if (o.format == "json") {
        text = json(reports).dump(2) + "\n";
      } else {
        if (*csp_c)
          for (std::size_t r = 1; r <= r_max.value_or(6); ++r) {
            text += "r=" + std::to_string(r) + " q-Catalan coefficients:";
            for (Int c : q_catalan(r)) text += " " + std::to_string(c);
            text += "\n";
          }
        text += report_text(reports);
      }
      write_text(o, text, out);
      return pass ? ok : verification_failed;
    }

    if (*enumerate_c) {
      Input none;
      none.batch = true;
      auto results = enumerate_cmd(o, e);
      if (e.count) none.batch = false;
      emit(o, none, results, out);
      return ok;
    }

    Input input = read_input(o, in);
    std::vector<Result> results;
    if (*promote_c) {
      results = map_items(input, [&](const Item& i) {
        return promote_cmd(i, o, diagram);
      });
    } else if (*evacuate_c) {
      results = map_items(input, [&](const Item& i) {
        return evacuate_cmd(i, o, diagram);
      });
    } else if (*cactus_c) {
      results = map_items(input, [&](const Item& i) {
        Tableau t = read_tableau(i, o);
        return std::visit(
            [&](const auto& x) { return tableau_result(cactus_apply(x, p, q)); },
            t);
      });
    } else if (*sundaram_c) {
      results = inverse ? sundaram_inverse_cmd(input, o)
                        : map_items(input, [&](const Item& i) {
                            return sundaram_cmd(i, o, diagram);
                          });
    } else if (*perm_c) {
      results = inverse ? perm_inverse_cmd(input, o)
                        : map_items(input, [&](const Item& i) {
                            return perm_cmd(i, o, diagram);
                          });
    } else if (*embed_c) {
      results = map_items(input, [&](const Item& i) -> Result {
        if (inverse) {
          Options alt = o;
          alt.kind = "alternating";
          alt.n.reset();
          return tableau_result(
              restrict_alt_to_osc(read_as<AlternatingTableau>(i, alt), o.n));
        }
        Options osc = o;
        osc.kind = "oscillating";
        osc.n.reset();
        auto t = read_as<OscillatingTableau>(i, osc);
        std::size_t least = minimal_embedding_rank(t);
        if (minimal) return {json(least), std::to_string(least)};
        return tableau_result(embed_osc_as_alt(t, o.n.value_or(least)));
      });
    } else if (*strip_c) {
      if (!strip_m && !pad_n) throw InputError("strip needs --m or --pad");
      Options alt = o;
      alt.kind = "alternating";
      results = map_items(input, [&](const Item& i) {
        auto a = read_as<AlternatingTableau>(i, alt);
        return tableau_result(strip_m ? strip_zeros(a, *strip_m)
                                      : pad_zeros(a, *pad_n));
      });
    } else if (*render_c) {
      if (o.format == "svg" && what != "chord")
        throw InputError("svg output is only available for chord diagrams");
      if (o.format == "svg" && input.items.size() != 1)
        throw InputError("svg output needs exactly one object");
      results = map_items(input, [&](const Item& i) {
        return render_cmd(i, o, what);
      });
    }
    emit(o, input, results, out);
    return ok;
  } catch (const InputError& x) {
    err << "error: " << x.what() << "\n";
    return parse_failed;
  } catch (const json::exception& x) {
    err << "error: " << x.what() << "\n";
    return parse_failed;
  } catch (const std::invalid_argument& x) {
    err << "error: " << x.what() << "\n";
    return parse_failed;
  } catch (const std::out_of_range& x) {
    err << "error: " << x.what() << "\n";
    return parse_failed;
  } catch (const std::exception& x) {
    err << "internal error: " << x.what() << "\n";
    return verification_failed;
  }
}

}  // namespace cactus::cli
