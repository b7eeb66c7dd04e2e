#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cactus/diagrams.hpp"
#include "cactus/growth.hpp"
#include "cactus/local_rules.hpp"
#include "cactus/shapes.hpp"
#include "cactus/tableaux.hpp"
#include "cactus/verify.hpp"

namespace cactus {

using json = nlohmann::json;

// Tableaux: {"kind": "oscillating"|"alternating", "n": int, "shapes": [...]}.

inline json tableau_json(const OscillatingTableau& o) {
  json shapes = json::array();
  for (const auto& p : o.shapes()) shapes.push_back(p.parts());
  return {{"kind", "oscillating"}, {"n", o.rank()}, {"shapes", shapes}};
}

inline json tableau_json(const AlternatingTableau& a) {
  json shapes = json::array();
  for (const auto& s : a.staircases()) shapes.push_back(s.entries());
  return {{"kind", "alternating"}, {"n", a.rank()}, {"shapes", shapes}};
}

inline void to_json(json& j, const OscillatingTableau& o) { j = tableau_json(o); }
inline void to_json(json& j, const AlternatingTableau& a) { j = tableau_json(a); }

inline void from_json(const json& j, OscillatingTableau& o) {
  if (j.value("kind", "oscillating") != "oscillating")
    throw ShapeError("expected an oscillating tableau");
  std::vector<Partition> shapes;
  for (const auto& s : j.at("shapes"))
    shapes.emplace_back(s.get<std::vector<Int>>());
  o = OscillatingTableau(std::move(shapes), j.at("n").get<std::size_t>());
}

inline void from_json(const json& j, AlternatingTableau& a) {
  if (j.value("kind", "alternating") != "alternating")
    throw ShapeError("expected an alternating tableau");
  std::vector<Staircase> s;
  for (const auto& x : j.at("shapes")) s.emplace_back(x.get<std::vector<Int>>());
  a = AlternatingTableau(std::move(s));
  if (j.contains("n") && j.at("n").get<std::size_t>() != a.rank())
    throw ShapeError("\"n\" does not match the staircase length");
}

// Chord diagrams.

inline void to_json(json& j, const PerfectMatching& m) {
  j = {{"r", m.size()}, {"pairs", m.pairs()}};
}

inline void from_json(const json& j, PerfectMatching& m) {
  m = PerfectMatching(j.at("r").get<std::size_t>(),
                      j.at("pairs").get<std::vector<std::pair<int, int>>>());
}

inline void to_json(json& j, const PartialPermutation& p) {
  j = {{"r", p.size()}, {"map", p.arcs()}};
}

inline void from_json(const json& j, PartialPermutation& p) {
  p = PartialPermutation(j.at("r").get<std::size_t>(),
                         j.at("map").get<std::vector<std::pair<int, int>>>());
}

inline void to_json(json& j, const NoncrossingSetPartition& s) {
  j = {{"r", s.size()}, {"blocks", s.blocks()}};
}

inline void from_json(const json& j, NoncrossingSetPartition& s) {
  s = NoncrossingSetPartition(
      j.at("r").get<std::size_t>(),
      j.at("blocks").get<std::vector<std::vector<int>>>());
}

inline void to_json(json& j, const PartialSYT& t) { j = t.rows(); }

inline void from_json(const json& j, PartialSYT& t) {
  t = PartialSYT(j.get<std::vector<std::vector<int>>>());
}

// Diagrams: staircases in compact text form.

inline json staircase_list(const std::vector<Staircase>& seq) {
  json out = json::array();
  for (const auto& s : seq) out.push_back(format_staircase(s));
  return out;
}

inline void to_json(json& j, const PromotionDiagram& d) {
  j = {{"top", staircase_list(d.top)},
       {"middle", staircase_list(d.middle)},
       {"bottom", staircase_list(d.bottom)}};
}

inline void to_json(json& j, const EvacuationDiagram& d) {
  json rows = json::array();
  for (const auto& r : d.rows)
    rows.push_back({{"offset", r.offset}, {"entries", staircase_list(r.entries)}});
  json marks = json::array();
  for (const auto& c : d.decorations)
    marks.push_back({{"row", c.row},
                     {"column", c.column},
                     {"mark", decoration_name(c.mark)}});
  j = {{"rows", rows}, {"decorations", marks}};
}

inline json crosses_json(const Filling& f) {
  json out = json::array();
  for (const auto& c : f.crosses) {
    json x = {{"column", c.column}, {"row", c.row}};
    if (c.mark) x["mark"] = decoration_name(*c.mark);
    out.push_back(x);
  }
  return out;
}

inline json growth_json(const GrowthDiagram<CornerLabel>& g, std::size_t n) {
  json grid = json::array();
  for (std::size_t y = 0; y <= g.rows; ++y) {
    json line = json::array();
    for (std::size_t x = 0; x <= g.columns; ++x)
      line.push_back(g.at(x, y) ? json(format_corner(*g.at(x, y), n))
                                : json(nullptr));
    grid.push_back(line);
  }
  return {{"columns", g.columns},
          {"rows", g.rows},
          {"corners", grid},
          {"crosses", crosses_json(g.filling)}};
}

inline json growth_json(const GrowthDiagram<Partition>& g) {
  json grid = json::array();
  for (std::size_t y = 0; y <= g.rows; ++y) {
    json line = json::array();
    for (std::size_t x = 0; x <= g.columns; ++x)
      line.push_back(g.at(x, y) ? json(format_partition(*g.at(x, y)))
                                : json(nullptr));
    grid.push_back(line);
  }
  return {{"columns", g.columns},
          {"rows", g.rows},
          {"corners", grid},
          {"crosses", crosses_json(g.filling)}};
}

inline void to_json(json& j, const TheoremReport& r) {
  j = {{"id", r.id},
       {"passed", r.passed()},
       {"instances", r.instances},
       {"failures", r.failures},
       {"seconds", r.seconds},
       {"notes", r.notes}};
}

}  // namespace cactus
