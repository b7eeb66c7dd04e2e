#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cactus/diagrams.hpp"

namespace cactus {

// Chord diagrams on a regular r-gon labelled counterclockwise.

struct SvgStyle {
  double size = 240.0;
  double radius = 90.0;
  double label_gap = 16.0;
  double point_radius = 3.0;
  double loop_radius = 9.0;
};

namespace detail {

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

struct Point {
  double x = 0;
  double y = 0;
};

class ChordCanvas {
 public:
  ChordCanvas(std::size_t r, SvgStyle style) : r_(r), s_(style) {}

  // Vertex 1 sits just left of the top; labels increase counterclockwise.
  Point vertex(int k, double radius) const {
    double c = s_.size / 2;
    if (r_ == 0) return {c, c};
    double angle = std::numbers::pi / 2 + std::numbers::pi / r_ +
                   2 * std::numbers::pi * (k - 1) / r_;
    return {c + radius * std::cos(angle), c - radius * std::sin(angle)};
  }
  Point vertex(int k) const { return vertex(k, s_.radius); }

  std::string frame_open() const {
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(s_.size) +
        "\" height=\"" + num(s_.size) + "\" viewBox=\"0 0 " + num(s_.size) +
        " " + num(s_.size) + "\">\n";
    out +=
        "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" "
        "refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
        "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" "
        "fill=\"black\"/></marker></defs>\n";
    out += "<circle cx=\"" + num(s_.size / 2) + "\" cy=\"" + num(s_.size / 2) +
           "\" r=\"" + num(s_.radius) +
           "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"2 3\"/>\n";
    for (std::size_t k = 1; k <= r_; ++k) {
      Point p = vertex(static_cast<int>(k));
      Point l = vertex(static_cast<int>(k), s_.radius + s_.label_gap);
      out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
             num(s_.point_radius) + "\" fill=\"black\"/>\n";
      out += "<text x=\"" + num(l.x) + "\" y=\"" + num(l.y) +
             "\" font-size=\"12\" text-anchor=\"middle\" "
             "dominant-baseline=\"central\">" +
             std::to_string(k) + "</text>\n";
    }
    return out;
  }

  std::string chord(int a, int b) const {
    Point p = vertex(a), q = vertex(b);
    return "<line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" +
           num(q.x) + "\" y2=\"" + num(q.y) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  // Arc bent to the right of its direction so that i->j and j->i separate.
  std::string arrow(int from, int to) const {
    Point p = vertex(from), q = vertex(to);
    double dx = q.x - p.x, dy = q.y - p.y;
    double len = std::hypot(dx, dy);
    double bend = 0.12 * len;
    Point m{(p.x + q.x) / 2 - dy / len * bend, (p.y + q.y) / 2 + dx / len * bend};
    return "<path d=\"M " + num(p.x) + " " + num(p.y) + " Q " + num(m.x) +
           " " + num(m.y) + " " + num(q.x) + " " + num(q.y) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
           "marker-end=\"url(#head)\"/>\n";
  }

  std::string loop(int k) const {
    Point c = vertex(k, s_.radius + s_.loop_radius);
    return "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" +
           num(s_.loop_radius) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  std::string polygon(const std::vector<int>& block) const {
    std::string pts;
    for (int k : block) {
      Point p = vertex(k);
      if (!pts.empty()) pts += ' ';
      pts += num(p.x) + "," + num(p.y);
    }
    return "<polygon points=\"" + pts +
           "\" fill=\"#dddddd\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

 private:
  std::size_t r_;
  SvgStyle s_;
};

}  // namespace detail

inline std::string render_chord_svg(const PerfectMatching& m,
                                    SvgStyle style = {}) {
  detail::ChordCanvas canvas(m.size(), style);
  std::string out = canvas.frame_open();
  for (auto [a, b] : m.pairs()) out += canvas.chord(a, b);
  return out + "</svg>\n";
}

inline std::string render_chord_svg(const PartialPermutation& p,
                                    SvgStyle style = {}) {
  detail::ChordCanvas canvas(p.size(), style);
  std::string out = canvas.frame_open();
  for (auto [i, j] : p.arcs())
    out += i == j ? canvas.loop(i) : canvas.arrow(i, j);
  return out + "</svg>\n";
}

inline std::string render_chord_svg(const NoncrossingSetPartition& s,
                                    SvgStyle style = {}) {
  detail::ChordCanvas canvas(s.size(), style);
  std::string out = canvas.frame_open();
  for (const auto& b : s.blocks()) {
    if (b.size() == 2) out += canvas.chord(b[0], b[1]);
    if (b.size() > 2) out += canvas.polygon(b);
  }
  return out + "</svg>\n";
}

}  // namespace cactus
