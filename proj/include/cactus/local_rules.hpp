#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cactus/diagrams.hpp"
#include "cactus/shapes.hpp"
#include "cactus/tableaux.hpp"

namespace cactus {

// kappa + nu - lambda, entrywise.
inline std::vector<Int> shifted(const Staircase& kappa, const Staircase& nu,
                                const Staircase& lambda) {
  if (kappa.rank() != nu.rank() || kappa.rank() != lambda.rank())
    throw ShapeError("local rule arguments have different ranks");
  std::vector<Int> v(kappa.rank());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = kappa[i] + nu[i] - lambda[i];
  return v;
}

// mu = dom_W(kappa + nu - lambda)
inline Staircase local_rule(const Staircase& kappa, const Staircase& lambda,
                            const Staircase& nu, WeylKind w) {
  if (kappa.rank() != w.rank)
    throw ShapeError("local rule arguments do not match the Weyl rank");
  return dominant(shifted(kappa, nu, lambda), w);
}

namespace detail {

// Row below `upper` in a promotion diagram whose first entry sits under
// upper[first-1] and equals `start`: out[j] = dom(out[j-1] + upper[first+j]
// - upper[first+j-1]) until `count` entries exist.
inline std::vector<Staircase> grow_row(const std::vector<Staircase>& upper,
                                       std::size_t first, Staircase start,
                                       std::size_t count, WeylKind w) {
  std::vector<Staircase> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(std::move(start));
  for (std::size_t j = 1; j < count; ++j)
    out.push_back(local_rule(out.back(), upper[first + j - 1],
                             upper[first + j], w));
  return out;
}

// Moves the first letter of a weight sequence to the end.
inline std::vector<Staircase> slide_first_letter(
    const std::vector<Staircase>& seq, WeylKind w) {
  std::size_t len = seq.size() - 1;
  if (len == 0) return seq;
  auto out = grow_row(seq, 1, Staircase::zero(w.rank), len, w);
  out.push_back(seq.back());
  return out;
}

// Half-promotion entries 1..2L-1 of the sequence t[0..2L] (L >= 1).
inline std::vector<Staircase> middle_row(const std::vector<Staircase>& t,
                                         WeylKind w) {
  return grow_row(t, 2, t[1], t.size() - 2, w);
}

// Promotion entries 0..2L-2 computed from the middle row h[1..2L-1].
inline std::vector<Staircase> bottom_row(const std::vector<Staircase>& h,
                                         WeylKind w) {
  // h holds h[1..2L-1], so h[i] lives at index i-1.
  return grow_row(h, 0, Staircase::zero(w.rank), h.size(), w);
}

template <class T, class F>
T checked(F&& build, const char* what) {
  try {
    return build();
  } catch (const ShapeError& e) {
    throw std::logic_error(std::string(what) +
                           " produced an invalid tableau: " + e.what());
  }
}

}  // namespace detail

// Promotion.

inline OscillatingTableau promote(const OscillatingTableau& o) {
  WeylKind w = WeylKind::hyperoctahedral(o.rank());
  auto seq = detail::slide_first_letter(o.weights(), w);
  return detail::checked<OscillatingTableau>(
      [&] { return OscillatingTableau::from_weights(seq, o.rank()); },
      "promotion");
}

struct PromotionDiagram {
  std::vector<Staircase> top;     // a[0..2r]
  std::vector<Staircase> middle;  // half-promotion, h[0..2r]
  std::vector<Staircase> bottom;  // promotion, w[0..2r]
};

inline PromotionDiagram promotion_diagram(const AlternatingTableau& a) {
  WeylKind w = WeylKind::symmetric(a.rank());
  const auto& top = a.staircases();
  PromotionDiagram d{top, top, top};
  if (a.length() == 0) return d;
  auto h = detail::middle_row(top, w);
  auto b = detail::bottom_row(h, w);
  d.middle.clear();
  d.middle.push_back(Staircase::zero(a.rank()));
  d.middle.insert(d.middle.end(), h.begin(), h.end());
  d.middle.push_back(top.back());
  d.bottom = std::move(b);
  d.bottom.push_back(h.back());
  d.bottom.push_back(top.back());
  return d;
}

inline StaircaseTableau half_promote(const AlternatingTableau& a) {
  return StaircaseTableau(promotion_diagram(a).middle);
}

inline AlternatingTableau promote(const AlternatingTableau& a) {
  auto d = promotion_diagram(a);
  return detail::checked<AlternatingTableau>(
      [&] { return AlternatingTableau(d.bottom); }, "promotion");
}

// Second computation of promotion for empty shape: the first letter e_1 and
// then the letter -e_l are moved to the end one at a time.
inline AlternatingTableau promote_empty_shape_variant(
    const AlternatingTableau& a) {
  if (!a.shape().is_zero())
    throw TableauError("the two-pass promotion needs an empty shape");
  WeylKind w = WeylKind::symmetric(a.rank());
  auto once = detail::slide_first_letter(a.staircases(), w);
  auto twice = detail::slide_first_letter(once, w);
  return detail::checked<AlternatingTableau>(
      [&] { return AlternatingTableau(twice); }, "two-pass promotion");
}

// Evacuation diagrams. Row 0 is the tableau; every promotion step, without
// its appended entries, adds one row (oscillating) or two rows
// (alternating). Entry k of a row sits in column offset + k.

struct DiagramRow {
  std::size_t offset = 0;
  std::vector<Staircase> entries;
};

// Cell (row, column) is 1-based and has top-left corner (row-1, column-1).
struct DecoratedCell {
  std::size_t row = 0;
  std::size_t column = 0;
  Decoration mark = Decoration::times;
  friend bool operator==(const DecoratedCell&, const DecoratedCell&) = default;
  friend auto operator<=>(const DecoratedCell&, const DecoratedCell&) = default;
};

struct EvacuationDiagram {
  std::vector<DiagramRow> rows;
  std::vector<DecoratedCell> decorations;

  const Staircase* at(std::size_t row, std::size_t column) const {
    if (row >= rows.size()) return nullptr;
    const auto& r = rows[row];
    if (column < r.offset || column >= r.offset + r.entries.size())
      return nullptr;
    return &r.entries[column - r.offset];
  }

  std::size_t width() const {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.offset + r.entries.size());
    return w;
  }

  // Rightmost entries read from the bottom row up.
  std::vector<Staircase> right_column_upwards() const {
    std::vector<Staircase> out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
      out.push_back(it->entries.back());
    return out;
  }
};

inline EvacuationDiagram evacuation_diagram(const OscillatingTableau& o) {
  WeylKind w = WeylKind::hyperoctahedral(o.rank());
  EvacuationDiagram d;
  auto t = o.weights();
  d.rows.push_back({0, t});
  for (std::size_t k = 1; t.size() > 1; ++k) {
    t = detail::grow_row(t, 1, Staircase::zero(o.rank()), t.size() - 1, w);
    d.rows.push_back({k, t});
  }
  return d;
}

inline EvacuationDiagram evacuation_diagram(const AlternatingTableau& a) {
  WeylKind w = WeylKind::symmetric(a.rank());
  EvacuationDiagram d;
  auto t = a.staircases();
  d.rows.push_back({0, t});
  for (std::size_t k = 0; t.size() > 1; ++k) {
    auto h = detail::middle_row(t, w);
    auto b = detail::bottom_row(h, w);
    d.rows.push_back({2 * k + 2, h});
    d.rows.push_back({2 * k + 2, b});
    t = std::move(b);
  }
  return d;
}

inline OscillatingTableau evacuate(const OscillatingTableau& o) {
  auto seq = evacuation_diagram(o).right_column_upwards();
  return detail::checked<OscillatingTableau>(
      [&] { return OscillatingTableau::from_weights(seq, o.rank()); },
      "evacuation");
}

inline AlternatingTableau evacuate(const AlternatingTableau& a) {
  auto seq = evacuation_diagram(a).right_column_upwards();
  return detail::checked<AlternatingTableau>(
      [&] { return AlternatingTableau(seq); }, "evacuation");
}

// Cactus group action.

namespace detail {

inline OscillatingTableau with_prefix(const OscillatingTableau& t,
                                      const OscillatingTableau& p) {
  std::vector<Partition> shapes = p.shapes();
  shapes.insert(shapes.end(), t.shapes().begin() + p.shapes().size(),
                t.shapes().end());
  return OscillatingTableau(std::move(shapes), t.rank());
}

inline AlternatingTableau with_prefix(const AlternatingTableau& t,
                                      const AlternatingTableau& p) {
  std::vector<Staircase> s = p.staircases();
  s.insert(s.end(), t.staircases().begin() + p.staircases().size(),
           t.staircases().end());
  return AlternatingTableau(std::move(s));
}

// s_{1,k}: evacuate the first k letters and keep the rest. Evacuation
// preserves weight, so the later cumulative weights are unchanged.
template <class T>
T evacuate_prefix(const T& t, std::size_t k) {
  if (k <= 1) return t;
  return with_prefix(t, evacuate(t.prefix(k)));
}

}  // namespace detail

template <class T>
T cactus_apply(const T& t, std::size_t p, std::size_t q) {
  if (p < 1 || p > q || q > t.length())
    throw std::out_of_range("cactus generator s_{" + std::to_string(p) + "," +
                            std::to_string(q) + "} needs 1 <= p <= q <= " +
                            std::to_string(t.length()));
  if (p == q) return t;
  T u = detail::evacuate_prefix(t, q);
  u = detail::evacuate_prefix(u, q - p + 1);
  return detail::evacuate_prefix(u, q);
}

// Decorations of an evacuation diagram of an alternating tableau.

namespace detail {

inline Partition with_first_column_cell(const Partition& p) {
  std::vector<Int> v = p.parts();
  v.push_back(1);
  return Partition(std::move(v));
}

inline std::optional<Decoration> match_cell(const Staircase& tl,
                                            const Staircase& tr,
                                            const Staircase* bl,
                                            const Staircase& br) {
  std::vector<Decoration> found;
  auto [tl_pos, tl_neg] = split_staircase(tl);
  auto [tr_pos, tr_neg] = split_staircase(tr);
  auto [br_pos, br_neg] = split_staircase(br);
  if (bl && *bl == tr) {
    // minus: [a,s] [a,t] / [a,t] [b,t]
    if (tl_pos == tr_pos && br_neg == tr_neg &&
        tl_neg == with_first_column_cell(tr_neg) &&
        br_pos == with_first_column_cell(tr_pos))
      found.push_back(Decoration::minus);
    // plus: [b,t] [a,t] / [a,t] [a,s]
    if (tl_neg == tr_neg && br_pos == tr_pos &&
        tl_pos == with_first_column_cell(tr_pos) &&
        br_neg == with_first_column_cell(tr_neg))
      found.push_back(Decoration::plus);
  }
  // times: [1,0] [0,0] / (none) [1,0]
  const Partition one{1};
  if (!bl && tl_pos == one && tl_neg.empty() && tr.is_zero() &&
      br_pos == one && br_neg.empty())
    found.push_back(Decoration::times);
  if (found.size() > 1)
    throw std::logic_error("evacuation diagram cell matches two patterns");
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace detail

inline std::vector<DecoratedCell> decorate_evacuation_diagram(
    EvacuationDiagram& d) {
  d.decorations.clear();
  std::size_t width = d.width();
  for (std::size_t row = 0; row + 1 < d.rows.size(); ++row)
    for (std::size_t col = 0; col + 1 < width; ++col) {
      const Staircase* tl = d.at(row, col);
      const Staircase* tr = d.at(row, col + 1);
      const Staircase* bl = d.at(row + 1, col);
      const Staircase* br = d.at(row + 1, col + 1);
      if (!tl || !tr || !br) continue;
      if (auto m = detail::match_cell(*tl, *tr, bl, *br))
        d.decorations.push_back({row + 1, col + 1, *m});
    }
  return d.decorations;
}

inline EvacuationDiagram decorated_evacuation_diagram(
    const AlternatingTableau& a) {
  if (!a.shape().is_zero())
    throw TableauError("decorations are defined for empty shape");
  auto d = evacuation_diagram(a);
  decorate_evacuation_diagram(d);
  return d;
}

// Reads the filling back from the marks: minus at (2j-1, 2i-1), plus at
// (2i, 2j), times at (2j-1, 2i) for a cross in column i and row j.
inline PartialPermutation permutation_from_decorations(
    const EvacuationDiagram& d, std::size_t r) {
  PartialPermutation p(r);
  for (const auto& c : d.decorations) {
    std::size_t column = 0, row = 0;
    switch (c.mark) {
      case Decoration::minus:
        if (c.row % 2 == 0 || c.column % 2 == 0)
          throw std::logic_error("minus mark off its parity class");
        row = (c.row + 1) / 2;
        column = (c.column + 1) / 2;
        break;
      case Decoration::plus:
        if (c.row % 2 == 1 || c.column % 2 == 1)
          throw std::logic_error("plus mark off its parity class");
        column = c.row / 2;
        row = c.column / 2;
        break;
      case Decoration::times:
        if (c.row % 2 == 0 || c.column % 2 == 1)
          throw std::logic_error("times mark off its parity class");
        row = (c.row + 1) / 2;
        column = c.column / 2;
        break;
    }
    p.set(static_cast<int>(column), static_cast<int>(row));
  }
  return p;
}

// Text renderings with entries aligned in columns.

namespace detail {

inline std::string render_grid(
    const std::vector<std::pair<std::size_t, std::vector<Staircase>>>& rows) {
  std::size_t cell = 1, width = 0;
  for (const auto& [offset, entries] : rows) {
    width = std::max(width, offset + entries.size());
    for (const auto& s : entries)
      cell = std::max(cell, format_staircase(s).size());
  }
  std::ostringstream out;
  for (const auto& [offset, entries] : rows) {
    std::string line;
    for (std::size_t c = 0; c < offset + entries.size(); ++c) {
      std::string text = c < offset ? "" : format_staircase(entries[c - offset]);
      if (c) line += "  ";
      line += std::string(cell - text.size(), ' ') + text;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace detail

// The middle row shows h[1..2r-1] under a[2..2r]; the bottom row shows
// w[0..2r] starting under h[1].
inline std::string render_promotion_diagram(const PromotionDiagram& d) {
  std::size_t len = d.top.size() - 1;
  std::vector<std::pair<std::size_t, std::vector<Staircase>>> rows;
  rows.emplace_back(0, d.top);
  if (len > 0) {
    rows.emplace_back(2, std::vector<Staircase>(d.middle.begin() + 1,
                                                d.middle.end() - 1));
    rows.emplace_back(2, d.bottom);
  }
  return detail::render_grid(rows);
}

inline std::string render_evacuation_diagram(const EvacuationDiagram& d) {
  std::vector<std::pair<std::size_t, std::vector<Staircase>>> rows;
  for (const auto& r : d.rows) rows.emplace_back(r.offset, r.entries);
  std::string out = detail::render_grid(rows);
  for (const auto& c : d.decorations)
    out += std::string(decoration_name(c.mark)) + " at row " +
           std::to_string(c.row) + ", column " + std::to_string(c.column) +
           "\n";
  return out;
}

}  // namespace cactus
