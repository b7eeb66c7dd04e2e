#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cactus/diagrams.hpp"
#include "cactus/shapes.hpp"
#include "cactus/tableaux.hpp"

namespace cactus {

// Cell rules. French orientation: lambda bottom-left, kappa top-left, nu
// bottom-right, mu top-right.

namespace detail {

inline std::vector<Int> conj_padded(const Partition& p, std::size_t len) {
  return conjugate(p).padded(len);
}

inline std::size_t conj_len(std::initializer_list<const Partition*> ps) {
  std::size_t len = 1;
  for (const Partition* p : ps)
    len = std::max(len, static_cast<std::size_t>(p->empty() ? 0 : (*p)[0]));
  return len;
}

inline Partition with_first_row_cell(const Partition& p, int delta) {
  std::vector<Int> v = p.padded(std::max<std::size_t>(p.length(), 1));
  v[0] += delta;
  return Partition(std::move(v));
}

}  // namespace detail

inline Partition forward_cell(const Partition& lambda, const Partition& kappa,
                              const Partition& nu, bool has_cross) {
  auto grows = [&](const Partition& p) {
    return p == lambda || added_cell_row(lambda, p) >= 0;
  };
  if (!grows(kappa) || !grows(nu))
    throw ShapeError("forward rule needs kappa and nu to contain lambda");
  if (has_cross) {
    if (kappa != lambda || nu != lambda)
      throw ShapeError("a cross needs kappa = lambda = nu");
    return detail::with_first_row_cell(lambda, 1);
  }
  std::size_t len = detail::conj_len({&lambda, &kappa, &nu});
  auto k = detail::conj_padded(kappa, len);
  auto n = detail::conj_padded(nu, len);
  auto l = detail::conj_padded(lambda, len);
  std::vector<Int> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = k[i] + n[i] - l[i];
  return conjugate(
      Partition(dominant(v, WeylKind::symmetric(len)).entries()));
}

struct BackwardCell {
  Partition lambda;
  bool has_cross = false;
  friend bool operator==(const BackwardCell&, const BackwardCell&) = default;
};

inline BackwardCell backward_cell(const Partition& kappa, const Partition& mu,
                                  const Partition& nu) {
  auto shrinks = [&](const Partition& p) {
    return p == mu || added_cell_row(p, mu) >= 0;
  };
  if (!shrinks(kappa) || !shrinks(nu))
    throw ShapeError("backward rule needs kappa and nu inside mu");
  std::size_t len = detail::conj_len({&kappa, &mu, &nu});
  auto k = detail::conj_padded(kappa, len);
  auto n = detail::conj_padded(nu, len);
  auto m = detail::conj_padded(mu, len);
  std::vector<Int> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = k[i] + n[i] - m[i];
  if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; }))
    return {detail::with_first_row_cell(mu, -1), true};
  return {conjugate(Partition(dominant(v, WeylKind::symmetric(len)).entries())),
          false};
}

// Partial standard Young tableaux.

class PartialSYT {
 public:
  PartialSYT() = default;

  explicit PartialSYT(std::vector<std::vector<int>> rows)
      : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    std::vector<int> seen;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].empty() ||
          (i > 0 && rows_[i].size() > rows_[i - 1].size()))
        throw ShapeError("tableau rows must have weakly decreasing lengths");
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        int x = rows_[i][j];
        if (x < 1) throw ShapeError("tableau entries must be positive");
        if (j > 0 && rows_[i][j - 1] >= x)
          throw ShapeError("tableau rows must strictly increase");
        if (i > 0 && rows_[i - 1][j] >= x)
          throw ShapeError("tableau columns must strictly increase");
        seen.push_back(x);
      }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw ShapeError("tableau entries must be distinct");
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  Partition shape() const {
    std::vector<Int> v;
    for (const auto& r : rows_) v.push_back(static_cast<Int>(r.size()));
    return Partition(std::move(v));
  }

  std::vector<int> entries() const {
    std::vector<int> out;
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t size() const { return entries().size(); }

  friend bool operator==(const PartialSYT&, const PartialSYT&) = default;
  friend auto operator<=>(const PartialSYT&, const PartialSYT&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Step k (chain[k-1] -> chain[k]) that adds a cell places labels[k-1] there.
inline PartialSYT syt_from_chain(const std::vector<Partition>& chain,
                                 const std::vector<int>& labels) {
  if (chain.empty()) throw ShapeError("empty chain");
  if (labels.size() + 1 != chain.size())
    throw ShapeError("one label per chain step is needed");
  if (!chain.front().empty())
    throw ShapeError("chain must start at the empty shape");
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (chain[k] == chain[k - 1]) continue;
    int row = added_cell_row(chain[k - 1], chain[k]);
    if (row < 0)
      throw ShapeError("chain step " + std::to_string(k) +
                       " does not add a single cell");
    if (rows.size() <= static_cast<std::size_t>(row)) rows.resize(row + 1);
    rows[row].push_back(labels[k - 1]);
  }
  return PartialSYT(std::move(rows));
}

inline PartialSYT syt_from_chain(const std::vector<Partition>& chain) {
  std::vector<int> labels;
  for (std::size_t k = 1; k < chain.size(); ++k)
    labels.push_back(static_cast<int>(k));
  return syt_from_chain(chain, labels);
}

// chain[x] = shape formed by the entries <= x, for x = 0..r.
inline std::vector<Partition> chain_from_syt(const PartialSYT& t,
                                             std::size_t r) {
  std::vector<Partition> chain;
  for (std::size_t x = 0; x <= r; ++x) {
    std::vector<Int> v;
    for (const auto& row : t.rows()) {
      Int c = static_cast<Int>(std::count_if(
          row.begin(), row.end(), [&](int e) { return e <= (int)x; }));
      if (c == 0) break;
      v.push_back(c);
    }
    chain.emplace_back(std::move(v));
  }
  auto entries = t.entries();
  if (!entries.empty() && static_cast<std::size_t>(entries.back()) > r)
    throw ShapeError("tableau entry exceeds " + std::to_string(r));
  return chain;
}

inline std::string format_syt(const PartialSYT& t) {
  if (t.rows().empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(t.rows()[i][j]);
    }
    out += '}';
  }
  return out;
}

// "{5,7},{8}"; "{}" is the empty tableau.
inline PartialSYT parse_syt(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s == "{}") return PartialSYT();
  auto g = detail::integer_groups(s, '{', '}', ",");
  return PartialSYT(std::move(g));
}

// Growth diagrams. Corner (x, y) is x columns from the left and y rows from
// the top; cell (c, r) is 1-based with corners (c-1..c, r-1..r).

struct Cross {
  int column = 0;
  int row = 0;
  std::optional<Decoration> mark;
  friend bool operator==(const Cross&, const Cross&) = default;
};

struct Filling {
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::vector<Cross> crosses;

  void add(Cross c) {
    for (const auto& x : crosses)
      if (x.column == c.column || x.row == c.row)
        throw ShapeError("two crosses share a row or a column");
    crosses.push_back(c);
  }

  bool has(int column, int row) const {
    return std::any_of(crosses.begin(), crosses.end(), [&](const Cross& x) {
      return x.column == column && x.row == row;
    });
  }
};

template <class Label>
struct GrowthDiagram {
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::vector<std::optional<Label>> corners;
  Filling filling;

  GrowthDiagram() = default;
  GrowthDiagram(std::size_t c, std::size_t r)
      : columns(c), rows(r), corners((c + 1) * (r + 1)), filling{c, r, {}} {}

  const std::optional<Label>& at(std::size_t x, std::size_t y) const {
    return corners.at(y * (columns + 1) + x);
  }
  const Label& get(std::size_t x, std::size_t y) const {
    const auto& l = at(x, y);
    if (!l) throw std::logic_error("growth diagram corner is unset");
    return *l;
  }
  void set(std::size_t x, std::size_t y, Label l) {
    corners.at(y * (columns + 1) + x) = std::move(l);
  }
};

// Label of an alternating growth diagram corner.
struct CornerLabel {
  Partition positive;
  Partition negative;
  friend bool operator==(const CornerLabel&, const CornerLabel&) = default;
};

// Rank-n staircase when it fits, otherwise the shortest staircase.
inline std::string format_corner(const CornerLabel& l, std::size_t n) {
  std::size_t len = std::max<std::size_t>(
      1, l.positive.length() + l.negative.length());
  return format_staircase(
      assemble_staircase(l.positive, l.negative, std::max(n, len)));
}

// Sundaram's bijection.

struct SundaramResult {
  PerfectMatching matching;
  PartialSYT tableau;
  GrowthDiagram<Partition> diagram;
};

inline SundaramResult sundaram(const OscillatingTableau& o) {
  std::size_t r = o.length();
  GrowthDiagram<Partition> g(r, r);
  for (std::size_t k = 0; k <= r; ++k) g.set(k, k, o[k]);
  for (std::size_t k = 0; k < r; ++k)
    g.set(k, k + 1, o[k].size() < o[k + 1].size() ? o[k] : o[k + 1]);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t e = 1; e < r; ++e)
    for (std::size_t c = 1; c + e <= r; ++c) {
      std::size_t row = c + e;
      auto b = backward_cell(g.get(c - 1, row - 1), g.get(c, row - 1),
                             g.get(c, row));
      g.set(c - 1, row, b.lambda);
      if (b.has_cross) {
        g.filling.add({static_cast<int>(c), static_cast<int>(row), {}});
        pairs.emplace_back(static_cast<int>(c), static_cast<int>(row));
      }
    }
  std::vector<Partition> bottom;
  for (std::size_t x = 0; x <= r; ++x) bottom.push_back(g.get(x, r));
  SundaramResult res{PerfectMatching(r, pairs), syt_from_chain(bottom),
                     std::move(g)};
  if (res.matching.unmatched() != res.tableau.entries())
    throw std::logic_error("tableau entries are not the unmatched points");
  return res;
}

// n defaults to the least rank that holds every shape.
inline OscillatingTableau sundaram_inverse(
    const PerfectMatching& m, const PartialSYT& tab, std::size_t r,
    std::optional<std::size_t> n = std::nullopt) {
  if (m.size() != r) throw ShapeError("matching ground set is not {1..r}");
  if (m.unmatched() != tab.entries())
    throw ShapeError("matched points and tableau entries must partition "
                     "{1.." + std::to_string(r) + "}");
  GrowthDiagram<Partition> g(r, r);
  auto chain = chain_from_syt(tab, r);
  for (std::size_t x = 0; x <= r; ++x) g.set(x, r, chain[x]);
  for (std::size_t y = 0; y <= r; ++y) g.set(0, y, Partition());
  for (std::size_t row = r; row >= 2; --row)
    for (std::size_t c = 1; c < row; ++c) {
      bool cross = m.partner(static_cast<int>(c)) == static_cast<int>(row);
      g.set(c, row - 1,
            forward_cell(g.get(c - 1, row), g.get(c - 1, row - 1),
                         g.get(c, row), cross));
    }
  std::vector<Partition> shapes;
  std::size_t parts = 1;
  for (std::size_t k = 0; k <= r; ++k) {
    shapes.push_back(g.get(k, k));
    parts = std::max(parts, shapes.back().length());
  }
  for (std::size_t k = 0; k < r; ++k) {
    const auto& a = shapes[k];
    const auto& b = shapes[k + 1];
    if (g.get(k, k + 1) != (a.size() < b.size() ? a : b))
      throw ShapeError("matching and tableau are incompatible");
  }
  return OscillatingTableau(std::move(shapes), n.value_or(parts));
}

// The bijection for alternating tableaux.

struct PermGrowthResult {
  PartialPermutation permutation;
  PartialSYT p;  // right border, negative parts: entries = rows without cross
  PartialSYT q;  // bottom border, positive parts: entries = columns without
  GrowthDiagram<CornerLabel> diagram;
};

namespace detail {

// Positive parts below-left of the path by backward rules, then above-right
// by forward rules; negative parts the same way rotated by 180 degrees.
inline GrowthDiagram<CornerLabel> grow_alternating(
    std::size_t r, GrowthDiagram<Partition>& pos,
    GrowthDiagram<Partition>& neg, Filling& filling) {
  auto cross_at = [&](std::size_t c, std::size_t row) {
    return filling.has(static_cast<int>(c), static_cast<int>(row));
  };
  // positive parts above the path
  for (std::size_t e = 1; e < r; ++e)
    for (std::size_t row = 1; row + e <= r; ++row) {
      std::size_t c = row + e;
      pos.set(c, row - 1,
              forward_cell(pos.get(c - 1, row), pos.get(c - 1, row - 1),
                           pos.get(c, row), cross_at(c, row)));
    }
  // negative parts below the path
  for (std::size_t e = 0; e < r; ++e)
    for (std::size_t c = 1; c + e <= r; ++c) {
      std::size_t row = c + e;
      neg.set(c - 1, row,
              forward_cell(neg.get(c, row - 1), neg.get(c - 1, row - 1),
                           neg.get(c, row), cross_at(c, row)));
    }
  GrowthDiagram<CornerLabel> g(r, r);
  g.filling = filling;
  for (std::size_t y = 0; y <= r; ++y)
    for (std::size_t x = 0; x <= r; ++x)
      g.set(x, y, CornerLabel{pos.get(x, y), neg.get(x, y)});
  return g;
}

}  // namespace detail

inline PermGrowthResult perm_growth(const AlternatingTableau& a) {
  std::size_t r = a.length();
  GrowthDiagram<Partition> pos(r, r), neg(r, r);
  for (std::size_t k = 0; k <= r; ++k) {
    pos.set(k, k, a[2 * k].positive_part());
    neg.set(k, k, a[2 * k].negative_part());
    if (k < r) {
      pos.set(k + 1, k, a[2 * k + 1].positive_part());
      neg.set(k + 1, k, a[2 * k + 1].negative_part());
    }
  }
  Filling filling{r, r, {}};
  // positive parts below the path, diagonal cells included
  for (std::size_t e = 0; e < r; ++e)
    for (std::size_t c = 1; c + e <= r; ++c) {
      std::size_t row = c + e;
      auto b = backward_cell(pos.get(c - 1, row - 1), pos.get(c, row - 1),
                             pos.get(c, row));
      pos.set(c - 1, row, b.lambda);
      if (b.has_cross)
        filling.add({static_cast<int>(c), static_cast<int>(row),
                     e == 0 ? Decoration::times : Decoration::plus});
    }
  // negative parts above the path
  for (std::size_t e = 1; e < r; ++e)
    for (std::size_t row = 1; row + e <= r; ++row) {
      std::size_t c = row + e;
      auto b = backward_cell(neg.get(c - 1, row - 1), neg.get(c - 1, row),
                             neg.get(c, row));
      neg.set(c, row - 1, b.lambda);
      if (b.has_cross)
        filling.add({static_cast<int>(c), static_cast<int>(row),
                     Decoration::minus});
    }
  auto g = detail::grow_alternating(r, pos, neg, filling);

  PartialPermutation pi(r);
  for (const auto& x : filling.crosses) pi.set(x.column, x.row);
  std::vector<Partition> bottom, right;
  for (std::size_t i = 0; i <= r; ++i) {
    bottom.push_back(g.get(i, r).positive);
    right.push_back(g.get(r, i).negative);
  }
  PermGrowthResult res{pi, syt_from_chain(right), syt_from_chain(bottom),
                       std::move(g)};
  auto complement = [&](std::vector<int> used) {
    std::vector<int> out;
    for (std::size_t i = 1; i <= r; ++i)
      if (std::find(used.begin(), used.end(), (int)i) == used.end())
        out.push_back(static_cast<int>(i));
    return out;
  };
  if (res.q.entries() != complement(pi.domain()) ||
      res.p.entries() != complement(pi.range()))
    throw std::logic_error("border tableaux do not complement the filling");
  return res;
}

inline AlternatingTableau perm_growth_inverse(const PartialPermutation& pi,
                                              const PartialSYT& p,
                                              const PartialSYT& q,
                                              std::size_t r, std::size_t n) {
  if (pi.size() != r) throw ShapeError("permutation size is not r");
  std::vector<bool> col(r + 1, false), row(r + 1, false);
  for (auto [i, j] : pi.arcs()) col[i] = row[j] = true;
  for (int e : q.entries())
    if (e < 1 || static_cast<std::size_t>(e) > r || col[e])
      throw ShapeError("Q entries must be the columns without a cross");
    else
      col[e] = true;
  for (int e : p.entries())
    if (e < 1 || static_cast<std::size_t>(e) > r || row[e])
      throw ShapeError("P entries must be the rows without a cross");
    else
      row[e] = true;
  for (std::size_t i = 1; i <= r; ++i)
    if (!col[i] || !row[i])
      throw ShapeError("P and Q do not complement the permutation");

  GrowthDiagram<Partition> pos(r, r), neg(r, r);
  Filling filling{r, r, {}};
  for (auto [i, j] : pi.arcs())
    filling.add({i, j,
                 i == j  ? Decoration::times
                 : i < j ? Decoration::plus
                         : Decoration::minus});
  auto qchain = chain_from_syt(q, r);
  auto pchain = chain_from_syt(p, r);
  for (std::size_t i = 0; i <= r; ++i) {
    pos.set(0, i, Partition());
    pos.set(i, r, qchain[i]);
    neg.set(i, 0, Partition());
    neg.set(r, i, pchain[i]);
  }
  for (std::size_t y = r; y >= 1; --y)
    for (std::size_t c = 1; c <= r; ++c)
      pos.set(c, y - 1,
              forward_cell(pos.get(c - 1, y), pos.get(c - 1, y - 1),
                           pos.get(c, y), filling.has((int)c, (int)y)));
  for (std::size_t y = 1; y <= r; ++y)
    for (std::size_t c = r; c >= 1; --c)
      neg.set(c - 1, y,
              forward_cell(neg.get(c, y - 1), neg.get(c - 1, y - 1),
                           neg.get(c, y), filling.has((int)c, (int)y)));
  std::vector<Staircase> s;
  try {
    for (std::size_t k = 0; k <= r; ++k) {
      s.push_back(assemble_staircase(pos.get(k, k), neg.get(k, k), n));
      if (k < r)
        s.push_back(
            assemble_staircase(pos.get(k + 1, k), neg.get(k + 1, k), n));
    }
    return AlternatingTableau(std::move(s));
  } catch (const ShapeError& e) {
    throw ShapeError(std::string("permutation and tableaux are incompatible: ") +
                     e.what());
  }
}

inline PartialPermutation full_perm_from_alt(const AlternatingTableau& a) {
  if (!a.shape().is_zero())
    throw TableauError("a full permutation needs an empty shape");
  auto res = perm_growth(a);
  if (!res.permutation.is_total())
    throw std::logic_error("empty shape gave a partial permutation");
  return res.permutation;
}

// Plain text picture of a growth diagram: corner labels on even lines, cell
// contents (X plain cross, + - x decorated) on odd lines.
template <class Label, class Format>
std::string render_growth_diagram(const GrowthDiagram<Label>& g,
                                  Format format) {
  std::size_t cell = 1;
  for (const auto& c : g.corners)
    if (c) cell = std::max(cell, format(*c).size());
  std::ostringstream out;
  for (std::size_t y = 0; y <= g.rows; ++y) {
    std::string line;
    for (std::size_t x = 0; x <= g.columns; ++x) {
      std::string t = g.at(x, y) ? format(*g.at(x, y)) : ".";
      if (x) line += "  ";
      line += std::string(cell - t.size(), ' ') + t;
    }
    out << line << '\n';
    if (y == g.rows) break;
    line.assign((g.columns + 1) * (cell + 2), ' ');
    for (const auto& c : g.filling.crosses) {
      if (c.row != static_cast<int>(y) + 1) continue;
      char mark = !c.mark                        ? 'X'
                  : *c.mark == Decoration::plus  ? '+'
                  : *c.mark == Decoration::minus ? '-'
                                                 : 'x';
      line[(c.column - 1) * (cell + 2) + cell / 2 + (cell + 2) / 2] = mark;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

inline std::string render_growth_diagram(const GrowthDiagram<CornerLabel>& g,
                                         std::size_t n) {
  return render_growth_diagram(
      g, [n](const CornerLabel& l) { return format_corner(l, n); });
}

inline std::string render_growth_diagram(const GrowthDiagram<Partition>& g) {
  return render_growth_diagram(
      g, [](const Partition& p) { return format_partition(p); });
}

}  // namespace cactus
