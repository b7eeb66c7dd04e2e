#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cactus/shapes.hpp"

namespace cactus {

// Disjoint pairs inside {1..r}; the matching may leave points unmatched.
class PerfectMatching {
 public:
  PerfectMatching() = default;

  PerfectMatching(std::size_t r, std::vector<std::pair<int, int>> pairs)
      : r_(r) {
    std::vector<bool> used(r + 1, false);
    for (auto [a, b] : pairs) {
      if (a > b) std::swap(a, b);
      if (a < 1 || static_cast<std::size_t>(b) > r || a == b)
        throw ShapeError("pair {" + std::to_string(a) + "," +
                         std::to_string(b) + "} out of range");
      if (used[a] || used[b])
        throw ShapeError("pairs of a matching must be disjoint");
      used[a] = used[b] = true;
      pairs_.emplace_back(a, b);
    }
    std::sort(pairs_.begin(), pairs_.end());
  }

  std::size_t size() const { return r_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool is_perfect() const { return 2 * pairs_.size() == r_; }

  std::vector<int> unmatched() const {
    std::vector<bool> used(r_ + 1, false);
    for (auto [a, b] : pairs_) used[a] = used[b] = true;
    std::vector<int> out;
    for (std::size_t i = 1; i <= r_; ++i)
      if (!used[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  // Partner of i, or 0.
  int partner(int i) const {
    for (auto [a, b] : pairs_) {
      if (a == i) return b;
      if (b == i) return a;
    }
    return 0;
  }

  friend bool operator==(const PerfectMatching&,
                         const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching&,
                          const PerfectMatching&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

// Injective partial map on {1..r}; image[i-1] == 0 means undefined.
class PartialPermutation {
 public:
  PartialPermutation() = default;

  explicit PartialPermutation(std::size_t r) : image_(r, 0) {}

  PartialPermutation(std::size_t r, const std::vector<std::pair<int, int>>& arcs)
      : image_(r, 0) {
    for (auto [i, j] : arcs) set(i, j);
  }

  // One-line notation of a total permutation.
  static PartialPermutation from_one_line(const std::vector<int>& values) {
    PartialPermutation p(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      p.set(static_cast<int>(i + 1), values[i]);
    if (!p.is_total()) throw ShapeError("one-line notation is not total");
    return p;
  }

  void set(int i, int j) {
    std::size_t r = image_.size();
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > r ||
        static_cast<std::size_t>(j) > r)
      throw ShapeError("arc (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range");
    if (image_[i - 1] != 0)
      throw ShapeError(std::to_string(i) + " is mapped twice");
    for (int x : image_)
      if (x == j) throw ShapeError(std::to_string(j) + " is hit twice");
    image_[i - 1] = j;
  }

  std::size_t size() const { return image_.size(); }
  int operator()(int i) const { return image_.at(i - 1); }
  const std::vector<int>& one_line() const { return image_; }

  bool is_total() const {
    return std::none_of(image_.begin(), image_.end(),
                        [](int x) { return x == 0; });
  }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i]) out.emplace_back(static_cast<int>(i + 1), image_[i]);
    return out;
  }

  std::vector<int> domain() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i]) out.push_back(static_cast<int>(i + 1));
    return out;
  }

  std::vector<int> range() const {
    std::vector<int> out;
    for (int x : image_)
      if (x) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const PartialPermutation&,
                         const PartialPermutation&) = default;
  friend auto operator<=>(const PartialPermutation&,
                          const PartialPermutation&) = default;

 private:
  std::vector<int> image_;
};

// Sorted blocks, sorted by least element; checks they partition {1..r}.
inline std::vector<std::vector<int>> normalize_blocks(
    std::size_t r, std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(r + 1, false);
  std::size_t count = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw ShapeError("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || static_cast<std::size_t>(x) > r || seen[x])
        throw ShapeError("blocks must partition {1.." + std::to_string(r) +
                         "}");
      seen[x] = true;
      ++count;
    }
  }
  if (count != r)
    throw ShapeError("blocks must partition {1.." + std::to_string(r) + "}");
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// Set partition of {1..r} with no two crossing blocks.
class NoncrossingSetPartition {
 public:
  NoncrossingSetPartition() = default;

  NoncrossingSetPartition(std::size_t r, std::vector<std::vector<int>> blocks)
      : r_(r), blocks_(normalize_blocks(r, std::move(blocks))) {
    // Blocks A, B cross when a1 < b1 < a2 < b2 for some a1,a2 in A and
    // b1,b2 in B.
    std::vector<int> owner(r + 1, -1);
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      for (int x : blocks_[k]) owner[x] = static_cast<int>(k);
    for (std::size_t a1 = 1; a1 <= r; ++a1)
      for (std::size_t b1 = a1 + 1; b1 <= r; ++b1)
        for (std::size_t a2 = b1 + 1; a2 <= r; ++a2)
          for (std::size_t b2 = a2 + 1; b2 <= r; ++b2)
            if (owner[a1] == owner[a2] && owner[b1] == owner[b2] &&
                owner[a1] != owner[b1])
              throw ShapeError("set partition has crossing blocks");
  }

  std::size_t size() const { return r_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  friend bool operator==(const NoncrossingSetPartition&,
                         const NoncrossingSetPartition&) = default;
  friend auto operator<=>(const NoncrossingSetPartition&,
                          const NoncrossingSetPartition&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Marks carried by crosses of alternating growth diagrams and by cells of
// evacuation diagrams.
enum class Decoration { plus, minus, times };

inline const char* decoration_name(Decoration d) {
  switch (d) {
    case Decoration::plus: return "plus";
    case Decoration::minus: return "minus";
    case Decoration::times: return "times";
  }
  return "?";
}

// Symmetries.

inline PerfectMatching rotate_matching(const PerfectMatching& m) {
  int r = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : m.pairs()) pairs.emplace_back(a % r + 1, b % r + 1);
  return PerfectMatching(m.size(), std::move(pairs));
}

inline PerfectMatching reverse_matching(const PerfectMatching& m) {
  int r = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : m.pairs()) pairs.emplace_back(r + 1 - b, r + 1 - a);
  return PerfectMatching(m.size(), std::move(pairs));
}

inline PartialPermutation rotate_permutation(const PartialPermutation& p) {
  int r = static_cast<int>(p.size());
  PartialPermutation out(p.size());
  for (auto [i, j] : p.arcs()) out.set(i % r + 1, j % r + 1);
  return out;
}

inline PartialPermutation reverse_complement(const PartialPermutation& p) {
  int r = static_cast<int>(p.size());
  PartialPermutation out(p.size());
  for (auto [i, j] : p.arcs()) out.set(r + 1 - i, r + 1 - j);
  return out;
}

inline PartialPermutation invert(const PartialPermutation& p) {
  PartialPermutation out(p.size());
  for (auto [i, j] : p.arcs()) out.set(j, i);
  return out;
}

inline NoncrossingSetPartition mirror(const NoncrossingSetPartition& s) {
  int r = static_cast<int>(s.size());
  std::vector<std::vector<int>> blocks;
  for (const auto& b : s.blocks()) {
    std::vector<int> m;
    for (int x : b) m.push_back(r + 1 - x);
    blocks.push_back(std::move(m));
  }
  return NoncrossingSetPartition(s.size(), std::move(blocks));
}

// A matching read as a fixed-point-free involution on its support.
inline PartialPermutation to_involution(const PerfectMatching& m) {
  PartialPermutation p(m.size());
  for (auto [a, b] : m.pairs()) {
    p.set(a, b);
    p.set(b, a);
  }
  return p;
}

// Statistics.

inline bool pairs_cross(std::pair<int, int> x, std::pair<int, int> y) {
  return (x.first < y.first && y.first < x.second && x.second < y.second) ||
         (y.first < x.first && x.first < y.second && y.second < x.second);
}

// Largest set of mutually crossing pairs, by exhaustive clique search.
inline std::size_t max_crossing_matching(const PerfectMatching& m) {
  const auto& ps = m.pairs();
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    if (chosen.size() + (ps.size() - from) <= best) return;
    for (std::size_t k = from; k < ps.size(); ++k) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return pairs_cross(ps[c], ps[k]);
      });
      if (!ok) continue;
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

inline std::size_t lis_length(const std::vector<int>& seq) {
  std::vector<int> tails;
  for (int x : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return tails.size();
}

inline std::size_t lis_length(const PartialPermutation& p) {
  if (!p.is_total()) throw ShapeError("LIS needs a total permutation");
  return lis_length(p.one_line());
}

using ArcPair = std::pair<std::pair<int, int>, std::pair<int, int>>;

inline std::vector<ArcPair> corteel_crossings(const PartialPermutation& p) {
  if (!p.is_total()) throw ShapeError("crossings need a total permutation");
  std::vector<ArcPair> out;
  int r = static_cast<int>(p.size());
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      int pi = p(i), pj = p(j);
      if ((j <= pi && pi < pj) || (pi < pj && pj < i))
        out.push_back({{i, pi}, {j, pj}});
    }
  return out;
}

inline NoncrossingSetPartition perm_to_ncpartition(const PartialPermutation& p) {
  if (!corteel_crossings(p).empty())
    throw ShapeError("permutation has crossing arcs");
  std::size_t r = p.size();
  std::vector<bool> seen(r + 1, false);
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 1; i <= r; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(i); !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    blocks.push_back(std::move(cycle));
  }
  return NoncrossingSetPartition(r, std::move(blocks));
}

// Each block b_1 < ... < b_k becomes the cycle b_k -> b_{k-1} -> ... -> b_1
// -> b_k.
inline PartialPermutation ncpartition_to_perm(const NoncrossingSetPartition& s) {
  PartialPermutation p(s.size());
  for (const auto& b : s.blocks())
    for (std::size_t k = 0; k < b.size(); ++k)
      p.set(b[k], b[(k + b.size() - 1) % b.size()]);
  return p;
}

// Text forms.

inline std::string format_matching(const PerfectMatching& m) {
  std::string out = "{";
  for (std::size_t k = 0; k < m.pairs().size(); ++k) {
    if (k) out += ',';
    out += "{" + std::to_string(m.pairs()[k].first) + "," +
           std::to_string(m.pairs()[k].second) + "}";
  }
  return out + "}";
}

inline std::string format_permutation(const PartialPermutation& p) {
  std::string out = "{";
  auto arcs = p.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (k) out += ',';
    out += "(" + std::to_string(arcs[k].first) + "," +
           std::to_string(arcs[k].second) + ")";
  }
  return out + "}";
}

// Digits when r <= 9, otherwise space separated.
inline std::string format_one_line(const PartialPermutation& p) {
  std::string out;
  bool small = p.size() <= 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!small && i) out += ' ';
    out += std::to_string(p.one_line()[i]);
  }
  return out;
}

inline std::string format_blocks(const NoncrossingSetPartition& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.blocks().size(); ++k) {
    if (k) out += ',';
    out += '{';
    for (std::size_t i = 0; i < s.blocks()[k].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s.blocks()[k][i]);
    }
    out += '}';
  }
  return out + "}";
}

namespace detail {

// Integer groups delimited by `open` and `close`, e.g. "{(1,2),(3,4)}" with
// '(' and ')'. Text outside the groups may only hold separators.
inline std::vector<std::vector<int>> integer_groups(std::string_view text,
                                                    char open, char close,
                                                    std::string_view outer) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == open) {
      std::size_t end = text.find(close, i + 1);
      if (end == std::string_view::npos)
        throw ShapeError("unbalanced '" + std::string(1, open) + "'");
      std::vector<int> group;
      std::string_view inner = trim(text.substr(i + 1, end - i - 1));
      if (!inner.empty())
        for (auto f : split(inner, ','))
          group.push_back(static_cast<int>(parse_int(trim(f), "integer")));
      out.push_back(std::move(group));
      i = end + 1;
    } else if (outer.find(c) != std::string_view::npos ||
               std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw ShapeError("unexpected '" + std::string(1, c) + "' in '" +
                       std::string(text) + "'");
    }
  }
  return out;
}

inline std::size_t max_element_of(const std::vector<std::vector<int>>& g) {
  int m = 0;
  for (const auto& x : g)
    for (int v : x) m = std::max(m, v);
  return static_cast<std::size_t>(m);
}

// Outer braces of "{{..},{..}}" removed.
inline std::string_view strip_outer_braces(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}')
    return s.substr(1, s.size() - 2);
  throw ShapeError("expected braces around '" + std::string(s) + "'");
}

}  // namespace detail

// "{{1,4},{2,9}}"; r defaults to the largest element.
inline PerfectMatching parse_matching(std::string_view text,
                                      std::optional<std::size_t> r = {}) {
  auto g = detail::integer_groups(detail::strip_outer_braces(text), '{', '}',
                                  ",");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& x : g) {
    if (x.size() != 2) throw ShapeError("matching blocks must be pairs");
    pairs.emplace_back(x[0], x[1]);
  }
  return PerfectMatching(r.value_or(detail::max_element_of(g)),
                         std::move(pairs));
}

// "{(3,2),(4,4)}" or one-line notation ("54123", "10 2 1 ...").
inline PartialPermutation parse_permutation(
    std::string_view text, std::optional<std::size_t> r = {}) {
  std::string_view s = detail::trim(text);
  if (!s.empty() && s.front() == '{') {
    auto g = detail::integer_groups(detail::strip_outer_braces(s), '(', ')',
                                    ",");
    std::vector<std::pair<int, int>> arcs;
    for (const auto& x : g) {
      if (x.size() != 2) throw ShapeError("arcs must be pairs");
      arcs.emplace_back(x[0], x[1]);
    }
    return PartialPermutation(r.value_or(detail::max_element_of(g)), arcs);
  }
  std::vector<int> values;
  if (s.find(' ') != std::string_view::npos) {
    for (auto f : detail::split(s, ' '))
      if (!detail::trim(f).empty())
        values.push_back(
            static_cast<int>(detail::parse_int(detail::trim(f), "permutation")));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw ShapeError("malformed permutation '" + std::string(s) + "'");
      values.push_back(c - '0');
    }
  }
  auto p = PartialPermutation::from_one_line(values);
  if (r && *r != p.size()) throw ShapeError("permutation size is not r");
  return p;
}

// "{{1,2,8},{3,6,7},{4,5}}"
inline NoncrossingSetPartition parse_blocks(std::string_view text,
                                            std::optional<std::size_t> r = {}) {
  auto g = detail::integer_groups(detail::strip_outer_braces(text), '{', '}',
                                  ",");
  return NoncrossingSetPartition(r.value_or(detail::max_element_of(g)), g);
}

}  // namespace cactus
