#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;
using Pairs = std::vector<std::pair<int, int>>;

// Row insertion; returns the insertion tableau.
inline Rows rsk_insert(const std::vector<int>& word) {
  Rows t;
  for (int x : word) {
    std::size_t row = 0;
    while (true) {
      if (row == t.size()) {
        t.push_back({x});
        break;
      }
      auto it = std::upper_bound(t[row].begin(), t[row].end(), x);
      if (it == t[row].end()) {
        t[row].push_back(x);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return t;
}

inline std::vector<long> shape_of(const Rows& t) {
  std::vector<long> s;
  for (const auto& r : t) s.push_back(static_cast<long>(r.size()));
  return s;
}

// Longest strictly increasing subsequence by checking every subset.
inline std::size_t lis_brute(const std::vector<int>& seq) {
  std::size_t best = 0, len = seq.size();
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    int last = 0;
    std::size_t count = 0;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i)
      if (mask >> i & 1u) {
        if (count && seq[i] <= last) ok = false;
        last = seq[i];
        ++count;
      }
    if (ok) best = std::max(best, count);
  }
  return best;
}

inline bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = x;
  auto [c, d] = y;
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Largest set of pairwise crossing chords, by checking every subset.
inline std::size_t max_crossing_brute(const Pairs& chords) {
  std::size_t best = 0, len = chords.size();
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < len; ++i)
      if (mask >> i & 1u) chosen.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
        ok = chords_cross(chords[chosen[i]], chords[chosen[j]]);
    if (ok) best = std::max(best, chosen.size());
  }
  return best;
}

// Every perfect matching of {1..size}, pairs sorted.
inline std::vector<Pairs> perfect_matchings(int size) {
  std::vector<Pairs> out;
  Pairs cur;
  std::vector<bool> used(size + 1, false);
  std::function<void()> rec = [&] {
    int first = 1;
    while (first <= size && used[first]) ++first;
    if (first > size) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    for (int b = first + 1; b <= size; ++b)
      if (!used[b]) {
        used[b] = true;
        cur.emplace_back(first, b);
        rec();
        cur.pop_back();
        used[b] = false;
      }
    used[first] = false;
  };
  if (size % 2 == 0) rec();
  return out;
}

inline Pairs normalized(Pairs p) {
  for (auto& [a, b] : p)
    if (a > b) std::swap(a, b);
  std::sort(p.begin(), p.end());
  return p;
}

inline Pairs rotate_by(const Pairs& p, int size, int k) {
  Pairs out;
  for (auto [a, b] : p)
    out.emplace_back((a - 1 + k) % size + 1, (b - 1 + k) % size + 1);
  return normalized(out);
}

// Classical evacuation of a standard Young tableau with entries 1..N:
// repeatedly delete the least entry, slide the hole out by jeu de taquin
// and record N+1-k in the vacated cell.
inline Rows jdt_evacuation(Rows t) {
  std::size_t total = 0;
  for (const auto& r : t) total += r.size();
  Rows out;
  for (const auto& r : t) out.emplace_back(r.size(), 0);
  for (std::size_t k = 1; k <= total; ++k) {
    std::size_t i = 0, j = 0;
    while (true) {
      bool has_right = j + 1 < t[i].size();
      bool has_below = i + 1 < t.size() && j < t[i + 1].size();
      if (!has_right && !has_below) break;
      if (has_below && (!has_right || t[i + 1][j] < t[i][j + 1])) {
        t[i][j] = t[i + 1][j];
        ++i;
      } else {
        t[i][j] = t[i][j + 1];
        ++j;
      }
    }
    t[i].pop_back();
    if (t[i].empty()) t.pop_back();
    out[i][j] = static_cast<int>(total + 1 - k);
  }
  return out;
}

// All standard Young tableaux of every shape with `cells` cells.
inline std::vector<Rows> standard_tableaux(std::size_t cells) {
  std::vector<Rows> out;
  Rows cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<std::size_t>(next) > cells) {
      out.push_back(cur);
      return;
    }
    for (std::size_t row = 0; row <= cur.size(); ++row) {
      if (row == cur.size()) {
        cur.push_back({next});
        rec(next + 1);
        cur.pop_back();
        return;
      }
      if (row == 0 || cur[row].size() < cur[row - 1].size()) {
        cur[row].push_back(next);
        rec(next + 1);
        cur[row].pop_back();
      }
    }
  };
  rec(1);
  return out;
}

// Subsets of {1..r} of the given size.
inline std::vector<std::vector<int>> subsets(int r, std::size_t size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x <= r; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace oracle
