#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cactus/diagrams.hpp"
#include "cactus/embedding.hpp"
#include "cactus/growth.hpp"
#include "cactus/local_rules.hpp"
#include "cactus/shapes.hpp"
#include "cactus/tableaux.hpp"

namespace cactus {

// Enumeration.

enum class ObjectKind {
  oscillating,
  alternating,
  matching,
  permutation,
  ncpartition
};

struct EnumerationSpec {
  ObjectKind kind = ObjectKind::oscillating;
  std::size_t r = 0;
  std::size_t n = 1;
  bool empty_shape = false;
  std::optional<std::size_t> max_extent;  // alternating only
  std::optional<std::size_t> bound;       // crossing or LIS bound
};

// Partitions of every size up to `max_size`.
inline std::vector<Partition> partitions_up_to(std::size_t max_size) {
  std::vector<Partition> out;
  std::vector<Int> cur;
  std::function<void(Int, Int)> rec = [&](Int left, Int cap) {
    out.emplace_back(cur);
    for (Int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(static_cast<Int>(max_size), static_cast<Int>(max_size));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<OscillatingTableau> enumerate_oscillating(
    std::size_t r, std::size_t n, bool empty_shape = false) {
  std::vector<OscillatingTableau> out;
  std::vector<Partition> path{Partition()};
  std::function<void()> rec = [&] {
    std::size_t left = r + 1 - path.size();
    const Partition cur = path.back();
    if (empty_shape && static_cast<std::size_t>(cur.size()) > left) return;
    if (left == 0) {
      out.emplace_back(path, n);
      return;
    }
    for (std::size_t row = 0; row <= std::min(cur.length(), n - 1); ++row)
      if (row == 0 || cur[row] < cur[row - 1]) {
        path.push_back(add_cell(cur, row));
        rec();
        path.pop_back();
      }
    for (std::size_t row = 0; row < cur.length(); ++row)
      if (cur[row] > cur[row + 1]) {
        path.push_back(remove_cell(cur, row));
        rec();
        path.pop_back();
      }
  };
  rec();
  return out;
}

inline std::vector<AlternatingTableau> enumerate_alternating(
    std::size_t r, std::size_t n, bool empty_shape = false,
    std::optional<std::size_t> max_extent = std::nullopt) {
  std::vector<AlternatingTableau> out;
  std::vector<Staircase> path{Staircase::zero(n)};
  auto weight = [](const Staircase& s) {
    Int w = 0;
    for (Int x : s.entries()) w += x < 0 ? -x : x;
    return w;
  };
  auto step = [&](const Staircase& s, std::size_t i, Int d) {
    std::vector<Int> v = s.entries();
    v[i] += d;
    if ((i > 0 && v[i - 1] < v[i]) || (i + 1 < v.size() && v[i] < v[i + 1]))
      return std::optional<Staircase>();
    Staircase t(std::move(v));
    if (max_extent && t.extent() > *max_extent) return std::optional<Staircase>();
    return std::optional<Staircase>(std::move(t));
  };
  std::function<void()> rec = [&] {
    std::size_t left = r - (path.size() - 1) / 2;
    const Staircase cur = path.back();
    if (empty_shape && weight(cur) > 2 * static_cast<Int>(left)) return;
    if (left == 0) {
      out.emplace_back(path);
      return;
    }
    for (std::size_t k = 0; k < n; ++k) {
      auto up = step(cur, k, 1);
      if (!up) continue;
      path.push_back(*up);
      for (std::size_t l = 0; l < n; ++l) {
        auto down = step(*up, l, -1);
        if (!down) continue;
        path.push_back(*down);
        rec();
        path.pop_back();
      }
      path.pop_back();
    }
  };
  rec();
  return out;
}

// Perfect matchings of {1..size}, optionally with at most `bound` mutually
// crossing pairs.
inline std::vector<PerfectMatching> enumerate_matchings(
    std::size_t size, std::optional<std::size_t> bound = std::nullopt) {
  std::vector<PerfectMatching> out;
  if (size % 2) return out;
  std::vector<bool> used(size + 1, false);
  std::vector<std::pair<int, int>> pairs;
  std::function<void()> rec = [&] {
    std::size_t a = 1;
    while (a <= size && used[a]) ++a;
    if (a > size) {
      PerfectMatching m(size, pairs);
      if (!bound || max_crossing_matching(m) <= *bound) out.push_back(m);
      return;
    }
    used[a] = true;
    for (std::size_t b = a + 1; b <= size; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      rec();
      pairs.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec();
  return out;
}

inline std::vector<PartialPermutation> enumerate_permutations(
    std::size_t r, std::optional<std::size_t> lis_bound = std::nullopt) {
  std::vector<PartialPermutation> out;
  std::vector<int> v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = static_cast<int>(i + 1);
  do {
    if (!lis_bound || lis_length(v) <= *lis_bound)
      out.push_back(PartialPermutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<NoncrossingSetPartition> enumerate_ncpartitions(
    std::size_t r) {
  std::vector<NoncrossingSetPartition> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i > r) {
      try {
        out.emplace_back(r, blocks);
      } catch (const ShapeError&) {
      }
      return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].push_back(static_cast<int>(i));
      rec(i + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({static_cast<int>(i)});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t catalan(std::size_t r) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Reports.

struct TheoremReport {
  std::string id;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  void merge(const TheoremReport& o) {
    instances += o.instances;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    seconds += o.seconds;
  }
};

inline TheoremReport named_report(std::string id) {
  TheoremReport r;
  r.id = std::move(id);
  return r;
}

namespace detail {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void fail(std::string s) { failures.push_back(std::move(s)); }
};

inline std::string text_of(const OscillatingTableau& o) {
  return "osc n=" + std::to_string(o.rank()) + " " + format_oscillating(o);
}
inline std::string text_of(const AlternatingTableau& a) {
  return "alt " + format_alternating(a);
}

// Runs check on every item over `jobs` threads; outcomes are collected in
// item order so reports do not depend on scheduling.
template <class T, class F>
std::vector<Outcome> run_items(const std::vector<T>& items, unsigned jobs,
                               F check) {
  std::vector<Outcome> out(items.size());
  auto work = [&](std::size_t first) {
    for (std::size_t k = first; k < items.size(); k += std::max(jobs, 1u)) {
      try {
        check(items[k], out[k]);
      } catch (const std::exception& e) {
        out[k].fail(text_of(items[k]) + ": exception: " + e.what());
      }
    }
  };
  if (jobs <= 1 || items.size() < 2) {
    work(0);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
  for (auto& t : pool) t.join();
  return out;
}

template <class T, class F>
void check_items(TheoremReport& report, const std::vector<T>& items,
                 unsigned jobs, F check) {
  for (auto& o : run_items(items, jobs, check)) {
    report.failures.insert(report.failures.end(), o.failures.begin(),
                           o.failures.end());
    report.notes.insert(report.notes.end(), o.notes.begin(), o.notes.end());
  }
  report.instances += items.size();
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

template <class T>
void expect_equal(Outcome& out, const std::string& what, const T& got,
                  const T& want, const std::string& instance,
                  const std::function<std::string(const T&)>& show) {
  if (got != want)
    out.fail(instance + ": " + what + " gave " + show(got) + ", expected " +
             show(want));
}

}  // namespace detail

// Schuetzenberger evacuation of a partial standard Young tableau whose
// entries lie in {1..r}: standardize, rotate the filling of the growth
// diagram of (T, T) by 180 degrees, regrow, relabel by {r+1-e}.
inline PartialSYT schuetzenberger_evacuation_syt(const PartialSYT& t,
                                                 std::size_t r) {
  auto entries = t.entries();
  if (!entries.empty() && static_cast<std::size_t>(entries.back()) > r)
    throw ShapeError("tableau entry exceeds " + std::to_string(r));
  std::size_t size = entries.size();
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& e : row)
      e = static_cast<int>(std::lower_bound(entries.begin(), entries.end(), e) -
                           entries.begin()) +
          1;
  auto chain = chain_from_syt(PartialSYT(rows), size);

  // Top border (x, 0) and right border (size, y) carry the chain; the
  // right border is read from the bottom corner upwards.
  GrowthDiagram<Partition> g(size, size);
  for (std::size_t i = 0; i <= size; ++i) {
    g.set(i, 0, chain[i]);
    g.set(size, size - i, chain[i]);
  }
  std::vector<std::pair<int, int>> crosses;
  for (std::size_t row = 1; row <= size; ++row)
    for (std::size_t c = size; c >= 1; --c) {
      auto b = backward_cell(g.get(c - 1, row - 1), g.get(c, row - 1),
                             g.get(c, row));
      g.set(c - 1, row, b.lambda);
      if (b.has_cross)
        crosses.emplace_back(static_cast<int>(size + 1 - c),
                             static_cast<int>(size + 1 - row));
    }

  GrowthDiagram<Partition> h(size, size);
  for (std::size_t i = 0; i <= size; ++i) {
    h.set(0, i, Partition());
    h.set(i, size, Partition());
  }
  auto has = [&](std::size_t c, std::size_t row) {
    return std::find(crosses.begin(), crosses.end(),
                     std::pair<int, int>((int)c, (int)row)) != crosses.end();
  };
  for (std::size_t row = size; row >= 1; --row)
    for (std::size_t c = 1; c <= size; ++c)
      h.set(c, row - 1,
            forward_cell(h.get(c - 1, row), h.get(c - 1, row - 1),
                         h.get(c, row), has(c, row)));
  std::vector<Partition> top;
  for (std::size_t i = 0; i <= size; ++i) top.push_back(h.get(i, 0));

  std::vector<int> labels;
  for (int e : entries) labels.push_back(static_cast<int>(r) + 1 - e);
  std::sort(labels.begin(), labels.end());
  return syt_from_chain(top, labels);
}

inline AlternatingTableau reversal(const AlternatingTableau& a) {
  std::vector<Staircase> s(a.staircases().rbegin(), a.staircases().rend());
  return AlternatingTableau(std::move(s));
}

inline PartialPermutation perm_of(const AlternatingTableau& a) {
  return perm_growth(a).permutation;
}

// Theorem checkers. Every checker takes a job count for the thread pool.

// Empty shape: rot M(pr o) = M(o) and rev M(o) = M(ev o). With all_shapes,
// the reversal and tableau-evacuation claims are checked on every shape and
// the rotation claim on the empty-shape instances.
inline TheoremReport check_matching_theorems(std::size_t r_max,
                                             std::size_t n_max,
                                             bool all_shapes,
                                             unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report(all_shapes ? "partial-matchings" : "matchings");
  std::vector<OscillatingTableau> items;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t r = 0; r <= r_max; ++r)
      for (auto& o : enumerate_oscillating(r, n, !all_shapes))
        items.push_back(std::move(o));
  detail::check_items(
      report, items, jobs,
      [](const OscillatingTableau& o, detail::Outcome& out) {
        std::string id = detail::text_of(o);
        auto s = sundaram(o);
        auto show = [](const PerfectMatching& m) { return format_matching(m); };
        if (o.shape().empty()) {
          auto p = sundaram(promote(o)).matching;
          if (rotate_matching(p) != s.matching)
            out.fail(id + ": rotation of M(pr) is " +
                     format_matching(rotate_matching(p)) + ", M is " +
                     show(s.matching));
        }
        auto e = sundaram(evacuate(o));
        if (e.matching != reverse_matching(s.matching))
          out.fail(id + ": M(ev) is " + show(e.matching) + ", reversal is " +
                   show(reverse_matching(s.matching)));
        auto want = schuetzenberger_evacuation_syt(s.tableau, o.length());
        if (e.tableau != want)
          out.fail(id + ": M_T(ev) is " + format_syt(e.tableau) +
                   ", evacuation of M_T is " + format_syt(want));
      });
  report.seconds = clock.seconds();
  return report;
}

inline std::vector<std::size_t> permutation_ranks(std::size_t r) {
  std::set<std::size_t> ns{1, 2, r + 1, r};
  if (r >= 2) ns.insert(r - 1);
  return {ns.begin(), ns.end()};
}

// The alternating tableau of the running example: 54123 for n = 3.
inline AlternatingTableau example_54123(std::size_t n) {
  return pad_zeros(
      alternating_from_word({{1, 3}, {1, 2}, {2, 2}, {2, 1}, {3, 1}}, 3), n);
}

// Empty shape: (i) n >= r-1: rot Perm(pr a) = Perm(a); (ii) even n >= r or
// odd n >= r-1: rc Perm(a) = Perm(ev a); (iii) n <= 2: rotation as in (i)
// and (rc Perm(a))^-1 = Perm(ev a). Counts and injectivity per (r, n),
// plus the negative control at n = 3, r = 5.
inline TheoremReport check_permutation_theorems(std::size_t r_max,
                                                unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report("permutations");
  for (std::size_t r = 1; r <= r_max; ++r)
    for (std::size_t n : permutation_ranks(r)) {
      auto items = enumerate_alternating(r, n, true);
      detail::check_items(
          report, items, jobs,
          [r, n](const AlternatingTableau& a, detail::Outcome& out) {
            std::string id = detail::text_of(a);
            auto pi = perm_of(a);
            bool rotation = n + 1 >= r || n <= 2;
            bool rc = (n % 2 == 0 && n >= r) || (n % 2 == 1 && n + 1 >= r);
            if (rotation) {
              auto p = perm_of(promote(a));
              if (rotate_permutation(p) != pi)
                out.fail(id + ": rotation of Perm(pr) is " +
                         format_one_line(rotate_permutation(p)) +
                         ", Perm is " + format_one_line(pi));
            }
            if (rc || n <= 2) {
              auto e = perm_of(evacuate(a));
              if (rc && e != reverse_complement(pi))
                out.fail(id + ": Perm(ev) is " + format_one_line(e) +
                         ", rc Perm is " +
                         format_one_line(reverse_complement(pi)));
              if (n <= 2 && e != invert(reverse_complement(pi)))
                out.fail(id + ": Perm(ev) is " + format_one_line(e) +
                         ", inverse rc Perm is " +
                         format_one_line(invert(reverse_complement(pi))));
            }
          });
      std::set<std::vector<int>> image;
      for (const auto& a : items) image.insert(perm_of(a).one_line());
      std::size_t want = enumerate_permutations(r, n).size();
      if (image.size() != items.size())
        report.failures.push_back("r=" + std::to_string(r) +
                                  " n=" + std::to_string(n) +
                                  ": Perm is not injective");
      if (items.size() != want)
        report.failures.push_back(
            "r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " +
            std::to_string(items.size()) + " tableaux but " +
            std::to_string(want) + " permutations with LIS <= n");
    }

  auto a = example_54123(3);
  auto pi = perm_of(a);
  auto p = perm_of(promote(a));
  ++report.instances;
  if (format_one_line(pi) != "54123" || format_one_line(p) != "23514" ||
      format_one_line(rotate_permutation(pi)) != "41523")
    report.failures.push_back("negative control values changed: Perm " +
                              format_one_line(pi) + ", Perm(pr) " +
                              format_one_line(p));
  if (p == rotate_permutation(pi) || rotate_permutation(p) == pi)
    report.failures.push_back(
        "negative control: rotation identity holds at n=3, r=5");
  else
    report.notes.push_back(
        "negative control n=3 r=5: Perm(pr) = 23514, rotation of 54123 = "
        "41523, identity fails as required");
  report.seconds = clock.seconds();
  return report;
}

// Instances of the empty-shape rotation claim where the arcs are moved by
// i -> i+1 literally (Perm(pr a) = rot Perm(a)) and the identity fails.
inline std::size_t literal_rotation_failures(std::size_t r_max) {
  std::size_t bad = 0;
  for (std::size_t r = 1; r <= r_max; ++r)
    for (std::size_t n : permutation_ranks(r)) {
      if (n + 1 < r && n > 2) continue;
      for (const auto& a : enumerate_alternating(r, n, true))
        if (perm_of(promote(a)) != rotate_permutation(perm_of(a))) ++bad;
    }
  return bad;
}

// All shapes, n in {2r-1, 2r}: Perm(ev a) = rc Perm(a) and both border
// tableaux evacuate.
inline TheoremReport check_partial_theorems(std::size_t r_max,
                                            unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report("partial-permutations");
  for (std::size_t r = 1; r <= r_max; ++r)
    for (std::size_t n : {2 * r - 1, 2 * r}) {
      auto items = enumerate_alternating(r, n);
      detail::check_items(
          report, items, jobs,
          [r](const AlternatingTableau& a, detail::Outcome& out) {
            std::string id = detail::text_of(a);
            auto g = perm_growth(a);
            auto e = perm_growth(evacuate(a));
            if (e.permutation != reverse_complement(g.permutation))
              out.fail(id + ": Perm(ev) is " + format_permutation(e.permutation) +
                       ", rc Perm is " +
                       format_permutation(reverse_complement(g.permutation)));
            auto p = schuetzenberger_evacuation_syt(g.p, r);
            auto q = schuetzenberger_evacuation_syt(g.q, r);
            if (e.p != p)
              out.fail(id + ": P(ev) is " + format_syt(e.p) +
                       ", evacuation of P is " + format_syt(p));
            if (e.q != q)
              out.fail(id + ": Q(ev) is " + format_syt(e.q) +
                       ", evacuation of Q is " + format_syt(q));
          });
    }
  report.seconds = clock.seconds();
  return report;
}

// m < n: tableaux with every staircase of extent <= m whose promotion also
// stays within extent m commute with stripping to rank m. Also counts the
// instances whose middle row leaves extent m.
inline TheoremReport check_stability(std::size_t r_max, std::size_t n_max,
                                     unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report("stability");
  std::vector<std::pair<std::size_t, AlternatingTableau>> items;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (std::size_t m = 1; m < n; ++m)
      for (std::size_t r = 0; r <= r_max; ++r)
        for (auto& a : enumerate_alternating(r, n, false, m))
          items.emplace_back(m, std::move(a));
  items.emplace_back(3, example_54123(4));

  std::vector<AlternatingTableau> tableaux;
  for (const auto& [m, a] : items) tableaux.push_back(a);
  std::size_t excluded = 0, wide = 0;
  std::string first_wide;
  auto outcomes = detail::run_items(
      tableaux, jobs, [&](const AlternatingTableau& a, detail::Outcome& out) {
        std::size_t k = static_cast<std::size_t>(&a - tableaux.data());
        std::size_t m = items[k].first;
        auto d = promotion_diagram(a);
        if (max_extent(d.middle) > m)
          out.notes.push_back("m=" + std::to_string(m) + " " +
                              detail::text_of(a) + " middle row " +
                              format_staircases(d.middle));
        if (max_extent(d.bottom) > m) {
          out.notes.push_back("excluded");
          return;
        }
        auto lhs = promote(strip_zeros(a, m));
        auto rhs = strip_zeros(AlternatingTableau(d.bottom), m);
        if (lhs != rhs)
          out.fail("m=" + std::to_string(m) + " " + detail::text_of(a) +
                   ": pr after strip " + format_alternating(lhs) +
                   ", strip after pr " + format_alternating(rhs));
      });
  for (auto& o : outcomes) {
    report.failures.insert(report.failures.end(), o.failures.begin(),
                           o.failures.end());
    for (const auto& note : o.notes) {
      if (note == "excluded") {
        ++excluded;
      } else {
        if (wide++ == 0) first_wide = note;
      }
    }
  }
  report.instances = items.size();
  report.notes.push_back(std::to_string(excluded) +
                         " instances excluded because promotion leaves extent m");
  if (wide == 0) {
    report.failures.push_back("no instance with a middle row beyond extent m");
  } else {
    report.notes.push_back(std::to_string(wide) +
                           " instances with a middle row beyond extent m, "
                           "first: " +
                           first_wide);
  }
  report.seconds = clock.seconds();
  return report;
}

namespace detail {

// s_{p,q}^2 = 1, s_{p,q} s_{k,l} = s_{k,l} s_{p,q} for q < k, and
// s_{p,q} s_{k,l} = s_{p+q-l,p+q-k} s_{p,q} for p <= k <= l <= q.
template <class T>
void check_cactus_relations(const T& t, Outcome& out) {
  std::size_t r = t.length();
  std::string id = text_of(t);
  auto s = [&](const T& x, std::size_t p, std::size_t q) {
    return cactus_apply(x, p, q);
  };
  std::map<std::pair<std::size_t, std::size_t>, T> once;
  for (std::size_t p = 1; p <= r; ++p)
    for (std::size_t q = p; q <= r; ++q) {
      once.emplace(std::make_pair(p, q), s(t, p, q));
      if (s(once.at({p, q}), p, q) != t)
        out.fail(id + ": s_{" + std::to_string(p) + "," + std::to_string(q) +
                 "} is not an involution");
    }
  for (std::size_t p = 1; p <= r; ++p)
    for (std::size_t q = p; q <= r; ++q)
      for (std::size_t k = 1; k <= r; ++k)
        for (std::size_t l = k; l <= r; ++l) {
          std::string rel = "s_{" + std::to_string(p) + "," +
                            std::to_string(q) + "} s_{" + std::to_string(k) +
                            "," + std::to_string(l) + "}";
          if (q < k && s(once.at({k, l}), p, q) != s(once.at({p, q}), k, l))
            out.fail(id + ": " + rel + " do not commute");
          if (p <= k && l <= q &&
              s(once.at({k, l}), p, q) !=
                  s(once.at({p, q}), p + q - l, p + q - k))
            out.fail(id + ": nesting relation fails for " + rel);
        }
}

}  // namespace detail

inline TheoremReport check_cactus(std::size_t osc_r_max, std::size_t osc_n_max,
                                  std::size_t alt_r_max, std::size_t alt_n_max,
                                  unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report("cactus");
  std::vector<OscillatingTableau> osc;
  for (std::size_t n = 1; n <= osc_n_max; ++n)
    for (std::size_t r = 0; r <= osc_r_max; ++r)
      for (auto& o : enumerate_oscillating(r, n)) osc.push_back(std::move(o));
  std::vector<AlternatingTableau> alt;
  for (std::size_t n = 1; n <= alt_n_max; ++n)
    for (std::size_t r = 0; r <= alt_r_max; ++r)
      for (auto& a : enumerate_alternating(r, n)) alt.push_back(std::move(a));
  detail::check_items(report, osc, jobs,
                      detail::check_cactus_relations<OscillatingTableau>);
  detail::check_items(report, alt, jobs,
                      detail::check_cactus_relations<AlternatingTableau>);
  report.seconds = clock.seconds();
  return report;
}

// GL(2), empty shape: Perm lands on noncrossing partitions bijectively,
// ev a is the reversal of a, Perm(ev a) = (rc Perm(a))^-1 and the blocks of
// Perm(ev a) mirror those of Perm(a).
inline TheoremReport check_gl2(std::size_t r_max, unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report("gl2");
  for (std::size_t r = 1; r <= r_max; ++r) {
    auto items = enumerate_alternating(r, 2, true);
    detail::check_items(
        report, items, jobs,
        [](const AlternatingTableau& a, detail::Outcome& out) {
          std::string id = detail::text_of(a);
          auto pi = perm_of(a);
          auto ev = evacuate(a);
          if (ev != reversal(a))
            out.fail(id + ": ev is " + format_alternating(ev) +
                     ", not the reversal");
          auto e = perm_of(ev);
          if (e != invert(reverse_complement(pi)))
            out.fail(id + ": Perm(ev) is " + format_one_line(e) +
                     ", inverse rc Perm is " +
                     format_one_line(invert(reverse_complement(pi))));
          auto blocks = perm_to_ncpartition(pi);
          if (ncpartition_to_perm(blocks) != pi)
            out.fail(id + ": Perm " + format_one_line(pi) +
                     " is not the permutation of its blocks");
          if (perm_to_ncpartition(e) != mirror(blocks))
            out.fail(id + ": blocks of Perm(ev) are not mirrored");
        });
    std::set<NoncrossingSetPartition> image;
    for (const auto& a : items) {
      try {
        image.insert(perm_to_ncpartition(perm_of(a)));
      } catch (const ShapeError&) {
      }
    }
    std::size_t want = catalan(r);
    if (items.size() != want || image.size() != want ||
        enumerate_ncpartitions(r).size() != want)
      report.failures.push_back(
          "r=" + std::to_string(r) + ": " + std::to_string(items.size()) +
          " tableaux, " + std::to_string(image.size()) +
          " distinct partitions, Catalan " + std::to_string(want));
  }
  report.seconds = clock.seconds();
  return report;
}

// Empty shape: the maximal crossing of M(o) is the largest number of parts
// among the shapes of o; M is a bijection onto matchings with at most n
// mutually crossing pairs.
inline TheoremReport check_crossing(std::size_t r_max, std::size_t n_max,
                                    unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report("crossing");
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t r = 0; r <= r_max; r += 2) {
      auto items = enumerate_oscillating(r, n, true);
      auto outcomes = detail::run_items(
          items, jobs, [](const OscillatingTableau& o, detail::Outcome& out) {
            std::size_t parts = 0;
            for (const auto& s : o.shapes()) parts = std::max(parts, s.length());
            auto m = sundaram(o).matching;
            std::size_t x = max_crossing_matching(m);
            if (x != parts)
              out.fail(detail::text_of(o) + ": maximal crossing " +
                       std::to_string(x) + ", maximal parts " +
                       std::to_string(parts));
            out.notes.push_back(format_matching(m));
          });
      std::set<std::string> image;
      for (auto& o : outcomes) {
        report.failures.insert(report.failures.end(), o.failures.begin(),
                               o.failures.end());
        image.insert(o.notes.front());
      }
      std::size_t want = enumerate_matchings(r, n).size();
      if (image.size() != items.size() || items.size() != want)
        report.failures.push_back(
            "r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " +
            std::to_string(items.size()) + " tableaux, " +
            std::to_string(image.size()) + " distinct matchings, " +
            std::to_string(want) + " matchings without " +
            std::to_string(n + 1) + " mutually crossing pairs");
      report.instances += items.size();
    }
  report.seconds = clock.seconds();
  return report;
}

// Polynomials with integer coefficients, lowest degree first.
using IntPoly = std::vector<Int>;

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division; throws when b does not divide a.
inline IntPoly poly_div(IntPoly a, const IntPoly& b) {
  if (b.empty() || b.back() == 0 || a.size() < b.size())
    throw std::invalid_argument("bad polynomial division");
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    if (a[k + b.size() - 1] % b.back())
      throw std::invalid_argument("polynomial division is not exact");
    q[k] = a[k + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  if (std::any_of(a.begin(), a.end(), [](Int x) { return x != 0; }))
    throw std::invalid_argument("polynomial division is not exact");
  return q;
}

inline IntPoly q_integer(std::size_t m) { return IntPoly(m, 1); }

inline IntPoly q_factorial(std::size_t m) {
  IntPoly f{1};
  for (std::size_t i = 1; i <= m; ++i) f = poly_mul(f, q_integer(i));
  return f;
}

// [2r choose r]_q / [r+1]_q as an exact polynomial.
inline IntPoly q_catalan(std::size_t r) {
  IntPoly binom =
      poly_div(q_factorial(2 * r), poly_mul(q_factorial(r), q_factorial(r)));
  return poly_div(binom, q_integer(r + 1));
}

inline std::complex<double> poly_eval(const IntPoly& p,
                                      std::complex<double> z) {
  std::complex<double> v = 0;
  for (std::size_t k = p.size(); k-- > 0;)
    v = v * z + static_cast<double>(p[k]);
  return v;
}

// Noncrossing perfect matchings of {1..2r} fixed by the k-th rotation
// against the q-Catalan polynomial at exp(k pi i / r), k = 0..2r-1.
inline TheoremReport check_csp(std::size_t r_max) {
  detail::Stopwatch clock;
  auto report = named_report("csp");
  for (std::size_t r = 1; r <= r_max; ++r) {
    auto ms = enumerate_matchings(2 * r, 1);
    auto poly = q_catalan(r);
    for (std::size_t k = 0; k < 2 * r; ++k) {
      std::size_t fixed = 0;
      for (const auto& m : ms) {
        PerfectMatching x = m;
        for (std::size_t j = 0; j < k; ++j) x = rotate_matching(x);
        if (x == m) ++fixed;
      }
      auto z = std::polar(1.0, std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(r));
      auto v = poly_eval(poly, z);
      ++report.instances;
      if (std::abs(v.imag()) >= 1e-6 ||
          std::abs(v.real() - static_cast<double>(fixed)) >= 1e-6)
        report.failures.push_back(
            "r=" + std::to_string(r) + " k=" + std::to_string(k) + ": " +
            std::to_string(fixed) + " fixed matchings, polynomial gives " +
            std::to_string(v.real()) + "+" + std::to_string(v.imag()) + "i");
    }
  }
  report.seconds = clock.seconds();
  return report;
}

// Inverse pairs: cell rules on all triples of size <= cell_max, Sundaram's
// map and the permutation map on the domains of the other suites.
inline TheoremReport check_roundtrips(std::size_t cell_max = 6,
                                      unsigned jobs = 1) {
  detail::Stopwatch clock;
  auto report = named_report("roundtrips");
  auto parts = partitions_up_to(cell_max);
  for (const auto& lam : parts) {
    std::vector<Partition> up{lam}, down{lam};
    for (std::size_t row = 0; row <= lam.length(); ++row) {
      if (row == 0 || lam[row] < lam[row - 1]) up.push_back(add_cell(lam, row));
      if (row < lam.length() && lam[row] > lam[row + 1])
        down.push_back(remove_cell(lam, row));
    }
    for (const auto& k : up)
      for (const auto& v : up)
        for (bool cross : {false, true}) {
          if (cross && (k != lam || v != lam)) continue;
          ++report.instances;
          auto mu = forward_cell(lam, k, v, cross);
          auto b = backward_cell(k, mu, v);
          if (b.lambda != lam || b.has_cross != cross)
            report.failures.push_back(
                "forward then backward at lambda=" + format_partition(lam) +
                " kappa=" + format_partition(k) + " nu=" + format_partition(v));
        }
    for (const auto& k : down)
      for (const auto& v : down) {
        ++report.instances;
        auto b = backward_cell(k, lam, v);
        if (forward_cell(b.lambda, k, v, b.has_cross) != lam)
          report.failures.push_back(
              "backward then forward at mu=" + format_partition(lam) +
              " kappa=" + format_partition(k) + " nu=" + format_partition(v));
      }
  }

  std::vector<OscillatingTableau> osc;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t r = 0; r <= 8; ++r)
      for (auto& o : enumerate_oscillating(r, n, !(n <= 2 && r <= 6)))
        osc.push_back(std::move(o));
  detail::check_items(
      report, osc, jobs, [](const OscillatingTableau& o, detail::Outcome& out) {
        auto s = sundaram(o);
        auto back = sundaram_inverse(s.matching, s.tableau, o.length(), o.rank());
        if (back != o)
          out.fail(detail::text_of(o) + ": Sundaram inverse gave " +
                   format_oscillating(back));
      });

  std::vector<AlternatingTableau> alt;
  for (std::size_t r = 1; r <= 5; ++r)
    for (std::size_t n : permutation_ranks(r))
      for (auto& a : enumerate_alternating(r, n, true)) alt.push_back(std::move(a));
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t n : {2 * r - 1, 2 * r})
      for (auto& a : enumerate_alternating(r, n)) alt.push_back(std::move(a));
  detail::check_items(
      report, alt, jobs, [](const AlternatingTableau& a, detail::Outcome& out) {
        auto g = perm_growth(a);
        auto back =
            perm_growth_inverse(g.permutation, g.p, g.q, a.length(), a.rank());
        if (back != a)
          out.fail(detail::text_of(a) + ": inverse gave " +
                   format_alternating(back));
      });
  report.seconds = clock.seconds();
  return report;
}

// Named suites with optional overrides of the default bounds.

struct SuiteBounds {
  std::optional<std::size_t> r_max;
  std::optional<std::size_t> n_max;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "matchings", "partial-matchings", "permutations", "partial-permutations",
      "stability", "cactus",            "gl2",          "crossing",
      "csp",       "roundtrips"};
  return names;
}

inline TheoremReport run_suite(const std::string& name, SuiteBounds b,
                               unsigned jobs = 1) {
  auto r = [&](std::size_t d) { return b.r_max.value_or(d); };
  auto n = [&](std::size_t d) { return b.n_max.value_or(d); };
  if (name == "matchings") return check_matching_theorems(r(8), n(3), false, jobs);
  if (name == "partial-matchings")
    return check_matching_theorems(r(6), n(2), true, jobs);
  if (name == "permutations") return check_permutation_theorems(r(5), jobs);
  if (name == "partial-permutations") return check_partial_theorems(r(3), jobs);
  if (name == "stability") return check_stability(r(4), n(6), jobs);
  if (name == "cactus") return check_cactus(r(5), n(2), r(4), n(4), jobs);
  if (name == "gl2") return check_gl2(r(7), jobs);
  if (name == "crossing") return check_crossing(r(10), n(3), jobs);
  if (name == "csp") return check_csp(r(6));
  if (name == "roundtrips") return check_roundtrips(6, jobs);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace cactus
