#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cactus {

using Int = std::int64_t;

// Raised for malformed shapes, tableaux and diagrams.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ferrers shape. Trailing zeros are never stored.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw ShapeError("partition has a negative part");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw ShapeError("partition parts must weakly decrease");
    }
  }

  Partition(std::initializer_list<Int> parts)
      : Partition(std::vector<Int>(parts)) {}

  const std::vector<Int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Int size() const {
    Int total = 0;
    for (Int p : parts_) total += p;
    return total;
  }

  Int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  // Parts followed by zeros up to length n.
  std::vector<Int> padded(std::size_t n) const {
    if (parts_.size() > n)
      throw ShapeError("partition has more than " + std::to_string(n) +
                       " parts");
    std::vector<Int> v(parts_);
    v.resize(n, 0);
    return v;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

// Weakly decreasing integer vector of fixed length (the rank).
class Staircase {
 public:
  Staircase() = default;

  explicit Staircase(std::vector<Int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
      if (entries_[i] < entries_[i + 1])
        throw ShapeError("staircase entries must weakly decrease");
  }

  Staircase(std::initializer_list<Int> entries)
      : Staircase(std::vector<Int>(entries)) {}

  static Staircase zero(std::size_t n) {
    return Staircase(std::vector<Int>(n, 0));
  }

  std::size_t rank() const { return entries_.size(); }
  const std::vector<Int>& entries() const { return entries_; }
  Int operator[](std::size_t i) const { return entries_.at(i); }

  std::size_t extent() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(),
                      [](Int x) { return x != 0; }));
  }

  bool is_zero() const { return extent() == 0; }

  Partition positive_part() const {
    std::vector<Int> p;
    for (Int x : entries_)
      if (x > 0) p.push_back(x);
    return Partition(std::move(p));
  }

  Partition negative_part() const {
    std::vector<Int> q;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (*it < 0) q.push_back(-*it);
    return Partition(std::move(q));
  }

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Int> entries_;
};

enum class WeylFamily { symmetric, hyperoctahedral };

struct WeylKind {
  WeylFamily family = WeylFamily::symmetric;
  std::size_t rank = 1;

  static WeylKind symmetric(std::size_t n) {
    return {WeylFamily::symmetric, n};
  }
  static WeylKind hyperoctahedral(std::size_t n) {
    return {WeylFamily::hyperoctahedral, n};
  }

  friend bool operator==(const WeylKind&, const WeylKind&) = default;
};

// Dominant representative of the orbit of v.
inline Staircase dominant(std::span<const Int> v, WeylKind w) {
  if (v.size() != w.rank)
    throw ShapeError("vector length " + std::to_string(v.size()) +
                     " does not match rank " + std::to_string(w.rank));
  std::vector<Int> out(v.begin(), v.end());
  if (w.family == WeylFamily::hyperoctahedral)
    for (Int& x : out) x = x < 0 ? -x : x;
  std::sort(out.begin(), out.end(), std::greater<>());
  return Staircase(std::move(out));
}

inline std::pair<Partition, Partition> split_staircase(const Staircase& s) {
  return {s.positive_part(), s.negative_part()};
}

// The staircase [pos, neg]_n.
inline Staircase assemble_staircase(const Partition& pos, const Partition& neg,
                                    std::size_t n) {
  if (pos.length() + neg.length() > n)
    throw ShapeError("parts of lengths " + std::to_string(pos.length()) +
                     " and " + std::to_string(neg.length()) +
                     " do not fit in rank " + std::to_string(n));
  std::vector<Int> v(n, 0);
  for (std::size_t i = 0; i < pos.length(); ++i) v[i] = pos[i];
  for (std::size_t i = 0; i < neg.length(); ++i) v[n - 1 - i] = -neg[i];
  return Staircase(std::move(v));
}

inline std::size_t extent(const Staircase& s) { return s.extent(); }

inline Partition join(const Partition& a, const Partition& b) {
  std::vector<Int> v(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a[i], b[i]);
  return Partition(std::move(v));
}

inline Partition meet(const Partition& a, const Partition& b) {
  std::vector<Int> v(std::min(a.length(), b.length()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a[i], b[i]);
  return Partition(std::move(v));
}

inline Partition conjugate(const Partition& p) {
  std::vector<Int> v(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (Int part : p.parts())
    for (Int j = 0; j < part; ++j) ++v[static_cast<std::size_t>(j)];
  return Partition(std::move(v));
}

// Rows are 0-based.
inline Partition add_cell(const Partition& p, std::size_t row) {
  std::vector<Int> v = p.padded(std::max(p.length(), row + 1));
  ++v[row];
  if (row > 0 && v[row] > v[row - 1])
    throw ShapeError("cannot add a cell in row " + std::to_string(row + 1));
  return Partition(std::move(v));
}

inline Partition remove_cell(const Partition& p, std::size_t row) {
  if (row >= p.length() || p[row] <= p[row + 1])
    throw ShapeError("cannot remove a cell from row " +
                     std::to_string(row + 1));
  std::vector<Int> v(p.parts());
  --v[row];
  return Partition(std::move(v));
}

// Row (0-based) of the single cell by which `larger` exceeds `smaller`, or
// -1 when the two do not differ by exactly one cell in that direction.
inline int added_cell_row(const Partition& smaller, const Partition& larger) {
  if (larger.size() != smaller.size() + 1) return -1;
  int row = -1;
  for (std::size_t i = 0; i < larger.length(); ++i) {
    Int d = larger[i] - smaller[i];
    if (d == 0) continue;
    if (d != 1 || row != -1) return -1;
    row = static_cast<int>(i);
  }
  return row;
}

inline bool differ_by_one_cell(const Partition& a, const Partition& b) {
  return added_cell_row(a, b) >= 0 || added_cell_row(b, a) >= 0;
}

// Compact text forms.

namespace detail {

inline Int parse_int(std::string_view s, std::string_view what) {
  Int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw ShapeError("malformed " + std::string(what) + ": '" +
                     std::string(s) + "'");
  return value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

// "211" when every part is at most 9, "12,3" otherwise; the empty partition
// is "0" and a lone large part keeps a trailing zero ("12,0").
inline std::string format_partition(const Partition& p) {
  if (p.empty()) return "0";
  bool small = std::all_of(p.parts().begin(), p.parts().end(),
                           [](Int x) { return x <= 9; });
  std::string out;
  if (small) {
    for (Int x : p.parts()) out += static_cast<char>('0' + x);
    return out;
  }
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  if (p.length() == 1) out += ",0";
  return out;
}

inline Partition parse_partition(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw ShapeError("empty partition text");
  std::vector<Int> parts;
  if (s.find(',') != std::string_view::npos) {
    for (auto field : detail::split(s, ','))
      parts.push_back(detail::parse_int(detail::trim(field), "partition"));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9')
        throw ShapeError("malformed partition: '" + std::string(s) + "'");
      parts.push_back(c - '0');
    }
  }
  return Partition(std::move(parts));
}

// "2,0,-1"
inline std::string format_staircase(const Staircase& s) {
  std::string out;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

inline Staircase parse_staircase(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw ShapeError("empty staircase text");
  std::vector<Int> v;
  for (auto field : detail::split(s, ','))
    v.push_back(detail::parse_int(detail::trim(field), "staircase"));
  return Staircase(std::move(v));
}

}  // namespace cactus
