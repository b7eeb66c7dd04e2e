#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cactus/shapes.hpp"

namespace cactus {

class TableauError : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

namespace detail {

// Index (0-based) of the single coordinate where b - a = sign * e_k, or -1.
inline int unit_step(const Staircase& a, const Staircase& b, int sign) {
  if (a.rank() != b.rank()) return -1;
  int k = -1;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Int d = b[i] - a[i];
    if (d == 0) continue;
    if (d != sign || k != -1) return -1;
    k = static_cast<int>(i);
  }
  return k;
}

}  // namespace detail

// Sequence of partitions from the empty shape, one cell added or removed per
// step, each with at most n parts.
class OscillatingTableau {
 public:
  OscillatingTableau() = default;

  OscillatingTableau(std::vector<Partition> shapes, std::size_t n)
      : shapes_(std::move(shapes)), n_(n) {
    if (n_ < 1) throw TableauError("rank must be at least 1");
    if (shapes_.empty() || !shapes_.front().empty())
      throw TableauError("oscillating tableau must start at the empty shape");
    for (std::size_t i = 0; i < shapes_.size(); ++i) {
      if (shapes_[i].length() > n_)
        throw TableauError("shape " + std::to_string(i) + " has more than " +
                           std::to_string(n_) + " parts");
      if (i > 0 && !differ_by_one_cell(shapes_[i - 1], shapes_[i]))
        throw TableauError("shapes " + std::to_string(i - 1) + " and " +
                           std::to_string(i) + " do not differ by one cell");
    }
  }

  // Positive parts of a sequence of dominant weights of the hyperoctahedral
  // group (nonnegative staircases).
  static OscillatingTableau from_weights(const std::vector<Staircase>& weights,
                                         std::size_t n) {
    std::vector<Partition> shapes;
    shapes.reserve(weights.size());
    for (const auto& w : weights) {
      if (!w.negative_part().empty())
        throw TableauError("negative entry in an oscillating weight");
      shapes.push_back(w.positive_part());
    }
    return OscillatingTableau(std::move(shapes), n);
  }

  const std::vector<Partition>& shapes() const { return shapes_; }
  const Partition& operator[](std::size_t i) const { return shapes_.at(i); }
  std::size_t rank() const { return n_; }
  std::size_t length() const { return shapes_.size() - 1; }
  const Partition& shape() const { return shapes_.back(); }

  std::vector<Staircase> weights() const {
    std::vector<Staircase> out;
    out.reserve(shapes_.size());
    for (const auto& p : shapes_) out.emplace_back(p.padded(n_));
    return out;
  }

  // First k steps.
  OscillatingTableau prefix(std::size_t k) const {
    return OscillatingTableau(
        std::vector<Partition>(shapes_.begin(), shapes_.begin() + k + 1), n_);
  }

  friend bool operator==(const OscillatingTableau&,
                         const OscillatingTableau&) = default;
  friend auto operator<=>(const OscillatingTableau&,
                          const OscillatingTableau&) = default;

 private:
  std::vector<Partition> shapes_{Partition()};
  std::size_t n_ = 1;
};

// Staircases mu^0..mu^{2r}: even to odd adds e_k, odd to even subtracts e_l.
class AlternatingTableau {
 public:
  AlternatingTableau() = default;

  explicit AlternatingTableau(std::vector<Staircase> staircases)
      : s_(std::move(staircases)) {
    if (s_.empty() || s_.size() % 2 == 0)
      throw TableauError("alternating tableau needs an odd number of entries");
    std::size_t n = s_.front().rank();
    if (n < 1) throw TableauError("rank must be at least 1");
    if (!s_.front().is_zero())
      throw TableauError("alternating tableau must start at zero");
    for (std::size_t i = 1; i < s_.size(); ++i) {
      if (s_[i].rank() != n)
        throw TableauError("staircase " + std::to_string(i) +
                           " has the wrong rank");
      int sign = (i % 2 == 1) ? 1 : -1;
      if (detail::unit_step(s_[i - 1], s_[i], sign) < 0)
        throw TableauError("step " + std::to_string(i) + " must " +
                           (sign > 0 ? "add" : "subtract") +
                           " 1 in exactly one entry");
    }
  }

  const std::vector<Staircase>& staircases() const { return s_; }
  const Staircase& operator[](std::size_t i) const { return s_.at(i); }
  std::size_t rank() const { return s_.front().rank(); }
  std::size_t length() const { return (s_.size() - 1) / 2; }
  const Staircase& shape() const { return s_.back(); }

  AlternatingTableau prefix(std::size_t k) const {
    return AlternatingTableau(
        std::vector<Staircase>(s_.begin(), s_.begin() + 2 * k + 1));
  }

  friend bool operator==(const AlternatingTableau&,
                         const AlternatingTableau&) = default;
  friend auto operator<=>(const AlternatingTableau&,
                          const AlternatingTableau&) = default;

 private:
  std::vector<Staircase> s_{Staircase::zero(1)};
};

// Staircases whose consecutive entries differ by a unit vector (either sign).
class StaircaseTableau {
 public:
  StaircaseTableau() = default;

  explicit StaircaseTableau(std::vector<Staircase> staircases)
      : s_(std::move(staircases)) {
    if (s_.empty()) throw TableauError("staircase tableau is empty");
    for (std::size_t i = 1; i < s_.size(); ++i)
      if (detail::unit_step(s_[i - 1], s_[i], 1) < 0 &&
          detail::unit_step(s_[i - 1], s_[i], -1) < 0)
        throw TableauError("staircases " + std::to_string(i - 1) + " and " +
                           std::to_string(i) +
                           " do not differ by a unit vector");
  }

  const std::vector<Staircase>& staircases() const { return s_; }
  const Staircase& operator[](std::size_t i) const { return s_.at(i); }
  std::size_t size() const { return s_.size(); }
  bool straight() const { return s_.front().is_zero(); }

  friend bool operator==(const StaircaseTableau&,
                         const StaircaseTableau&) = default;

 private:
  std::vector<Staircase> s_;
};

// Words. A symplectic letter is +j for e_j and -j for -e_j; an adjoint
// letter is the pair (e_plus, -e_minus). Indices are 1-based.

using SymplecticWord = std::vector<int>;

struct AdjointLetter {
  int plus = 1;
  int minus = 1;
  friend bool operator==(const AdjointLetter&, const AdjointLetter&) = default;
};

using AdjointWord = std::vector<AdjointLetter>;

inline OscillatingTableau oscillating_from_word(const SymplecticWord& w,
                                                std::size_t n) {
  std::vector<Partition> shapes{Partition()};
  for (std::size_t q = 0; q < w.size(); ++q) {
    int j = w[q] < 0 ? -w[q] : w[q];
    if (j < 1 || static_cast<std::size_t>(j) > n)
      throw TableauError("letter " + std::to_string(q + 1) + " out of range");
    std::vector<Int> v = shapes.back().padded(n);
    v[static_cast<std::size_t>(j - 1)] += w[q] > 0 ? 1 : -1;
    try {
      shapes.emplace_back(std::move(v));
    } catch (const ShapeError&) {
      throw TableauError("word is not highest weight at letter " +
                         std::to_string(q + 1));
    }
  }
  return OscillatingTableau(std::move(shapes), n);
}

inline SymplecticWord word_from_oscillating(const OscillatingTableau& o) {
  SymplecticWord w;
  for (std::size_t i = 1; i <= o.length(); ++i) {
    int up = added_cell_row(o[i - 1], o[i]);
    if (up >= 0)
      w.push_back(up + 1);
    else
      w.push_back(-(added_cell_row(o[i], o[i - 1]) + 1));
  }
  return w;
}

inline AlternatingTableau alternating_from_word(const AdjointWord& w,
                                                std::size_t n) {
  std::vector<Staircase> s{Staircase::zero(n)};
  for (std::size_t q = 0; q < w.size(); ++q) {
    for (int half = 0; half < 2; ++half) {
      int k = half == 0 ? w[q].plus : w[q].minus;
      if (k < 1 || static_cast<std::size_t>(k) > n)
        throw TableauError("letter " + std::to_string(q + 1) +
                           " out of range");
      std::vector<Int> v = s.back().entries();
      v[static_cast<std::size_t>(k - 1)] += half == 0 ? 1 : -1;
      try {
        s.emplace_back(std::move(v));
      } catch (const ShapeError&) {
        throw TableauError("word is not highest weight at letter " +
                           std::to_string(q + 1));
      }
    }
  }
  return AlternatingTableau(std::move(s));
}

inline AdjointWord word_from_alternating(const AlternatingTableau& a) {
  AdjointWord w;
  for (std::size_t q = 0; q < a.length(); ++q) {
    int k = detail::unit_step(a[2 * q], a[2 * q + 1], 1);
    int l = detail::unit_step(a[2 * q + 1], a[2 * q + 2], -1);
    w.push_back({k + 1, l + 1});
  }
  return w;
}

// Rank changes for the stability theorem.

inline Staircase change_rank(const Staircase& s, std::size_t m) {
  return assemble_staircase(s.positive_part(), s.negative_part(), m);
}

inline AlternatingTableau strip_zeros(const AlternatingTableau& a,
                                      std::size_t m) {
  if (m < 1) throw TableauError("rank must be at least 1");
  std::vector<Staircase> out;
  out.reserve(a.staircases().size());
  for (std::size_t i = 0; i < a.staircases().size(); ++i) {
    if (a[i].extent() > m)
      throw TableauError("staircase " + std::to_string(i) + " has extent " +
                         std::to_string(a[i].extent()) + " > " +
                         std::to_string(m));
    out.push_back(change_rank(a[i], m));
  }
  return AlternatingTableau(std::move(out));
}

inline AlternatingTableau pad_zeros(const AlternatingTableau& a,
                                    std::size_t n) {
  if (n < a.rank())
    throw TableauError("cannot pad rank " + std::to_string(a.rank()) +
                       " down to " + std::to_string(n));
  std::vector<Staircase> out;
  out.reserve(a.staircases().size());
  for (const auto& s : a.staircases()) out.push_back(change_rank(s, n));
  return AlternatingTableau(std::move(out));
}

inline std::size_t max_extent(const std::vector<Staircase>& seq) {
  std::size_t m = 0;
  for (const auto& s : seq) m = std::max(m, s.extent());
  return m;
}

// Text forms: semicolon-separated shapes.

inline std::string format_oscillating(const OscillatingTableau& o) {
  std::string out;
  for (std::size_t i = 0; i < o.shapes().size(); ++i) {
    if (i) out += ';';
    out += format_partition(o[i]);
  }
  return out;
}

inline std::string format_alternating(const AlternatingTableau& a) {
  std::string out;
  for (std::size_t i = 0; i < a.staircases().size(); ++i) {
    if (i) out += ';';
    out += format_staircase(a[i]);
  }
  return out;
}

inline std::string format_staircases(const std::vector<Staircase>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ';';
    out += format_staircase(seq[i]);
  }
  return out;
}

inline OscillatingTableau parse_oscillating(std::string_view text,
                                            std::size_t n) {
  std::vector<Partition> shapes;
  for (auto field : detail::split(detail::trim(text), ';'))
    shapes.push_back(parse_partition(field));
  return OscillatingTableau(std::move(shapes), n);
}

inline AlternatingTableau parse_alternating(std::string_view text) {
  std::vector<Staircase> s;
  for (auto field : detail::split(detail::trim(text), ';'))
    s.push_back(parse_staircase(field));
  return AlternatingTableau(std::move(s));
}

inline std::string format_word(const SymplecticWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += (w[i] < 0 ? "-e" : "e") + std::to_string(w[i] < 0 ? -w[i] : w[i]);
  }
  return out;
}

inline std::string format_word(const AdjointWord& w) {
  std::string out;
  for (const auto& l : w)
    out += "(e" + std::to_string(l.plus) + ",-e" + std::to_string(l.minus) +
           ")";
  return out;
}

}  // namespace cactus
