#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "cactus/growth.hpp"
#include "cactus/shapes.hpp"
#include "cactus/tableaux.hpp"

namespace cactus {

// Least rank n for which every staircase of the embedding fits.
inline std::size_t minimal_embedding_rank(const OscillatingTableau& o) {
  std::size_t n = 1;
  for (std::size_t i = 0; i <= o.length(); ++i) {
    n = std::max(n, 2 * o[i].length());
    if (i > 0)
      n = std::max(n, join(o[i - 1], o[i]).length() +
                          meet(o[i - 1], o[i]).length());
  }
  return n;
}

// [w^i, w^i]_n on even positions, [w^{i-1} v w^i, w^{i-1} ^ w^i]_n between.
inline AlternatingTableau embed_osc_as_alt(const OscillatingTableau& o,
                                           std::size_t n) {
  std::size_t need = minimal_embedding_rank(o);
  if (n < need)
    throw TableauError("embedding needs rank at least " +
                       std::to_string(need));
  std::vector<Staircase> s;
  s.push_back(assemble_staircase(o[0], o[0], n));
  for (std::size_t i = 1; i <= o.length(); ++i) {
    s.push_back(
        assemble_staircase(join(o[i - 1], o[i]), meet(o[i - 1], o[i]), n));
    s.push_back(assemble_staircase(o[i], o[i], n));
  }
  return AlternatingTableau(std::move(s));
}

inline bool embeds_oscillating(const AlternatingTableau& a) {
  for (std::size_t i = 0; i < a.staircases().size(); i += 2)
    if (a[i].positive_part() != a[i].negative_part()) return false;
  auto g = perm_growth(a);
  for (auto [i, j] : g.permutation.arcs())
    if (i == j || g.permutation(j) != i) return false;
  return true;
}

// Positive parts of the even staircases; n defaults to the rank of a.
inline OscillatingTableau restrict_alt_to_osc(
    const AlternatingTableau& a, std::optional<std::size_t> n = std::nullopt) {
  if (!embeds_oscillating(a))
    throw TableauError(
        "filling is not symmetric without diagonal crosses");
  std::vector<Partition> shapes;
  for (std::size_t i = 0; i < a.staircases().size(); i += 2)
    shapes.push_back(a[i].positive_part());
  OscillatingTableau o(std::move(shapes), n.value_or(a.rank()));
  if (embed_osc_as_alt(o, a.rank()) != a)
    throw TableauError("odd staircases are not joins over meets");
  return o;
}

}  // namespace cactus
