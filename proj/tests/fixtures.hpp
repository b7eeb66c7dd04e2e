#pragma once

// Worked tableaux and a reader for the digit-per-entry staircase notation
// ("20-1" is (2,0,-1)) used by the expected values in the tests.

#include <string>
#include <string_view>
#include <vector>

#include "cactus/shapes.hpp"
#include "cactus/tableaux.hpp"

namespace fixtures {

inline cactus::Staircase stair(std::string_view digits) {
  std::vector<cactus::Int> v;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == '-') {
      v.push_back(-(digits[++i] - '0'));
    } else {
      v.push_back(digits[i] - '0');
    }
  }
  return cactus::Staircase(std::move(v));
}

inline std::vector<cactus::Staircase> stairs(
    const std::vector<std::string>& items) {
  std::vector<cactus::Staircase> out;
  for (const auto& s : items) out.push_back(stair(s));
  return out;
}

inline cactus::AlternatingTableau alt(const std::vector<std::string>& items) {
  return cactus::AlternatingTableau(stairs(items));
}

// GL(3), length 5, empty shape; its permutation is 54123.
inline cactus::AlternatingTableau promotion_input() {
  return alt({"000", "100", "10-1", "20-1", "2-1-1", "20-1", "2-1-1", "20-1",
              "10-1", "100", "000"});
}

// GL(3), length 7, shape (2,1,-3).
inline cactus::AlternatingTableau evacuation_input() {
  return alt({"000", "100", "10-1", "20-1", "20-2", "20-1", "2-1-1", "3-1-1",
              "2-1-1", "20-1", "20-2", "30-2", "30-3", "31-3", "21-3"});
}

// Rank-3 oscillating tableau of length 9 and shape 21.
inline cactus::OscillatingTableau oscillating_nine() {
  return cactus::parse_oscillating("0;1;11;21;2;21;11;21;211;21", 3);
}

// GL(2), length 8, empty shape; its permutation is 81754362.
inline cactus::AlternatingTableau gl2_eight() {
  return alt({"00", "10", "1-1", "10", "1-1", "2-1", "2-2", "3-2", "3-3",
              "3-2", "2-2", "2-1", "2-2", "2-1", "1-1", "10", "00"});
}

// Rank 13 padding of the length-7 GL(3) tableau.
inline cactus::AlternatingTableau partial_permutation_input() {
  return cactus::pad_zeros(evacuation_input(), 13);
}

}  // namespace fixtures
