#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cgcore {

// Vertex / element subsets at desk scale are bitmasks over at most 62 ids.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool contains(Mask m, int i) { return (m >> i) & 1ULL; }

inline Mask full_mask(int n) {
  return n == 0 ? 0ULL : (~0ULL >> (64 - n));
}

inline std::vector<int> mask_to_vector(Mask m) {
  std::vector<int> out;
  for (Mask rest = m; rest; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

inline Mask mask_from_vector(const std::vector<int>& items) {
  Mask m = 0;
  for (int i : items) m |= 1ULL << i;
  return m;
}

inline std::string set_to_string(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_to_vector(m)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace cgcore
