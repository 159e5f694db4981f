#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "topolab/config.hpp"

namespace topolab {

// Subsets of {0..n-1} are bitmasks; bit p set means point p is a member.
using Mask = std::uint64_t;

constexpr int kMaxPoints = 64;

constexpr Mask full_mask(int n) {
  return n >= kMaxPoints ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr bool has_point(Mask m, int p) { return (m >> p) & 1; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_point(Mask m) { return std::countr_zero(m); }

inline std::vector<int> mask_points(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask points_mask(const std::vector<int>& points, int n) {
  Mask m = 0;
  for (int p : points) {
    if (p < 0 || p >= n) {
      throw InputError("point " + std::to_string(p) + " out of range 0.." +
                       std::to_string(n - 1));
    }
    m |= Mask{1} << p;
  }
  return m;
}

}  // namespace topolab
