#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace genform {

/// Subset of anticommuting generators; bit i is generator i, ordered by bit
/// index. For forms, bit i stands for dx^{i+1}.
using Mask = std::uint32_t;

inline constexpr Mask bit(unsigned i) { return Mask{1} << i; }

inline int grade(Mask m) { return std::popcount(m); }

/// e_a * e_b = product_sign(a, b) * e_{a|b}; zero when the sets overlap.
/// The sign is the parity of pairs (i in a, j in b) with i > j.
inline int product_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign picked up by the left derivative with respect to generator `i` on e_m:
/// (-1)^(number of generators in m before i).
inline int left_derivative_sign(Mask m, unsigned i) { return (std::popcount(m & (bit(i) - 1)) & 1) ? -1 : 1; }

/// Strictly increasing 1-based index list, e.g. {1, 3}.
inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (Mask rest = m; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

}  // namespace genform
