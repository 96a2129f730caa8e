#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "simon/types.hpp"

namespace simon {

// One of the three 62-bit round-constant sequences z2, z3, z4. Indexing past
// the end wraps: the bit used at round i is bits[i mod 62].
struct ZSequence {
  int index{};                          // 2, 3 or 4
  std::array<std::uint8_t, 62> bits{};  // each entry is 0 or 1

  [[nodiscard]] constexpr std::size_t length() const noexcept { return bits.size(); }

  [[nodiscard]] constexpr std::uint8_t bit(std::size_t round) const noexcept {
    return bits[round % bits.size()];
  }
};

// z_j for j in {2, 3, 4}. Any other index throws InvalidConfigError.
[[nodiscard]] const ZSequence& z_sequence(int j);

// The key-schedule constant word c = 2^64 - 4, identical for every round and
// every key size.
[[nodiscard]] constexpr Word round_constant() noexcept {
  return 0xFFFFFFFFFFFFFFFCull;
}

}  // namespace simon
