#pragma once

#include <bit>

#include "simon/types.hpp"

namespace simon {

// Circular shifts. Shift counts are reduced mod 64 at this boundary; the
// cipher internals only ever use the constants 1, 2, 3 and 8.
[[nodiscard]] constexpr Word rotl(Word w, unsigned j) noexcept {
  return std::rotl(w, static_cast<int>(j & 63u));
}

[[nodiscard]] constexpr Word rotr(Word w, unsigned j) noexcept {
  return std::rotr(w, static_cast<int>(j & 63u));
}

// One Feistel round:
//   (l, r) -> ((S1(l) & S8(l)) ^ S2(l) ^ r ^ k, l)
[[nodiscard]] constexpr Block round_forward(Word l, Word r, Word k) noexcept {
  return {(rotl(l, 1) & rotl(l, 8)) ^ rotl(l, 2) ^ r ^ k, l};
}

// Exact inverse of round_forward under the same round key:
//   (l, r) -> (r, (S1(r) & S8(r)) ^ S2(r) ^ l ^ k)
[[nodiscard]] constexpr Block round_inverse(Word l, Word r, Word k) noexcept {
  return {r, (rotl(r, 1) & rotl(r, 8)) ^ rotl(r, 2) ^ l ^ k};
}

}  // namespace simon
