#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "simon/block_cipher.hpp"
#include "simon/key_schedule.hpp"
#include "simon/types.hpp"

namespace simon {

// Counter-block layout: l = nonce, r = counter. The counter increments per
// keystream block; a (nonce, counter) pair must never repeat under one key.
struct CtrParams {
  Word nonce = 0;
  Word initial_counter = 0;
};

// CTR keystream XOR. No padding; the final keystream block is truncated to
// the data length, and applying the transform twice restores the input.
// Keystream block j is encrypt_block({nonce, initial_counter + j}); counter
// wraparound past 2^64 - 1 throws Error.
[[nodiscard]] std::vector<std::uint8_t> ctr_transform(const SimonConfig& config,
                                                      std::span<const Word> round_keys,
                                                      const CtrParams& params,
                                                      std::span<const std::uint8_t> data);

}  // namespace simon
