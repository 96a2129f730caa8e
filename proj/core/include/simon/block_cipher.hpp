#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "simon/key_schedule.hpp"
#include "simon/types.hpp"

namespace simon {

// 16-byte block serialization is big-endian: bytes 0..7 form l, bytes 8..15
// form r, matching the conventional presentation of SIMON test vectors.
[[nodiscard]] Block block_from_bytes(std::span<const std::uint8_t, 16> bytes);
[[nodiscard]] std::array<std::uint8_t, 16> block_to_bytes(const Block& b);

// T iterated forward rounds, round i keyed with round_keys[i]. The key
// sequence length must equal the configuration's round count
// (InvalidStateError otherwise).
[[nodiscard]] Block encrypt_block(const SimonConfig& config,
                                  std::span<const Word> round_keys, const Block& p);

// Exact inverse of encrypt_block under the same round keys.
[[nodiscard]] Block decrypt_block(const SimonConfig& config,
                                  std::span<const Word> round_keys, const Block& ct);

}  // namespace simon
