#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "simon/constants.hpp"
#include "simon/types.hpp"

namespace simon {

// One row of the SIMON-128 parameter table: key size, key word count m, the
// z sequence feeding the schedule, and the round count T.
struct SimonConfig {
  int key_size_bits{};  // 128, 192 or 256 (= 64 * m)
  int m{};              // 2, 3 or 4
  int z_index{};        // 2, 3 or 4
  int rounds{};         // 68, 69 or 72

  // Truncated-round copy for round-iteration equivalence tests. Never a
  // deployable configuration; nothing in the public lookup hands one out.
  [[nodiscard]] SimonConfig reduced_for_tests(int rounds_t) const {
    SimonConfig c = *this;
    c.rounds = rounds_t;
    return c;
  }
};

// Deployable configurations, keyed by key size. Throws InvalidConfigError for
// anything but 128, 192 and 256.
[[nodiscard]] const SimonConfig& config_for_key_size(int key_size_bits);

// The three table rows, in key-size order.
[[nodiscard]] std::span<const SimonConfig> all_configs();

// Master key words ordered k_{m-1} .. k_0, most-significant word first. This
// matches the usual hex presentation of SIMON keys; the last word is the first
// one consumed by the schedule.
struct MasterKey {
  std::vector<Word> words;

  // Big-endian byte string, 16/24/32 bytes.
  [[nodiscard]] static MasterKey from_bytes(std::span<const std::uint8_t> bytes);
  // Hex form of the same; 32/48/64 characters.
  [[nodiscard]] static MasterKey from_hex(std::string_view hex);
};

// keys[i] is the round-i key; length equals the configuration's round count.
using RoundKeys = std::vector<Word>;

// Expand an m-word master key into T round keys:
//   keys[i]     = master, for i < m (k_0 first)
//   keys[i + m] = c ^ z[i mod 62] ^ keys[i] ^ (I ^ S^-1)(S^-3 keys[i+m-1])
// with the m = 4 case XORing keys[i+1] into the S^-3 term first.
[[nodiscard]] RoundKeys expand_keys(const SimonConfig& config, const MasterKey& master);

// Same recurrence with a caller-supplied z table. The selftest's
// fault-injection hook runs corrupted tables through this overload.
[[nodiscard]] RoundKeys expand_keys(const SimonConfig& config, const MasterKey& master,
                                    const ZSequence& z);

}  // namespace simon
