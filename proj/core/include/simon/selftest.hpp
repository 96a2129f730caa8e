#pragma once

#include <iosfwd>
#include <optional>
#include <span>

namespace simon::selftest {

struct KatVector {
  int key_size_bits;
  const char* key_hex;
  const char* plaintext_hex;
  const char* ciphertext_hex;
};

// The published known-answer vectors, one per key size.
[[nodiscard]] std::span<const KatVector> vectors();

// Fault-injection hook: flip bit `bit` (0..61) of z-sequence z_index before
// running, to demonstrate that the suite catches table corruption.
struct ZMutation {
  int z_index;  // 2, 3 or 4
  int bit;      // 0..61
};

// Encrypts and decrypts every known-answer vector, writing one diagnostic
// line per check. Returns true iff every check matched.
bool run(std::ostream& diag, const std::optional<ZMutation>& mutate = std::nullopt);

}  // namespace simon::selftest
