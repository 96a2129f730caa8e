#include "simon/block_cipher.hpp"

#include <string>

#include "simon/errors.hpp"
#include "simon/word_ops.hpp"

namespace simon {
namespace {

void check_key_count(const SimonConfig& config, std::span<const Word> round_keys) {
  if (static_cast<int>(round_keys.size()) != config.rounds) {
    throw InvalidStateError("round-key sequence has " +
                            std::to_string(round_keys.size()) + " entries, " +
                            std::to_string(config.rounds) + " rounds configured");
  }
}

}  // namespace

Block block_from_bytes(std::span<const std::uint8_t, 16> bytes) {
  Block b;
  for (int i = 0; i < 8; ++i) {
    b.l = (b.l << 8) | bytes[static_cast<std::size_t>(i)];
    b.r = (b.r << 8) | bytes[static_cast<std::size_t>(i + 8)];
  }
  return b;
}

std::array<std::uint8_t, 16> block_to_bytes(const Block& b) {
  std::array<std::uint8_t, 16> out{};
  for (int i = 0; i < 8; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b.l >> (56 - 8 * i));
    out[static_cast<std::size_t>(i + 8)] = static_cast<std::uint8_t>(b.r >> (56 - 8 * i));
  }
  return out;
}

Block encrypt_block(const SimonConfig& config, std::span<const Word> round_keys,
                    const Block& p) {
  check_key_count(config, round_keys);
  Block b = p;
  for (const Word k : round_keys) {
    b = round_forward(b.l, b.r, k);
  }
  return b;
}

Block decrypt_block(const SimonConfig& config, std::span<const Word> round_keys,
                    const Block& ct) {
  check_key_count(config, round_keys);
  Block b = ct;
  for (std::size_t i = round_keys.size(); i-- > 0;) {
    b = round_inverse(b.l, b.r, round_keys[i]);
  }
  return b;
}

}  // namespace simon
