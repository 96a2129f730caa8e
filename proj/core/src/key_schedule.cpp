#include "simon/key_schedule.hpp"

#include <array>
#include <string>

#include "simon/errors.hpp"
#include "simon/hex.hpp"
#include "simon/word_ops.hpp"

namespace simon {
namespace {

constexpr std::array<SimonConfig, 3> kConfigs{{
    {128, 2, 2, 68},
    {192, 3, 3, 69},
    {256, 4, 4, 72},
}};

}  // namespace

const SimonConfig& config_for_key_size(int key_size_bits) {
  for (const SimonConfig& c : kConfigs) {
    if (c.key_size_bits == key_size_bits) return c;
  }
  throw InvalidConfigError("unsupported key size " + std::to_string(key_size_bits) +
                           ", expected 128, 192 or 256");
}

std::span<const SimonConfig> all_configs() { return kConfigs; }

MasterKey MasterKey::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != 16 && bytes.size() != 24 && bytes.size() != 32) {
    throw InvalidKeyError("master key must be 16, 24 or 32 bytes, got " +
                          std::to_string(bytes.size()));
  }
  MasterKey key;
  key.words.reserve(bytes.size() / 8);
  for (std::size_t w = 0; w < bytes.size(); w += 8) {
    Word v = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      v = (v << 8) | bytes[w + b];
    }
    key.words.push_back(v);
  }
  return key;
}

MasterKey MasterKey::from_hex(std::string_view hex) {
  return from_bytes(parse_hex(hex));
}

RoundKeys expand_keys(const SimonConfig& config, const MasterKey& master) {
  return expand_keys(config, master, z_sequence(config.z_index));
}

RoundKeys expand_keys(const SimonConfig& config, const MasterKey& master,
                      const ZSequence& z) {
  if (static_cast<int>(master.words.size()) != config.m) {
    throw InvalidKeyError("master key has " + std::to_string(master.words.size()) +
                          " words, configuration needs " + std::to_string(config.m));
  }

  RoundKeys keys;
  keys.reserve(static_cast<std::size_t>(config.rounds));
  for (int i = 0; i < config.m && i < config.rounds; ++i) {
    keys.push_back(master.words[static_cast<std::size_t>(config.m - 1 - i)]);
  }

  const Word c = round_constant();
  for (int i = config.m; i < config.rounds; ++i) {
    Word t = rotr(keys[static_cast<std::size_t>(i - 1)], 3);
    if (config.m == 4) {
      t ^= keys[static_cast<std::size_t>(i - 3)];
    }
    t ^= rotr(t, 1);
    keys.push_back(c ^ z.bit(static_cast<std::size_t>(i - config.m)) ^
                   keys[static_cast<std::size_t>(i - config.m)] ^ t);
  }
  return keys;
}

}  // namespace simon
