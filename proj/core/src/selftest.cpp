#include "simon/selftest.hpp"

#include <array>
#include <ostream>
#include <string>

#include "simon/block_cipher.hpp"
#include "simon/errors.hpp"
#include "simon/hex.hpp"
#include "simon/key_schedule.hpp"

namespace simon::selftest {
namespace {

constexpr std::array<KatVector, 3> kVectors{{
    {128, "0f0e0d0c0b0a09080706050403020100",
     "63736564207372656c6c657661727420", "49681b1e1e54fe3f65aa832af84e0bbc"},
    {192, "17161514131211100f0e0d0c0b0a09080706050403020100",
     "206572656874206e6568772065626972", "c4ac61effcdc0d4f6c9c8d6e2597b85b"},
    {256, "1f1e1d1c1b1a191817161514131211100f0e0d0c0b0a09080706050403020100",
     "74206e69206d6f6f6d69732061207369", "8d2b5579afc8a3a03bf72a87efe7b868"},
}};

Block block_from_hex(const char* hex) {
  const auto bytes = parse_hex(hex);
  return block_from_bytes(std::span<const std::uint8_t, 16>(bytes.data(), 16));
}

std::string hex_of(const Block& b) {
  return format_hex(block_to_bytes(b));
}

}  // namespace

std::span<const KatVector> vectors() { return kVectors; }

bool run(std::ostream& diag, const std::optional<ZMutation>& mutate) {
  if (mutate && (mutate->bit < 0 || mutate->bit > 61)) {
    throw InvalidConfigError("z mutation bit must be in 0..61, got " +
                             std::to_string(mutate->bit));
  }

  bool all_ok = true;
  for (const KatVector& v : kVectors) {
    const SimonConfig& cfg = config_for_key_size(v.key_size_bits);
    ZSequence z = z_sequence(cfg.z_index);
    if (mutate && mutate->z_index == cfg.z_index) {
      z.bits[static_cast<std::size_t>(mutate->bit)] ^= 1;
    }

    const MasterKey key = MasterKey::from_hex(v.key_hex);
    const RoundKeys rk = expand_keys(cfg, key, z);
    const Block pt = block_from_hex(v.plaintext_hex);
    const Block ct = block_from_hex(v.ciphertext_hex);

    const Block got_ct = encrypt_block(cfg, rk, pt);
    const bool enc_ok = got_ct == ct;
    diag << (enc_ok ? "ok  " : "FAIL") << "  simon128/" << v.key_size_bits
         << " encrypt: got " << hex_of(got_ct) << " want " << v.ciphertext_hex << '\n';

    const Block got_pt = decrypt_block(cfg, rk, ct);
    const bool dec_ok = got_pt == pt;
    diag << (dec_ok ? "ok  " : "FAIL") << "  simon128/" << v.key_size_bits
         << " decrypt: got " << hex_of(got_pt) << " want " << v.plaintext_hex << '\n';

    all_ok = all_ok && enc_ok && dec_ok;
  }
  return all_ok;
}

}  // namespace simon::selftest
