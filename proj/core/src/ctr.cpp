#include "simon/ctr.hpp"

#include <algorithm>

#include "simon/errors.hpp"

namespace simon {

std::vector<std::uint8_t> ctr_transform(const SimonConfig& config,
                                        std::span<const Word> round_keys,
                                        const CtrParams& params,
                                        std::span<const std::uint8_t> data) {
  const std::size_t n_blocks = (data.size() + 15) / 16;
  if (n_blocks > 0 && n_blocks - 1 > ~params.initial_counter) {
    throw Error("CTR counter would wrap past 2^64");
  }

  std::vector<std::uint8_t> out(data.begin(), data.end());
  for (std::size_t j = 0; j < n_blocks; ++j) {
    const Block ks_block = encrypt_block(
        config, round_keys, {params.nonce, params.initial_counter + j});
    const auto ks = block_to_bytes(ks_block);
    const std::size_t base = j * 16;
    const std::size_t len = std::min<std::size_t>(16, out.size() - base);
    for (std::size_t b = 0; b < len; ++b) {
      out[base + b] ^= ks[b];
    }
  }
  return out;
}

}  // namespace simon
