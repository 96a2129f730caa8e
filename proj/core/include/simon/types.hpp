#pragma once

#include <cstdint>

namespace simon {

// All SIMON-128 arithmetic runs on 64-bit words (n = 64).
using Word = std::uint64_t;

// One 128-bit block. l is the left-most word.
struct Block {
  Word l{};
  Word r{};

  friend constexpr bool operator==(const Block&, const Block&) = default;
};

}  // namespace simon
