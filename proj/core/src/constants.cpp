#include "simon/constants.hpp"

#include <string>
#include <string_view>

#include "simon/errors.hpp"

namespace simon {
namespace {

constexpr std::array<std::uint8_t, 62> bits_of(std::string_view s) {
  std::array<std::uint8_t, 62> out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = s[i] == '1' ? 1 : 0;
  }
  return out;
}

// Each sequence is a period-31 stream from a 5-bit LFSR, repeated and XORed
// with 0101...; the test suite regenerates them from that construction.
constexpr ZSequence kZ2{
    2, bits_of("10101111011100000011010010011000101000010001111110010110110011")};
constexpr ZSequence kZ3{
    3, bits_of("11011011101011000110010111100000010010001010011100110100001111")};
constexpr ZSequence kZ4{
    4, bits_of("11010001111001101011011000100000010111000011001010010011101111")};

}  // namespace

const ZSequence& z_sequence(int j) {
  switch (j) {
    case 2:
      return kZ2;
    case 3:
      return kZ3;
    case 4:
      return kZ4;
    default:
      throw InvalidConfigError("z-sequence index must be 2, 3 or 4, got " +
                               std::to_string(j));
  }
}

}  // namespace simon
