#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "simon/key_schedule.hpp"

namespace simon {

// Latency of the clocked hardware model: one latch cycle plus one cycle per
// round.
[[nodiscard]] int cycles_per_block(const SimonConfig& config) noexcept;

// Projected hardware throughput in bytes/second when the model is clocked at
// the given period, treated as the minimum clock period:
//   (1e9 / clock_period_ns) * 16 / cycles_per_block
// Non-positive periods throw Error.
[[nodiscard]] double project_hw_throughput(const SimonConfig& config,
                                           double clock_period_ns);

struct BenchReport {
  int variant = 0;  // key size in bits
  std::uint64_t blocks = 0;
  unsigned threads = 1;
  double wall_seconds = 0.0;
  double throughput_bytes_per_sec = 0.0;
  int cycles_per_block = 0;
  double clock_period_ns = 0.0;
  double projected_hw_bytes_per_sec = 0.0;

  // Line-oriented key=value form; doubles carry full precision so the report
  // round-trips through from_kv exactly.
  [[nodiscard]] std::string to_kv() const;
  [[nodiscard]] static BenchReport from_kv(std::string_view text);

  [[nodiscard]] std::string to_json() const;
};

// Times software CTR keystream generation over n_blocks blocks under a
// randomly drawn key, sharding the counter range across worker threads.
// Timing fields are wall-clock measurements and are not deterministic.
[[nodiscard]] BenchReport bench_software(const SimonConfig& config,
                                         std::uint64_t n_blocks, unsigned threads = 1,
                                         double clock_period_ns = 4.020);

}  // namespace simon
