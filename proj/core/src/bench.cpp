#include "simon/bench.hpp"

#include <charconv>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <thread>
#include <vector>

#include <json.hpp>

#include "simon/block_cipher.hpp"
#include "simon/errors.hpp"

namespace simon {
namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int cycles_per_block(const SimonConfig& config) noexcept {
  return config.rounds + 1;
}

double project_hw_throughput(const SimonConfig& config, double clock_period_ns) {
  if (!(clock_period_ns > 0.0)) {
    throw Error("clock period must be positive, got " + fmt_double(clock_period_ns));
  }
  const double freq_hz = 1e9 / clock_period_ns;
  return freq_hz * 16.0 / static_cast<double>(cycles_per_block(config));
}

std::string BenchReport::to_kv() const {
  std::string out;
  out += "variant=" + std::to_string(variant) + "\n";
  out += "blocks=" + std::to_string(blocks) + "\n";
  out += "threads=" + std::to_string(threads) + "\n";
  out += "wall_seconds=" + fmt_double(wall_seconds) + "\n";
  out += "throughput_bytes_per_sec=" + fmt_double(throughput_bytes_per_sec) + "\n";
  out += "cycles_per_block=" + std::to_string(cycles_per_block) + "\n";
  out += "clock_period_ns=" + fmt_double(clock_period_ns) + "\n";
  out += "projected_hw_bytes_per_sec=" + fmt_double(projected_hw_bytes_per_sec) + "\n";
  return out;
}

BenchReport BenchReport::from_kv(std::string_view text) {
  BenchReport r;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) continue;
    const std::string_view key = line.substr(0, eq);
    const std::string value(line.substr(eq + 1));
    if (key == "variant") {
      r.variant = std::atoi(value.c_str());
    } else if (key == "blocks") {
      r.blocks = std::strtoull(value.c_str(), nullptr, 10);
    } else if (key == "threads") {
      r.threads = static_cast<unsigned>(std::strtoul(value.c_str(), nullptr, 10));
    } else if (key == "wall_seconds") {
      r.wall_seconds = std::strtod(value.c_str(), nullptr);
    } else if (key == "throughput_bytes_per_sec") {
      r.throughput_bytes_per_sec = std::strtod(value.c_str(), nullptr);
    } else if (key == "cycles_per_block") {
      r.cycles_per_block = std::atoi(value.c_str());
    } else if (key == "clock_period_ns") {
      r.clock_period_ns = std::strtod(value.c_str(), nullptr);
    } else if (key == "projected_hw_bytes_per_sec") {
      r.projected_hw_bytes_per_sec = std::strtod(value.c_str(), nullptr);
    }
  }
  return r;
}

std::string BenchReport::to_json() const {
  nlohmann::json j{
      {"variant", variant},
      {"blocks", blocks},
      {"threads", threads},
      {"wall_seconds", wall_seconds},
      {"throughput_bytes_per_sec", throughput_bytes_per_sec},
      {"cycles_per_block", cycles_per_block},
      {"clock_period_ns", clock_period_ns},
      {"projected_hw_bytes_per_sec", projected_hw_bytes_per_sec},
  };
  return j.dump(2);
}

BenchReport bench_software(const SimonConfig& config, std::uint64_t n_blocks,
                           unsigned threads, double clock_period_ns) {
  if (n_blocks < 1) {
    throw Error("n_blocks must be >= 1");
  }
  if (threads < 1) threads = 1;

  std::mt19937_64 rng(std::random_device{}());
  MasterKey key;
  for (int i = 0; i < config.m; ++i) key.words.push_back(rng());
  const RoundKeys rk = expand_keys(config, key);
  const Word nonce = rng();

  std::vector<Word> sinks(threads, 0);
  std::vector<std::thread> workers;
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = n_blocks * t / threads;
    const std::uint64_t hi = n_blocks * (t + 1) / threads;
    workers.emplace_back([&, t, lo, hi] {
      Word acc = 0;
      for (std::uint64_t ctr = lo; ctr < hi; ++ctr) {
        const Block ks = encrypt_block(config, rk, {nonce, ctr});
        acc ^= ks.l ^ ks.r;
      }
      sinks[t] = acc;
    });
  }
  for (auto& w : workers) w.join();
  const auto t1 = std::chrono::steady_clock::now();

  Word folded = 0;
  for (Word s : sinks) folded ^= s;
  volatile Word keep = folded;  // keystream must not be optimized away
  (void)keep;

  BenchReport report;
  report.variant = config.key_size_bits;
  report.blocks = n_blocks;
  report.threads = threads;
  report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  report.throughput_bytes_per_sec =
      static_cast<double>(n_blocks) * 16.0 / report.wall_seconds;
  report.cycles_per_block = cycles_per_block(config);
  report.clock_period_ns = clock_period_ns;
  report.projected_hw_bytes_per_sec = project_hw_throughput(config, clock_period_ns);
  return report;
}

}  // namespace simon
