// Microbenchmarks for the cipher kernel, key schedule, CTR mode and the
// clocked hardware model. Not part of the ctest suite; run the binary
// directly (see README).

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "simon/block_cipher.hpp"
#include "simon/ctr.hpp"
#include "simon/key_schedule.hpp"
#include "simon/rtl_model.hpp"
#include "simon/word_ops.hpp"

namespace {

using simon::Block;
using simon::MasterKey;
using simon::SimonConfig;
using simon::Word;

MasterKey seeded_key(const SimonConfig& cfg) {
  std::mt19937_64 rng(0xbe7c);
  MasterKey key;
  key.words.resize(static_cast<std::size_t>(cfg.m));
  for (auto& w : key.words) w = rng();
  return key;
}

void BM_RoundForward(benchmark::State& state) {
  Word l = 0x0123456789abcdef, r = 0xfedcba9876543210, k = 0x5a5a5a5a5a5a5a5a;
  for (auto _ : state) {
    const Block out = simon::round_forward(l, r, k);
    l = out.l;
    r = out.r;
    benchmark::DoNotOptimize(l);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RoundForward);

void BM_ExpandKeys(benchmark::State& state) {
  const SimonConfig& cfg = simon::config_for_key_size(static_cast<int>(state.range(0)));
  const MasterKey key = seeded_key(cfg);
  for (auto _ : state) {
    auto rk = simon::expand_keys(cfg, key);
    benchmark::DoNotOptimize(rk.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExpandKeys)->Arg(128)->Arg(192)->Arg(256);

void BM_EncryptBlock(benchmark::State& state) {
  const SimonConfig& cfg = simon::config_for_key_size(static_cast<int>(state.range(0)));
  const auto rk = simon::expand_keys(cfg, seeded_key(cfg));
  Block b{0x6373656420737265, 0x6c6c657661727420};
  for (auto _ : state) {
    b = simon::encrypt_block(cfg, rk, b);
    benchmark::DoNotOptimize(b);
  }
  state.SetBytesProcessed(state.iterations() * 16);
}
BENCHMARK(BM_EncryptBlock)->Arg(128)->Arg(192)->Arg(256);

void BM_DecryptBlock(benchmark::State& state) {
  const SimonConfig& cfg = simon::config_for_key_size(static_cast<int>(state.range(0)));
  const auto rk = simon::expand_keys(cfg, seeded_key(cfg));
  Block b{0x49681b1e1e54fe3f, 0x65aa832af84e0bbc};
  for (auto _ : state) {
    b = simon::decrypt_block(cfg, rk, b);
    benchmark::DoNotOptimize(b);
  }
  state.SetBytesProcessed(state.iterations() * 16);
}
BENCHMARK(BM_DecryptBlock)->Arg(128)->Arg(192)->Arg(256);

void BM_CtrTransform(benchmark::State& state) {
  const SimonConfig& cfg = simon::config_for_key_size(128);
  const auto rk = simon::expand_keys(cfg, seeded_key(cfg));
  std::vector<std::uint8_t> msg(static_cast<std::size_t>(state.range(0)), 0xa5);
  const simon::CtrParams params{0x00000000000000ff, 0};
  for (auto _ : state) {
    auto out = simon::ctr_transform(cfg, rk, params, msg);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CtrTransform)->Arg(16)->Arg(1024)->Arg(65536);

// One full block through the clocked model: reset, latch, every round edge.
void BM_ModelBlock(benchmark::State& state) {
  const SimonConfig& cfg = simon::config_for_key_size(static_cast<int>(state.range(0)));
  const MasterKey key = seeded_key(cfg);
  const Block pt{0x0123456789abcdef, 0xfedcba9876543210};
  for (auto _ : state) {
    auto res = simon::rtl::run_to_done(cfg, key, pt);
    benchmark::DoNotOptimize(res);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ModelBlock)->Arg(128)->Arg(192)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
