#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "simon/block_cipher.hpp"
#include "simon/rtl_model.hpp"

using simon::Block;
using simon::config_for_key_size;
using simon::expand_keys;
using simon::MasterKey;
using simon::SimonConfig;
using simon::Word;
using simon::rtl::Fsm;
using simon::rtl::Ports;
using simon::rtl::run_to_done;
using simon::rtl::Simulator;

namespace {

MasterKey random_key(const SimonConfig& cfg, std::mt19937_64& rng) {
  MasterKey key;
  for (int i = 0; i < cfg.m; ++i) key.words.push_back(rng());
  return key;
}

}  // namespace

TEST_CASE("reset enters IDLE with done low") {
  for (const SimonConfig& cfg : simon::all_configs()) {
    Simulator sim(cfg);
    sim.reset();
    CHECK(sim.fsm() == Fsm::Idle);
    CHECK_FALSE(sim.done());
    CHECK(sim.round() == 0);

    // idle hold: stepping without start changes nothing
    const Ports hold;
    sim.step(hold);
    sim.step(hold);
    CHECK(sim.fsm() == Fsm::Idle);
    CHECK_FALSE(sim.done());
    CHECK(sim.ciphertext() == Block{0, 0});
  }
}

TEST_CASE("one start pulse, then exactly T round cycles") {
  std::mt19937_64 rng(30);
  for (const SimonConfig& cfg : simon::all_configs()) {
    Simulator sim(cfg);
    sim.reset();

    Ports p;
    p.start = true;
    p.key = random_key(cfg, rng);
    p.plaintext = {rng(), rng()};
    sim.step(p);  // latch
    CHECK(sim.fsm() == Fsm::Run);
    CHECK_FALSE(sim.done());

    const Ports hold;
    for (int i = 0; i < cfg.rounds - 1; ++i) {
      sim.step(hold);
      CHECK_FALSE(sim.done());
    }
    sim.step(hold);  // final round
    CHECK(sim.done());
    CHECK(sim.fsm() == Fsm::Done);
  }
}

TEST_CASE("latency is rounds + 1 and data-independent") {
  std::mt19937_64 rng(31);
  for (const SimonConfig& cfg : simon::all_configs()) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto [ct, cycles] =
          run_to_done(cfg, random_key(cfg, rng), {rng(), rng()});
      CHECK(cycles == std::uint64_t(cfg.rounds) + 1);
    }
  }
  CHECK(run_to_done(config_for_key_size(128), MasterKey{{0, 0}}, {0, 0}).second == 69);
  CHECK(run_to_done(config_for_key_size(256), MasterKey{{0, 0, 0, 0}}, {0, 0}).second ==
        73);
}

TEST_CASE("ciphertext equals the functional model") {
  std::mt19937_64 rng(32);
  for (const SimonConfig& cfg : simon::all_configs()) {
    for (int trial = 0; trial < 100; ++trial) {
      const MasterKey key = random_key(cfg, rng);
      const Block p{rng(), rng()};
      const auto [ct, cycles] = run_to_done(cfg, key, p);
      CHECK(ct == simon::encrypt_block(cfg, expand_keys(cfg, key), p));
    }
  }
}

TEST_CASE("on-the-fly keys match expand_keys word for word") {
  std::mt19937_64 rng(33);
  for (const SimonConfig& cfg : simon::all_configs()) {
    const MasterKey key = random_key(cfg, rng);
    std::vector<Word> consumed;

    Simulator sim(cfg);
    sim.set_key_probe([&](Word k) { consumed.push_back(k); });
    sim.reset();
    Ports p;
    p.start = true;
    p.key = key;
    p.plaintext = {rng(), rng()};
    sim.step(p);
    const Ports hold;
    while (!sim.done()) sim.step(hold);

    CHECK(consumed == expand_keys(cfg, key));
  }
}

TEST_CASE("start is ignored while running") {
  std::mt19937_64 rng(34);
  const SimonConfig& cfg = config_for_key_size(128);
  const MasterKey key = random_key(cfg, rng);
  const Block pt{rng(), rng()};
  const auto [want_ct, want_cycles] = run_to_done(cfg, key, pt);

  Simulator sim(cfg);
  sim.reset();
  Ports p;
  p.start = true;
  p.key = key;
  p.plaintext = pt;
  sim.step(p);

  // hammer start with different operands mid-run; no restart may happen
  Ports noise;
  noise.start = true;
  noise.key = random_key(cfg, rng);
  noise.plaintext = {rng(), rng()};
  std::uint64_t cycles = 1;
  while (!sim.done()) {
    sim.step(noise);
    ++cycles;
  }
  CHECK(sim.ciphertext() == want_ct);
  CHECK(cycles == want_cycles);
}

TEST_CASE("reset dominates any state") {
  std::mt19937_64 rng(35);
  const SimonConfig& cfg = config_for_key_size(192);
  Simulator sim(cfg);
  sim.reset();
  Ports p;
  p.start = true;
  p.key = random_key(cfg, rng);
  p.plaintext = {rng(), rng()};
  sim.step(p);
  const Ports hold;
  sim.step(hold);
  sim.step(hold);
  CHECK(sim.fsm() == Fsm::Run);

  Ports rst;
  rst.nrst = false;
  rst.start = true;  // reset wins over start
  sim.step(rst);
  CHECK(sim.fsm() == Fsm::Idle);
  CHECK_FALSE(sim.done());
  CHECK(sim.round() == 0);
}

TEST_CASE("DONE holds outputs until the next start") {
  std::mt19937_64 rng(36);
  const SimonConfig& cfg = config_for_key_size(128);
  const MasterKey key = random_key(cfg, rng);
  const Block pt{rng(), rng()};

  Simulator sim(cfg);
  sim.reset();
  Ports p;
  p.start = true;
  p.key = key;
  p.plaintext = pt;
  sim.step(p);
  const Ports hold;
  while (!sim.done()) sim.step(hold);
  const Block ct = sim.ciphertext();

  for (int i = 0; i < 5; ++i) {
    sim.step(hold);
    CHECK(sim.done());
    CHECK(sim.ciphertext() == ct);
  }

  // a fresh start pulse launches a second computation from DONE
  const MasterKey key2 = random_key(cfg, rng);
  const Block pt2{rng(), rng()};
  Ports p2;
  p2.start = true;
  p2.key = key2;
  p2.plaintext = pt2;
  sim.step(p2);
  CHECK(sim.fsm() == Fsm::Run);
  CHECK_FALSE(sim.done());
  std::uint64_t cycles = 1;
  while (!sim.done()) {
    sim.step(hold);
    ++cycles;
  }
  CHECK(cycles == std::uint64_t(cfg.rounds) + 1);
  CHECK(sim.ciphertext() == simon::encrypt_block(cfg, expand_keys(cfg, key2), pt2));
}

TEST_CASE("trace format") {
  std::mt19937_64 rng(37);
  const SimonConfig& cfg = config_for_key_size(128);
  const MasterKey key = random_key(cfg, rng);
  const Block pt{rng(), rng()};

  std::ostringstream trace;
  const auto [ct, cycles] = run_to_done(cfg, key, pt, &trace);

  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(trace.str());
  while (std::getline(in, line)) lines.push_back(line);

  // reset line + latch line + T round lines
  REQUIRE(lines.size() == cycles + 1);

  int run_lines = 0;
  for (const std::string& l : lines) {
    std::vector<std::string> fields;
    std::istringstream fs(l);
    std::string f;
    while (std::getline(fs, f, '\t')) fields.push_back(f);
    REQUIRE(fields.size() == 7);
    CHECK((fields[1] == "IDLE" || fields[1] == "RUN" || fields[1] == "DONE"));
    CHECK(fields[3].size() == 16);
    CHECK(fields[4].size() == 16);
    CHECK(fields[5].size() == 16);
    CHECK((fields[6] == "0" || fields[6] == "1"));
    if (fields[1] == "RUN") ++run_lines;
  }
  CHECK(run_lines == cfg.rounds);  // latch line plus all but the final round

  // first line is the reset cycle, last line carries done=1 and the ciphertext
  CHECK(lines.front().find("IDLE") != std::string::npos);
  char expect[64];
  std::snprintf(expect, sizeof expect, "%016llx\t%016llx",
                static_cast<unsigned long long>(ct.l),
                static_cast<unsigned long long>(ct.r));
  CHECK(lines.back().find("DONE") != std::string::npos);
  CHECK(lines.back().find(expect) != std::string::npos);
  CHECK(lines.back().back() == '1');

  // the key column of the first RUN line is round key 0
  const auto rk = expand_keys(cfg, key);
  char k0[32];
  std::snprintf(k0, sizeof k0, "%016llx", static_cast<unsigned long long>(rk[0]));
  CHECK(lines[1].find(k0) != std::string::npos);

  // identical drives produce identical traces
  std::ostringstream trace2;
  (void)run_to_done(cfg, key, pt, &trace2);
  CHECK(trace.str() == trace2.str());
}
