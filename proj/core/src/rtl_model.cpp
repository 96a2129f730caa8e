#include "simon/rtl_model.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "simon/errors.hpp"
#include "simon/word_ops.hpp"

namespace simon::rtl {

const char* fsm_name(Fsm s) noexcept {
  switch (s) {
    case Fsm::Idle:
      return "IDLE";
    case Fsm::Run:
      return "RUN";
    case Fsm::Done:
      return "DONE";
  }
  return "?";
}

Simulator::Simulator(const SimonConfig& config)
    : cfg_(config), z_(&z_sequence(config.z_index)) {
  if (cfg_.m < 2 || cfg_.m > 4) {
    throw InvalidConfigError("rtl model supports m in 2..4, got " +
                             std::to_string(cfg_.m));
  }
}

void Simulator::reset() {
  Ports p;
  p.nrst = false;
  step(p);
}

void Simulator::step(const Ports& in) {
  ++cycle_;
  if (!in.nrst) {
    fsm_ = Fsm::Idle;
    done_ = false;
    round_ = 0;
    l_ = 0;
    r_ = 0;
    key_win_.fill(0);
    return;
  }
  switch (fsm_) {
    case Fsm::Idle:
    case Fsm::Done:
      // Registers hold unless a start pulse latches new operands.
      if (in.start) latch(in);
      break;
    case Fsm::Run:
      // start is ignored mid-computation; there is no restart edge.
      run_round();
      break;
  }
}

void Simulator::latch(const Ports& in) {
  if (static_cast<int>(in.key.words.size()) != cfg_.m) {
    throw InvalidKeyError("key port carries " + std::to_string(in.key.words.size()) +
                          " words, configuration needs " + std::to_string(cfg_.m));
  }
  l_ = in.plaintext.l;
  r_ = in.plaintext.r;
  for (int i = 0; i < cfg_.m; ++i) {
    // msw-first key port; k_0 lands at the window head
    key_win_[static_cast<std::size_t>(i)] =
        in.key.words[static_cast<std::size_t>(cfg_.m - 1 - i)];
  }
  round_ = 0;
  done_ = false;
  fsm_ = Fsm::Run;
}

void Simulator::run_round() {
  const Word k = key_win_[0];
  if (key_probe_) key_probe_(k);

  const Block next = round_forward(l_, r_, k);
  l_ = next.l;
  r_ = next.r;

  // Key-schedule block: shift the window, computing round key round_+m.
  Word t = rotr(key_win_[static_cast<std::size_t>(cfg_.m - 1)], 3);
  if (cfg_.m == 4) {
    t ^= key_win_[1];
  }
  t ^= rotr(t, 1);
  const Word next_key =
      round_constant() ^ z_->bit(static_cast<std::size_t>(round_)) ^ key_win_[0] ^ t;
  for (int i = 0; i + 1 < cfg_.m; ++i) {
    key_win_[static_cast<std::size_t>(i)] = key_win_[static_cast<std::size_t>(i + 1)];
  }
  key_win_[static_cast<std::size_t>(cfg_.m - 1)] = next_key;

  ++round_;
  if (round_ == cfg_.rounds) {
    fsm_ = Fsm::Done;
    done_ = true;
  }
}

std::string Simulator::trace_line() const {
  char buf[112];
  std::snprintf(buf, sizeof buf, "%llx\t%s\t%x\t%016llx\t%016llx\t%016llx\t%d",
                static_cast<unsigned long long>(cycle_), fsm_name(fsm_),
                static_cast<unsigned>(round_), static_cast<unsigned long long>(l_),
                static_cast<unsigned long long>(r_),
                static_cast<unsigned long long>(key_win_[0]), done_ ? 1 : 0);
  return buf;
}

std::pair<Block, std::uint64_t> run_to_done(const SimonConfig& config,
                                            const MasterKey& key, const Block& plaintext,
                                            std::ostream* trace) {
  Simulator sim(config);
  sim.reset();
  if (trace) *trace << sim.trace_line() << '\n';

  Ports p;
  p.start = true;
  p.key = key;
  p.plaintext = plaintext;
  sim.step(p);
  std::uint64_t cycles = 1;
  if (trace) *trace << sim.trace_line() << '\n';

  const std::uint64_t budget = static_cast<std::uint64_t>(config.rounds) + 8;
  const Ports hold;
  while (!sim.done()) {
    if (cycles > budget) {
      throw ModelError("model did not reach done within " + std::to_string(budget) +
                       " cycles");
    }
    sim.step(hold);
    ++cycles;
    if (trace) *trace << sim.trace_line() << '\n';
  }
  return {sim.ciphertext(), cycles};
}

}  // namespace simon::rtl
