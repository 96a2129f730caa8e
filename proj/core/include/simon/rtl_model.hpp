#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>

#include "simon/block_cipher.hpp"
#include "simon/key_schedule.hpp"
#include "simon/types.hpp"

namespace simon::rtl {

enum class Fsm : std::uint8_t { Idle = 0, Run = 1, Done = 2 };

[[nodiscard]] const char* fsm_name(Fsm s) noexcept;

// Input ports, sampled on every rising clock edge.
struct Ports {
  bool nrst = true;    // active-low synchronous reset; dominates everything
  bool start = false;  // latches key and plaintext when IDLE or DONE
  MasterKey key;
  Block plaintext;
};

// Cycle-accurate model of the iterative encryption core, split the way the
// hardware is: a datapath applying one Feistel round per clock, a key-schedule
// block holding a sliding window of m key words and producing the turn key on
// the fly, and the start/done control FSM.
//
// Handshake: a start pulse spends one cycle latching the operands, then each
// round takes one cycle; done rises on the edge that completes the last round
// and holds until the next start or reset. Latency is therefore rounds + 1
// cycles from the start pulse, independent of the data.
class Simulator {
 public:
  explicit Simulator(const SimonConfig& config);

  // Models nrst held low for one cycle.
  void reset();

  // One rising clock edge.
  void step(const Ports& in);

  [[nodiscard]] Fsm fsm() const noexcept { return fsm_; }
  [[nodiscard]] bool done() const noexcept { return done_; }
  [[nodiscard]] int round() const noexcept { return round_; }
  [[nodiscard]] std::uint64_t cycle() const noexcept { return cycle_; }
  [[nodiscard]] const SimonConfig& config() const noexcept { return cfg_; }

  // Output register pair; only meaningful while done() is true.
  [[nodiscard]] Block ciphertext() const noexcept { return {l_, r_}; }

  // Turn key currently presented by the key-schedule window; the datapath
  // consumes it on the next run edge.
  [[nodiscard]] Word current_key() const noexcept { return key_win_[0]; }

  // Post-edge state as one tab-separated record:
  //   cycle  fsm  round  l  r  key  done
  // cycle and round are unpadded hex, fsm is IDLE/RUN/DONE, the three
  // registers are 16 hex digits each, done is 0 or 1.
  [[nodiscard]] std::string trace_line() const;

  // Test probe: observes each round key at the instant the datapath consumes
  // it, in consumption order.
  void set_key_probe(std::function<void(Word)> probe) { key_probe_ = std::move(probe); }

 private:
  void latch(const Ports& in);
  void run_round();

  SimonConfig cfg_;
  const ZSequence* z_;
  Fsm fsm_ = Fsm::Idle;
  bool done_ = false;
  int round_ = 0;
  std::uint64_t cycle_ = 0;
  Word l_ = 0;
  Word r_ = 0;
  std::array<Word, 4> key_win_{};  // entries [0, m): round keys round_ .. round_+m-1
  std::function<void(Word)> key_probe_;
};

// Full handshake: reset, one start pulse, then clock until done. Returns the
// ciphertext and the cycle count from the start pulse to done inclusive.
// Throws ModelError if done is not reached within rounds + 8 cycles. When
// trace is given, writes one trace_line() per cycle, starting with the reset
// cycle.
[[nodiscard]] std::pair<Block, std::uint64_t> run_to_done(const SimonConfig& config,
                                                          const MasterKey& key,
                                                          const Block& plaintext,
                                                          std::ostream* trace = nullptr);

}  // namespace simon::rtl
