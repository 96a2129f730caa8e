// simon: SIMON-128 block-cipher toolkit.
//
// Subcommands cover round-key expansion, single-block operations, CTR file
// encryption, the cycle-accurate model of the iterative hardware core, a
// throughput benchmark, and a known-answer selftest.
//
// Exit codes: 0 success, 1 malformed arguments or I/O trouble, 2 bad key or
// hex input, 3 selftest failure.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simon/bench.hpp"
#include "simon/block_cipher.hpp"
#include "simon/ctr.hpp"
#include "simon/errors.hpp"
#include "simon/hex.hpp"
#include "simon/key_schedule.hpp"
#include "simon/rtl_model.hpp"
#include "simon/selftest.hpp"

namespace {

using simon::Block;
using simon::MasterKey;
using simon::SimonConfig;
using simon::Word;

// Bad user-supplied key/block/nonce material; maps to exit code 2 alongside
// the library's hex and key errors.
struct DataError : simon::Error {
  using simon::Error::Error;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw simon::Error("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return data;
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw simon::Error("cannot open " + path);
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

void write_binary_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw simon::Error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw simon::Error("write to " + path + " failed");
}

MasterKey load_key(int variant, const std::string& key_hex,
                   const std::string& key_file) {
  if (key_hex.empty() == key_file.empty()) {
    throw simon::Error("exactly one of --key or --key-file is required");
  }
  const std::string hex = key_hex.empty() ? trim(read_text_file(key_file)) : key_hex;
  const std::size_t want = static_cast<std::size_t>(variant) / 4;
  if (hex.size() != want) {
    throw simon::InvalidKeyError("key must be " + std::to_string(want) +
                                 " hex characters for variant " +
                                 std::to_string(variant) + ", got " +
                                 std::to_string(hex.size()));
  }
  return MasterKey::from_hex(hex);
}

Block parse_block(const std::string& hex) {
  if (hex.size() != 32) {
    throw DataError("block must be 32 hex characters, got " +
                    std::to_string(hex.size()));
  }
  const auto bytes = simon::parse_hex(hex);
  return simon::block_from_bytes(std::span<const std::uint8_t, 16>(bytes.data(), 16));
}

Word parse_nonce(const std::string& hex) {
  if (hex.size() != 16) {
    throw DataError("nonce must be 16 hex characters, got " +
                    std::to_string(hex.size()));
  }
  const auto bytes = simon::parse_hex(hex);
  Word v = 0;
  for (auto b : bytes) v = (v << 8) | b;
  return v;
}

std::string block_hex(const Block& b) {
  return simon::format_hex(simon::block_to_bytes(b));
}

simon::selftest::ZMutation parse_mutation(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw simon::Error("--mutate-z expects Z:BIT, e.g. 2:17");
  }
  try {
    const int z = std::stoi(spec.substr(0, colon));
    const int bit = std::stoi(spec.substr(colon + 1));
    if (z < 2 || z > 4) throw simon::Error("--mutate-z index must be 2, 3 or 4");
    return {z, bit};
  } catch (const std::invalid_argument&) {
    throw simon::Error("--mutate-z expects numeric Z:BIT, e.g. 2:17");
  } catch (const std::out_of_range&) {
    throw simon::Error("--mutate-z values out of range");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SIMON-128 block-cipher toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  int variant = 128;
  std::string key_hex, key_file;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--variant", variant, "Key size in bits")
        ->check(CLI::IsMember({128, 192, 256}))
        ->capture_default_str();
    cmd->add_option("--key", key_hex, "Master key as hex, most-significant word first");
    cmd->add_option("--key-file", key_file, "File holding the master key as hex");
  };

  // expand-keys
  auto* cmd_expand = app.add_subcommand("expand-keys", "Print all round keys");
  add_common(cmd_expand);
  cmd_expand->callback([&] {
    const SimonConfig& cfg = simon::config_for_key_size(variant);
    const auto rk = simon::expand_keys(cfg, load_key(variant, key_hex, key_file));
    for (Word k : rk) {
      std::printf("%016" PRIx64 "\n", k);
    }
  });

  // encrypt-block / decrypt-block
  std::string block_arg;
  auto* cmd_eb = app.add_subcommand("encrypt-block", "Encrypt one 128-bit block");
  add_common(cmd_eb);
  cmd_eb->add_option("block", block_arg, "Plaintext block, 32 hex characters")
      ->required();
  cmd_eb->callback([&] {
    const SimonConfig& cfg = simon::config_for_key_size(variant);
    const auto rk = simon::expand_keys(cfg, load_key(variant, key_hex, key_file));
    std::cout << block_hex(simon::encrypt_block(cfg, rk, parse_block(block_arg)))
              << '\n';
  });

  auto* cmd_db = app.add_subcommand("decrypt-block", "Decrypt one 128-bit block");
  add_common(cmd_db);
  cmd_db->add_option("block", block_arg, "Ciphertext block, 32 hex characters")
      ->required();
  cmd_db->callback([&] {
    const SimonConfig& cfg = simon::config_for_key_size(variant);
    const auto rk = simon::expand_keys(cfg, load_key(variant, key_hex, key_file));
    std::cout << block_hex(simon::decrypt_block(cfg, rk, parse_block(block_arg)))
              << '\n';
  });

  // encrypt / decrypt (CTR; the transform is its own inverse)
  std::string in_path, out_path, nonce_hex;
  std::uint64_t initial_counter = 0;
  auto add_ctr = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_option("--in", in_path, "Input file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", out_path, "Output file")->required();
    cmd->add_option("--nonce", nonce_hex, "64-bit nonce, 16 hex characters")
        ->required();
    cmd->add_option("--counter", initial_counter, "Initial counter value")
        ->capture_default_str();
    cmd->callback([&] {
      const SimonConfig& cfg = simon::config_for_key_size(variant);
      const auto rk = simon::expand_keys(cfg, load_key(variant, key_hex, key_file));
      const simon::CtrParams params{parse_nonce(nonce_hex), initial_counter};
      const auto data = read_binary_file(in_path);
      write_binary_file(out_path, simon::ctr_transform(cfg, rk, params, data));
    });
  };
  add_ctr(app.add_subcommand("encrypt", "CTR-encrypt a file"));
  add_ctr(app.add_subcommand("decrypt", "CTR-decrypt a file"));

  // simulate
  auto* cmd_sim = app.add_subcommand(
      "simulate", "Clock the hardware model through one block and dump the trace");
  add_common(cmd_sim);
  cmd_sim->add_option("block", block_arg, "Plaintext block, 32 hex characters")
      ->required();
  cmd_sim->callback([&] {
    const SimonConfig& cfg = simon::config_for_key_size(variant);
    const MasterKey key = load_key(variant, key_hex, key_file);
    const auto [ct, cycles] =
        simon::rtl::run_to_done(cfg, key, parse_block(block_arg), &std::cout);
    std::cout << "cycles=" << cycles << '\n';
    std::cout << "ciphertext=" << block_hex(ct) << '\n';
  });

  // bench
  std::uint64_t n_blocks = 1000000;
  unsigned threads = 1;
  double period_ns = 4.020;
  std::string json_path, report_path;
  auto* cmd_bench = app.add_subcommand("bench", "Measure software throughput");
  cmd_bench->add_option("--variant", variant, "Key size in bits")
      ->check(CLI::IsMember({128, 192, 256}))
      ->capture_default_str();
  cmd_bench->add_option("--blocks", n_blocks, "Blocks to encrypt")
      ->capture_default_str();
  cmd_bench->add_option("--threads", threads, "Worker threads")->capture_default_str();
  cmd_bench->add_option("--period-ns", period_ns,
                        "Clock period for the hardware projection")
      ->capture_default_str();
  cmd_bench->add_option("--out", report_path, "Write the key=value report to a file");
  cmd_bench->add_option("--json", json_path, "Write the report as JSON to a file");
  cmd_bench->callback([&] {
    const SimonConfig& cfg = simon::config_for_key_size(variant);
    const simon::BenchReport report =
        simon::bench_software(cfg, n_blocks, threads, period_ns);
    std::cout << report.to_kv();
    if (!report_path.empty()) {
      const std::string kv = report.to_kv();
      write_binary_file(report_path,
                        std::span(reinterpret_cast<const std::uint8_t*>(kv.data()),
                                  kv.size()));
    }
    if (!json_path.empty()) {
      const std::string js = report.to_json() + "\n";
      write_binary_file(json_path,
                        std::span(reinterpret_cast<const std::uint8_t*>(js.data()),
                                  js.size()));
    }
  });

  // selftest
  std::string mutate_spec;
  auto* cmd_self = app.add_subcommand("selftest", "Run the known-answer vectors");
  cmd_self
      ->add_option("--mutate-z", mutate_spec,
                   "Flip bit BIT of z-sequence Z (format Z:BIT) before testing; "
                   "proves the vectors catch table corruption")
      ->option_text("Z:BIT");
  cmd_self->callback([&] {
    std::optional<simon::selftest::ZMutation> mutation;
    if (!mutate_spec.empty()) mutation = parse_mutation(mutate_spec);
    if (!simon::selftest::run(std::cout, mutation)) {
      std::cerr << "selftest: known-answer vectors FAILED\n";
      rc = 3;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const simon::HexParseError& e) {
    std::cerr << "simon: " << e.what() << '\n';
    return 2;
  } catch (const simon::InvalidKeyError& e) {
    std::cerr << "simon: " << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << "simon: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "simon: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
