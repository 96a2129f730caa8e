#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown key size, z index, or parameter row.
class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

// Master key with the wrong word count or byte length.
class InvalidKeyError : public Error {
 public:
  using Error::Error;
};

// Round-key sequence does not match the configuration it is used with.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class HexParseError : public Error {
 public:
  HexParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// The clocked model failed to reach done within its cycle budget.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace simon
