#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pascaline {

/* Caller passed a value the operation cannot accept. */
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/* Operation requested in a state where it is undefined, e.g. reading a
 * digit mid-pulse or from a resistance between levels. */
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/* The event queue failed to go quiescent before its deadline. */
class UnsettledError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Configuration rejected; what() carries the joined violation messages. */
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Expression text rejected. position() is the byte offset of the offending
 * character in the original input. */
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pascaline
