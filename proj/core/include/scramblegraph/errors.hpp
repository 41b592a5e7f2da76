#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace scramblegraph {

// Bad user input: malformed files, invalid arguments, missing artifacts.
// The CLI maps these to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class DuplicateRecordError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class IncompleteScheduleError : public InputError {
 public:
  using InputError::InputError;
};

// Broken internal invariant (adjacent MDSs reaching relation detection,
// clique explosion). The CLI maps these to exit status 2.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CliqueExplosionError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace scramblegraph
