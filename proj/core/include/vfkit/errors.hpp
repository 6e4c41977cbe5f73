#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vfkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Two operands were built over different variable contexts.
class ContextMismatch : public Error {
public:
  ContextMismatch() : Error("operands belong to different variable contexts") {}
};

class UnknownVariable : public Error {
public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'") {}
};

/// A precondition on the mathematical input failed (not homogeneous,
/// parameters present, non-diagonal derivation, unsupported degree, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A computation guardrail was hit. Never raised for silent truncation.
class ResourceLimitExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed text input. `offset` is the byte offset of the problem.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), detail_(message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

private:
  std::string detail_;
  std::size_t offset_;
};

}  // namespace vfkit
