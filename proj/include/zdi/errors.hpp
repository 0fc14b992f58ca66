#pragma once

#include <stdexcept>
#include <string>

namespace zdi {

enum class ErrorKind {
  kInvalidArgument,
  kCapExceeded,
  kUndefinedIndex,
  kNotPrimePower,
  kExpansionThreshold,
  kOutOfDomain,
  kDegenerateGraph,
  kInternal,
  kIo,
};

const char* ToString(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace zdi
