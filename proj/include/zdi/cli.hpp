#pragma once

#include <iosfwd>

#include "zdi/errors.hpp"

namespace zdi {

// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInvalidArguments = 2,
  kExitCapExceeded = 3,
  kExitUndefinedIndex = 4,
  kExitNotPrimePower = 5,
  kExitExpansionThreshold = 6,
  kExitUnwritable = 7,
  kExitPaperMismatch = 10,
};

int ExitCodeFor(ErrorKind kind);

// Entry point shared by the zdi binary and the tests.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zdi
