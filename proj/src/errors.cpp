#include "zdi/errors.hpp"

namespace zdi {

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kCapExceeded: return "size cap exceeded";
    case ErrorKind::kUndefinedIndex: return "undefined";
    case ErrorKind::kNotPrimePower: return "not a prime power";
    case ErrorKind::kExpansionThreshold: return "expansion threshold exceeded";
    case ErrorKind::kOutOfDomain: return "out of theorem domain";
    case ErrorKind::kDegenerateGraph: return "degenerate graph";
    case ErrorKind::kInternal: return "internal invariant violation";
    case ErrorKind::kIo: return "i/o error";
  }
  return "error";
}

}  // namespace zdi
