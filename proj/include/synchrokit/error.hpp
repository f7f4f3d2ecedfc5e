#pragma once

#include <stdexcept>
#include <string>

namespace synchrokit {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// stable exit codes: InputError -> 2, InapplicableError -> 3, NoSyncError -> 4.
// InternalError signals a broken invariant (a bug or an impossible input that
// slipped past validation) and maps to exit 1.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed files, out-of-range letters/states, contract violations by the caller.
struct InputError : Error {
  using Error::Error;
};

// A method's precondition does not hold for this automaton, or a configured
// cap (state count, support size, brute-force size) was exceeded.
struct InapplicableError : Error {
  using Error::Error;
};

// The automaton has no synchronizing word.
struct NoSyncError : Error {
  using Error::Error;
};

// Invariant breach: expansion search exhausted, certificate over bound, etc.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace synchrokit
