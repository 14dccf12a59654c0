#pragma once

#include <stdexcept>
#include <string>

namespace ordsep {

/// Malformed input: bad files, out-of-range tables, mismatched contexts.
/// Maps to exit code 2 in the CLI.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A condition that should be impossible if the implementation is correct
/// (e.g. trichotomy coverage failure). Maps to exit code 3 in the CLI.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ordsep
