#pragma once

#include <stdexcept>
#include <string>

namespace pstwalk {

// A check that is supposed to be impossible failed: the polynomial criterion
// and the brute-force simulation disagreed, or an exact invariant broke.
// Maps to CLI exit code 3.
struct InternalInconsistencyError : std::runtime_error {
  explicit InternalInconsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

// Numeric eigenvalue clustering could not separate groups cleanly.
struct AmbiguousGroupingError : std::runtime_error {
  explicit AmbiguousGroupingError(const std::string& what)
      : std::runtime_error(what) {}
};

// Input outside the domain an operation is defined on (bad connection set,
// unsupported valency, disconnected graph where connectivity is required).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace pstwalk
