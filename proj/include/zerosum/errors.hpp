#pragma once

#include <stdexcept>
#include <string>

namespace zerosum {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad group presentations, group
/// mismatches, violated operation preconditions.
struct InputError : Error {
    using Error::Error;
};

/// A configured search budget (node count, enumeration size) ran out
/// before the computation finished.
struct CapExceeded : Error {
    using Error::Error;
};

/// A computation contradicted a statement that is known to be true.
/// Seeing this exception means either the implementation or the input
/// assumptions are broken; it is never an expected outcome.
struct Falsification : Error {
    using Error::Error;
};

} // namespace zerosum
