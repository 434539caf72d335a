#pragma once

#include <stdexcept>
#include <string>

namespace shelf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input (bad permutation text, out-of-range arguments, ...).
struct InputError : Error {
    using Error::Error;
};

/// Request refused because an exact enumeration would be too large.
struct SizeError : Error {
    using Error::Error;
};

} // namespace shelf
