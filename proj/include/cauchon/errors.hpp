#pragma once

#include <stdexcept>
#include <string>

namespace cauchon {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rank out of range for the requested family (e.g. D3, E9).
struct RankError : Error {
    using Error::Error;
};

// A vector that is expected to be a root (or a positive root) is not one.
struct DomainError : Error {
    using Error::Error;
};

// A letter of a word is out of range, or a word fails a reducedness check.
struct WordError : Error {
    using Error::Error;
};

// A sequence of roots is not a valid Lusztig order.
struct OrderError : Error {
    using Error::Error;
};

// A simple-root numbering is not a good numbering.
struct NumberingError : Error {
    using Error::Error;
};

// An enumeration request exceeds the configured size limit.
struct SizeError : Error {
    using Error::Error;
};

} // namespace cauchon
