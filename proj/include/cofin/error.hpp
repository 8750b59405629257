#pragma once

#include <stdexcept>
#include <string>

namespace cofin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations (finite set where an infinite one is required, etc).
struct DomainError : Error {
    using Error::Error;
};

struct EnumerationOutOfRange : DomainError {
    using DomainError::DomainError;
};

// A value left the representable class (period blow-up, L mixed into a
// generator union, ...).
struct LimitError : Error {
    using Error::Error;
};

}  // namespace cofin
