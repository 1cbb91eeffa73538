#pragma once

#include <stdexcept>
#include <string>

namespace whmf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (bad prime, unsupported space, ...).
struct DomainError : Error {
    using Error::Error;
};

// A coefficient was requested at or beyond the known precision, or a
// construction could not reach the requested precision.
struct PrecisionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace whmf
