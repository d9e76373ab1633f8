#pragma once

#include <stdexcept>
#include <string>

namespace pickqubo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument to an API call (non-positive sizes, wrong vector length, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Malformed document (JSON syntax, wrong types, unknown keys).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed document that breaks an instance invariant. The message names the field.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Problem size beyond what an exhaustive method accepts.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// No assignment satisfies the capacity constraints.
class Infeasible : public Error {
public:
    using Error::Error;
};

}  // namespace pickqubo
