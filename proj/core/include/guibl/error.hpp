#pragma once

#include <stdexcept>
#include <string>

namespace guibl {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that violates a documented precondition or file format.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Filesystem or environment failure while processing valid input.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace guibl
