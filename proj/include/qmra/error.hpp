#pragma once

#include <stdexcept>
#include <string>

namespace qmra {

// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed angular-momentum label (parity mismatch, |m| > j, negative j).
class InvalidLabel : public Error {
public:
    using Error::Error;
};

// Register or level count outside the supported range.
class InvalidSize : public Error {
public:
    using Error::Error;
};

// Incompatible matrix or sequence shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

// Numerical argument outside the domain of a formula.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

class SerializationError : public Error {
public:
    using Error::Error;
};

} // namespace qmra
