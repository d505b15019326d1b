#pragma once

#include <stdexcept>
#include <string>

namespace pst {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ZeroSumError : public Error {
public:
    using Error::Error;
};

class ZeroInputError : public Error {
public:
    using Error::Error;
};

class PartsExceedTotalError : public Error {
public:
    using Error::Error;
};

class InvalidGraphError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

// Raised by rewrite rules; the message names the violated condition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotBipartiteError : public Error {
public:
    using Error::Error;
};

class EndsOnOddSideError : public Error {
public:
    using Error::Error;
};

class DeltaMismatchError : public Error {
public:
    using Error::Error;
};

class NonIntegralDegreesError : public Error {
public:
    using Error::Error;
};

class InadmissibleSetError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace pst
