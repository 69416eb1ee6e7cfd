#pragma once

#include <stdexcept>
#include <string>

namespace sgcol {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class PositiveLoopError : public Error {
public:
    explicit PositiveLoopError(int vertex)
        : Error("positive loop at vertex " + std::to_string(vertex)), vertex_(vertex) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

class VertexRangeError : public Error {
public:
    using Error::Error;
};

class UnderlyingMismatchError : public Error {
public:
    using Error::Error;
};

class NotSimpleError : public Error {
public:
    using Error::Error;
};

class NotConnectedError : public Error {
public:
    using Error::Error;
};

class NotCompleteError : public Error {
public:
    using Error::Error;
};

class NotAcyclicError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class InvalidPartitionError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class TooLargeError : public Error {
public:
    using Error::Error;
};

class CapExceededError : public Error {
public:
    using Error::Error;
};

class UnknownTheoremError : public Error {
public:
    using Error::Error;
};

/// Raised when a colouring routine cannot honour an advertised or
/// requested bound. Unreachable through the default entry points.
class InternalBoundError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace sgcol
