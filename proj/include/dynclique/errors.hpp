#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynclique {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class AbsentEdgeError : public Error {
public:
    using Error::Error;
};

class UnknownVertexError : public Error {
public:
    using Error::Error;
};

/// An edge batch that does not fit the graph it is applied to.
class InvalidBatchError : public Error {
public:
    using Error::Error;
};

/// Caller broke a documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Registry update whose removals are missing or whose additions already exist.
/// Always indicates an upstream enumeration bug.
class RegistryError : public Error {
public:
    using Error::Error;
};

/// Two distinct cliques hashed to the same signature (strict mode only).
class SignatureCollisionError : public Error {
public:
    using Error::Error;
};

class OracleLimitError : public Error {
public:
    using Error::Error;
};

class SnapshotHeaderError : public Error {
public:
    using Error::Error;
};

class SnapshotTruncatedError : public Error {
public:
    using Error::Error;
};

class SnapshotCorruptError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind {
    token,    ///< not a non-negative integer, or wrong token count
    header,   ///< missing or malformed "initial <m>" line
    section,  ///< unknown or malformed section line
    count,    ///< section shorter or longer than its declared size
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, ParseErrorKind kind, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line), kind_(kind)
    {
    }

    std::size_t line() const noexcept { return line_; }
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    std::size_t line_;
    ParseErrorKind kind_;
};

}  // namespace dynclique
