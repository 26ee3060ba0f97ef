#pragma once

#include <stdexcept>
#include <string>

namespace spectough {

/// Base class for all domain errors raised by this library. Precondition
/// violations on plain arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The operation needs a connected graph; carries one unreachable pair.
class NotConnectedError : public Error {
public:
    NotConnectedError(int u, int v)
        : Error("graph is not connected: no path between vertices " +
                std::to_string(u) + " and " + std::to_string(v)),
          u_(u),
          v_(v) {}
    int u() const { return u_; }
    int v() const { return v_; }

private:
    int u_;
    int v_;
};

/// Malformed input text; line numbers are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line)
        : Error("parse error at line " + std::to_string(line) + ": " + msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Toughness of a complete graph is undefined (no cut set exists).
class ToughnessUndefinedError : public Error {
public:
    ToughnessUndefinedError() : Error("toughness is undefined for complete graphs") {}
};

/// The graph exceeds an enumeration guard.
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& msg) : Error(msg) {}
};

/// An eigensolver could not meet its residual contract.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace spectough
