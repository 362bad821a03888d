#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list / graph6 / JSON input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A precondition on an argument was violated (bad parameters, invalid partitions, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The operation requires a connected graph.
class DisconnectedError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a size or search budget (vertex cap, brute-force cap, cell cap).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Numerical iteration failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A partition handed to divisor_matrix is not equitable. Reports one offending witness:
/// vertices `u` and `v` share a cell but have a different number of neighbours in `cell`.
class NotEquitableError : public Error {
public:
    NotEquitableError(int u, int v, int cell)
        : Error("partition is not equitable: vertices " + std::to_string(u) + " and " +
                std::to_string(v) + " have different neighbour counts in cell " +
                std::to_string(cell)),
          u_(u), v_(v), cell_(cell) {}

    int u() const noexcept { return u_; }
    int v() const noexcept { return v_; }
    int cell() const noexcept { return cell_; }

private:
    int u_, v_, cell_;
};

/// A divisor matrix is internally inconsistent (reducible, ratio mismatch along cell paths).
class InvalidDivisorMatrix : public Error {
public:
    using Error::Error;
};

/// A sequence failed self-similarity or preservation verification.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace selfsim
