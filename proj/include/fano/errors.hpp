#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// Base class of all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two values from different threefold models were combined.
struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& msg) : Error(msg) {}
};

/// Caller violated a documented precondition (bad rank, inadmissible
/// charge, negative multiplicity, ...).
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

/// An internal cross-check failed. This signals a bug or corrupted
/// data, never a user mistake.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

/// Syntax error in a ring expression; carries the byte offset and what
/// the parser was looking for.
struct ParseError : Error {
    std::size_t position;
    std::string expected;
    std::string found;

    ParseError(std::size_t pos, std::string exp, std::string got)
        : Error("parse error at position " + std::to_string(pos) + ": expected " + exp +
                ", found " + got),
          position(pos),
          expected(std::move(exp)),
          found(std::move(got)) {}
};

}  // namespace fano
