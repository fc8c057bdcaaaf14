#pragma once

#include <stdexcept>
#include <string>

namespace surfcohom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (word tokens, job files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ")"
                         : what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Input that is well formed but violates a domain precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class PresentationMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DeterminantNotUnit : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class RelatorNotRespected : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class CompositeNotZero : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotACocycle : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotInvariant : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// An algebraic identity that must hold by construction did not.
class IdentityCheckFailure : public Error {
public:
    using Error::Error;
};

} // namespace surfcohom
