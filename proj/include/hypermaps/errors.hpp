#pragma once

#include <stdexcept>
#include <string>

namespace hypermaps {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values that must live on the same domain {1..n} do not.
struct DomainMismatch : Error {
    using Error::Error;
};

/// restrict_to() was handed a subset the permutation does not preserve.
struct NotInvariant : Error {
    using Error::Error;
};

/// Construction-time invariant violation (non-bijection, fixed point in an
/// involution, sigma triple breaking the defining relation, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Malformed text. line/column are 1-based; 0 means unknown.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    std::string message;  // without the position suffix

    ParseError(const std::string& message_text, int line_no = 0, int column_no = 0)
        : Error(format(message_text, line_no, column_no)),
          line(line_no),
          column(column_no),
          message(message_text) {}

private:
    static std::string format(const std::string& message_text, int line_no, int column_no) {
        std::string where;
        if (line_no > 0) where += " at line " + std::to_string(line_no);
        if (column_no > 0)
            where += (line_no > 0 ? ", column " : " at column ") + std::to_string(column_no);
        return message_text + where;
    }
};

struct CellNotFound : Error {
    using Error::Error;
};

struct CellTypeMismatch : Error {
    using Error::Error;
};

struct NotOrientable : Error {
    using Error::Error;
};

struct NotConnected : Error {
    using Error::Error;
};

struct BadColor : Error {
    using Error::Error;
};

struct BadColorSet : Error {
    using Error::Error;
};

struct BadDimension : Error {
    using Error::Error;
};

struct BubbleNotFound : Error {
    using Error::Error;
};

struct BadSize : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

}  // namespace hypermaps
