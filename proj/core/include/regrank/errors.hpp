#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regrank {

// Malformed or inconsistent input data. `line` is 1-based when it refers to
// a position in an input file, 0 when not applicable.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Syntax error in a meta-path description string. `pos` is a 0-based offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Violated Join/Select/Repeat typing constraint.
class TypeMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Brute-force enumeration exceeded its configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Corrupt, truncated or incompatible snapshot file.
class SnapshotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lookup of a user/item/node that is not part of the graph.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace regrank
