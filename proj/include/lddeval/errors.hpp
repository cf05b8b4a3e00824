#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lddeval {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Record-level error in a line-oriented input (CoNLL-U, Pharaoh, bitext).
class ParseError : public Error {
public:
    ParseError(std::size_t line_no, const std::string& message)
        : Error("line " + std::to_string(line_no) + ": " + message), line_no_(line_no) {}

    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

}  // namespace lddeval
