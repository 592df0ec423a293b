#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquelab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (bad token, missing header, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a domain rule (self-loop, single-class
// dataset, id out of range, ...).
class DataError : public Error {
public:
    using Error::Error;
};

// A bug: an internal invariant that should hold by construction does not.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace cliquelab
