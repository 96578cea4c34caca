#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tnp {

/// Bad argument to a library call (vertex out of range, missing edge, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed `.gr` / `.td` text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive solver refused an instance larger than its configured cap.
class SizeCapError : public std::runtime_error {
public:
    SizeCapError(const std::string& solver, std::size_t n, std::size_t cap)
        : std::runtime_error(solver + ": instance has " + std::to_string(n) +
                             " vertices, cap is " + std::to_string(cap)),
          n_(n), cap_(cap) {}

    std::size_t vertices() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

/// A documented precondition of an algorithm does not hold for the input
/// (e.g. the tree method on a cyclic graph, a non-minimum Roman function).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tnp
