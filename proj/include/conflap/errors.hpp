#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conflap {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division by a zero element (rational, radical, or operator coefficient).
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what = "division by zero element")
        : Error(what) {}
};

// Operands disagree on variable count or radical base.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

// Exact evaluation hit a vanishing denominator.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Invalid argument to a constructor or verifier (n < 1, k < 1, bad weight, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Composition or reduction exceeded the configured monomial budget.
class TermCapError : public Error {
public:
    TermCapError(std::size_t count, std::size_t cap)
        : Error("term cap exceeded: " + std::to_string(count) + " monomials > cap " +
                std::to_string(cap)),
          count_(count),
          cap_(cap) {}
    std::size_t count() const { return count_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t count_;
    std::size_t cap_;
};

// Text input rejected by a parser; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace conflap
