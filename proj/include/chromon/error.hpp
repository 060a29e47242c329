#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace chromon {

// Base of every error the library raises on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Some interval properly contains another; the algorithms need a proper family.
class NotProperError : public Error {
public:
    NotProperError(std::string outer, std::string inner)
        : Error("not a proper interval family: '" + inner + "' is properly contained in '" + outer + "'"),
          outer_(std::move(outer)), inner_(std::move(inner)) {}

    const std::string& outer() const noexcept { return outer_; }
    const std::string& inner() const noexcept { return inner_; }

private:
    std::string outer_;
    std::string inner_;
};

// A vertex (or request) weight exceeds the capacity C.
class WeightTooLargeError : public Error {
public:
    WeightTooLargeError(std::string id, long long weight, long long capacity)
        : Error("weight of '" + id + "' is " + std::to_string(weight) + " > capacity " + std::to_string(capacity)),
          id_(std::move(id)) {}

    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

// Exhaustive oracles refuse instances above their size guard.
class GuardError : public Error {
public:
    GuardError(const std::string& what, std::size_t size, std::size_t guard)
        : Error(what + ": size " + std::to_string(size) + " exceeds guard " + std::to_string(guard)) {}
};

// Input that violates a precondition of the operation (e.g. an infeasible LP point).
class InfeasibleInputError : public Error {
public:
    using Error::Error;
};

// A certificate handed to a mapper or validator does not hold.
class InvalidCertificate : public Error {
public:
    using Error::Error;
};

}  // namespace chromon
