#pragma once

#include <stdexcept>
#include <string>

namespace diffeo {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

struct MissingAssignment : std::runtime_error {
    explicit MissingAssignment(const std::string& var)
        : std::runtime_error("missing assignment for indeterminate '" + var + "'") {}
};

struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& msg) : std::runtime_error("zero denominator: " + msg) {}
};

struct NonzeroConstantTerm : std::runtime_error {
    explicit NonzeroConstantTerm(const std::string& msg)
        : std::runtime_error("nonzero constant term: " + msg) {}
};

struct OrderMismatch : std::runtime_error {
    explicit OrderMismatch(const std::string& msg) : std::runtime_error("order mismatch: " + msg) {}
};

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& msg) : std::runtime_error("not invertible: " + msg) {}
};

struct OrderUnderflow : std::runtime_error {
    explicit OrderUnderflow(const std::string& msg)
        : std::runtime_error("truncation order underflow: " + msg) {}
};

}  // namespace diffeo
