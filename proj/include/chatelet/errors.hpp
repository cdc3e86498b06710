#pragma once

#include <stdexcept>
#include <string>

namespace chatelet {

// Error taxonomy. Each class maps 1:1 onto a C API status code and a CLI
// exit code, so keep the set small and stable.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file or unparseable field.
class ParseError : public Error {
public:
    using Error::Error;
};

// Input fails one of the surface hypotheses (a nonzero nonsquare,
// deg f in {3,4}, squarefree f).
class HypothesisError : public Error {
public:
    enum class Kind { ZeroA, SquareA, BadDegree, RepeatedRoot };

    HypothesisError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
    Kind kind;
};

// Operation needs a < 0 (definite conic fibers) but got a >= 0.
class RegimeError : public Error {
public:
    using Error::Error;
};

// Requested work exceeds the configured enumeration budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// An exact int64 computation would wrap.
class OverflowError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace chatelet
