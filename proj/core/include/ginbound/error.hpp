#pragma once

#include <stdexcept>
#include <string>

namespace ginbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A list of integers that is not a strictly decreasing sequence of positive invariants.
class InvalidSequence : public Error {
public:
    using Error::Error;
};

/// A monomial ideal whose x2-stripped saturation is not a point-set staircase.
class NotACurveIdeal : public Error {
public:
    using Error::Error;
};

/// Budget formulas only exist for s = 4 and s = 5.
class UnsupportedS : public Error {
public:
    using Error::Error;
};

class InsufficientBudget : public Error {
public:
    using Error::Error;
};

class Infeasible : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ginbound
