#pragma once

#include <stdexcept>
#include <string>

namespace fewapsp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// A promise about the input (distinct weights, uniformity, regularity) does not hold.
class AuditError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

// Internal consistency failure inside a solver; indicates a bug, not bad input.
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace fewapsp
