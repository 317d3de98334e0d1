#pragma once

#include <stdexcept>
#include <string>

namespace metatok {

// Bad arguments: wrong lengths, mismatched degree or rank, out-of-range indices.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Demazure-type operator produced a non-polynomial value. Always a bug.
class InternalNonPolynomial : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InvalidGamma : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace metatok
