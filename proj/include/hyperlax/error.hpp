#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlax/rational.hpp"

namespace hyperlax {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An operation that needs a degree or a leading coefficient got p == 0.
class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// A documented precondition (p(e) != 0, d >= degree(q), n > 3, ...) does not hold.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// A line restriction has a non-real root, so p is not hyperbolic in the
/// given direction. Carries the point whose restriction failed.
class NotHyperbolicHere : public Error {
public:
    NotHyperbolicHere(const std::string& what, std::vector<Rational> point)
        : Error(what), point_(std::move(point)) {}

    const std::vector<Rational>& point() const noexcept { return point_; }

private:
    std::vector<Rational> point_;
};

/// A determinantal certificate does not expand to the claimed polynomial.
class InvalidCertificate : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperlax
