// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tricoil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Coincident transmit and receive centers; the dipole kernel is undefined.
class SingularGeometry : public Error {
public:
    using Error::Error;
};

/// The link carries no energy for the requested step (Q = 0 or all couplings zero).
class NoCoupling : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line) : Error(what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A configuration value violates its invariant; field() names the offending key.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace tricoil
