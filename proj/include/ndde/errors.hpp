#pragma once

#include <stdexcept>
#include <string>

namespace ndde {

/// Base class for all library errors. Subtypes distinguish input-validation
/// failures (rejected before any computation) from numeric failures raised
/// mid-computation; the CLI maps the former to exit code 2, the latter to 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// The delay is not an integer multiple of the grid step, or a delayed
/// lookup does not land on a grid point within tolerance.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation
/// (e.g. Lambert W branch input below -1/e, delay index out of range).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Matrix or vector dimensions are inconsistent with the requested
/// construction.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A parameter-region inequality required by a construction is violated;
/// the message names the required bound.
class RegionError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration: bad flag combination, malformed file, or a
/// precondition checked before computation starts.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Non-finite value produced during computation; the message carries the
/// offending time or layer index.
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace ndde
