#pragma once

#include <stdexcept>
#include <string>

namespace hicite {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad CSV header, unparseable cell, wrong field count.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally valid input that violates a domain invariant
// (pub_year after census, indicator outside [0,1], duplicate id, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// A lookup hit an empty cell or a missing threshold entry.
class NoDataError : public Error {
public:
    explicit NoDataError(const std::string& what) : Error(what) {}
};

// An indicator whose denominator is empty: undefined, as opposed to zero.
class UndefinedIndicatorError : public Error {
public:
    explicit UndefinedIndicatorError(const std::string& what) : Error(what) {}
};

// Not enough observations for the requested statistic.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what) : Error(what) {}
};

// A statistic exists but is undefined on this sample (zero variance, ...).
class DegenerateDataError : public Error {
public:
    explicit DegenerateDataError(const std::string& what) : Error(what) {}
};

// Invalid configuration (synthetic-corpus parameters, CLI options).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Numerical routine called outside its domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// The requested output cannot be produced from the given input kind.
class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& what) : Error(what) {}
};

}  // namespace hicite
