#pragma once

#include <stdexcept>
#include <string>

namespace jetfinsler {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Requested derivative order exceeds the kernel limit.
class OrderTooHigh : public Error
{
public:
    using Error::Error;
};

/// A field was evaluated outside its domain (e.g. a fractional power of a non-positive base).
class DomainError : public Error
{
public:
    using Error::Error;
};

class NonPositiveMetric : public Error
{
public:
    using Error::Error;
};

class SingularChange : public Error
{
public:
    using Error::Error;
};

class DegenerateCubic : public Error
{
public:
    using Error::Error;
};

class DegenerateMetric : public Error
{
public:
    using Error::Error;
};

class SingularDenominator : public Error
{
public:
    using Error::Error;
};

class ZeroEinsteinConstant : public Error
{
public:
    using Error::Error;
};

/// Scenario or expression could not be parsed or failed validation.
class ConfigError : public Error
{
public:
    using Error::Error;
};

} // namespace jetfinsler
