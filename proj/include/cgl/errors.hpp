#pragma once

#include <stdexcept>
#include <string>

namespace cgl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The dissipativity assumption (beta > 0, eta > 0, alpha > 0, eps in (0,1])
/// fails; averaging results do not apply to such parameters.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NegativeTime : public Error {
public:
    using Error::Error;
};

class NegativeDt : public Error {
public:
    using Error::Error;
};

class StepTooLarge : public Error {
public:
    using Error::Error;
};

/// Overflow guard tripped (quintic blow-up or NaN propagation).
class NonFinite : public Error {
public:
    using Error::Error;
};

class ErgodicSolveFailed : public Error {
public:
    using Error::Error;
};

class DeltaNotAligned : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace cgl
