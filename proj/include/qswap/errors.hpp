#pragma once

#include <stdexcept>
#include <string>

namespace qswap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid dimension, or two operands built over different dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Unknown, duplicated or mismatched qudit labels; oversized registers.
class RegisterError : public Error {
public:
    using Error::Error;
};

/// A measurement branch or swap outcome with vanishing probability.
class ZeroProbabilityError : public Error {
public:
    using Error::Error;
};

/// Malformed sweep / protocol / command-line configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace qswap
