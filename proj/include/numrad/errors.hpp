#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquare : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IterationLimit : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace numrad
