#pragma once

#include <stdexcept>

namespace timebin {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state (or qubit) that should have unit norm does not.
struct NormalizationError : Error {
    using Error::Error;
};

// A post-selected branch is empty (norm below threshold).
struct EmptyBranchError : Error {
    using Error::Error;
};

// A spatial mode outside the state's declared mode set.
struct UnknownModeError : Error {
    using Error::Error;
};

// A time-bin delay outside the valid range for the operation.
struct OutOfRangeError : Error {
    using Error::Error;
};

// A decoder input occupying time-bins outside the protocol's {0, 1}.
struct BinRangeError : Error {
    using Error::Error;
};

// Invalid configuration (file schema, sampler parameters, CLI usage).
struct ConfigError : Error {
    using Error::Error;
};

// Failure reading or writing files.
struct IoError : Error {
    using Error::Error;
};

}  // namespace timebin
