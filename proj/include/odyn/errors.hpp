#pragma once

#include <stdexcept>
#include <string>

namespace odyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation argument beyond the finite domain of a Young function.
struct DomainExceeded : Error {
    using Error::Error;
};

/// Generalized-inverse query above the largest representable value.
struct NotAttained : Error {
    using Error::Error;
};

/// Legendre conjugate diverges (sub-linear growth at infinity).
struct UnboundedConjugate : Error {
    using Error::Error;
};

/// Configuration failed validation; message carries field diagnostics.
struct InvalidConfig : Error {
    using Error::Error;
};

/// Factor-map weights are not bounded away from 0 and infinity.
struct WeightUnbounded : Error {
    using Error::Error;
};

struct UnboundedDistortion : Error {
    using Error::Error;
};

/// Shadowing requested without an HC/HD/GH certificate.
struct NotHyperbolic : Error {
    using Error::Error;
};

/// A correction term escaped its invariant half of the splitting.
struct SplitLeak : Error {
    using Error::Error;
};

/// Orbit support would leave the materialized level window.
struct WindowOverflow : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace odyn
