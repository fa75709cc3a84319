#pragma once

#include <stdexcept>
#include <string>

namespace fveg {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: grid/domain mismatch, unknown problem name, bad config key, ...
struct ConfigError : Error {
    using Error::Error;
};

// A field or state violates admissibility (rho <= 0, internal energy <= 0, non-finite).
struct StateError : Error {
    using Error::Error;
};

// Local linearization is supersonic; the evolution-operator arcs are undefined.
struct SupersonicError : StateError {
    using StateError::StateError;
};

// An evolution-operator prediction came out inadmissible at some edge.
struct PredictionError : StateError {
    PredictionError(const std::string& msg, long edge) : StateError(msg), edge_id(edge) {}
    long edge_id;
};

// A phase-space path state left the admissible set during quadrature.
struct PathError : StateError {
    using StateError::StateError;
};

// A full finite-volume step produced an inadmissible cell (caller may retry with smaller dt).
struct StepError : StateError {
    using StateError::StateError;
};

// Requested capability does not exist (e.g. exact solution for a problem without one).
struct CapabilityError : Error {
    using Error::Error;
};

// Filesystem trouble.
struct IoError : Error {
    using Error::Error;
};

} // namespace fveg
