#pragma once

#include <stdexcept>
#include <string>

namespace fls {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument to a geometric operation (out-of-domain range, angle, ...).
struct GeometryError : Error {
    using Error::Error;
};

/// Scene/pose combinations the renderer cannot image.
struct SimulationError : Error {
    using Error::Error;
};

/// Region extraction / measurement failures.
struct SegmentationError : Error {
    using Error::Error;
};

/// Height solving failures.
struct EstimationError : Error {
    using Error::Error;
};

/// The altitude change is not expressed in the measurements (D ~ 0).
struct DegenerateGeometryError : EstimationError {
    using EstimationError::EstimationError;
};

/// Measurements cannot belong to the same physical target (h <= 0).
struct InconsistentPairError : EstimationError {
    using EstimationError::EstimationError;
};

/// File format / filesystem problems.
struct IoError : Error {
    using Error::Error;
};

/// Bad or unknown configuration keys/values.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace fls
