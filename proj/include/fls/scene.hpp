#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fls/errors.hpp"

namespace fls::sim {

/// Axis-aligned box resting on the floor (z in [0, height]).
struct BoxTarget {
    std::string id;
    double center_x = 0.0;  // meters
    double center_y = 0.0;
    double length = 0.1;  // extent along x
    double width = 0.1;   // extent along y
    double height = 0.05;
    double reflectivity = 0.9;
};

/// Flat floor plus box targets; the simulator input and end-to-end ground truth.
struct Scene {
    double floor_z = 0.0;  // by convention
    double background_reflectivity = 0.3;
    std::vector<BoxTarget> targets;

    void validate() const;
    double max_target_height() const;

    /// Five-target reference layout matching the bundled tank dataset's target
    /// sizes, spread across azimuth so every highlight/shadow pair stays inside
    /// both altitudes' elevation bands under the default pose.
    static Scene reference_tank();
};

struct NoiseSpec {
    double speckle_sigma = 0.0;   // multiplicative log-normal
    double additive_sigma = 0.0;  // additive Gaussian
    std::uint64_t seed = 0;

    void validate() const;
};

}  // namespace fls::sim
