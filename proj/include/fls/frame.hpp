#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fls/geometry.hpp"

namespace fls {

/// Pre-noise pixel class, emitted alongside simulated frames as segmentation
/// ground truth. Values match the label PGM encoding.
enum class PixelClass : std::uint8_t {
    background = 0,
    highlight = 1,
    shadow = 2,
};

/// One polar intensity raster (rows = range bins ascending, cols = beams
/// ascending azimuth) plus the pose and window it was taken with.
struct SonarFrame {
    geo::FovSpec fov;
    geo::SonarPose pose;
    std::string frame_id;
    std::uint64_t noise_seed = 0;

    std::vector<float> intensities;     // size n_range_bins * n_beams, in [0,1]
    std::vector<std::uint8_t> labels;   // same layout; empty when unavailable

    int rows() const { return fov.n_range_bins; }
    int cols() const { return fov.n_beams; }
    std::size_t index(int bin, int beam) const {
        return static_cast<std::size_t>(bin) * cols() + beam;
    }
    float at(int bin, int beam) const { return intensities[index(bin, beam)]; }
    float& at(int bin, int beam) { return intensities[index(bin, beam)]; }
    bool has_labels() const { return !labels.empty(); }
    PixelClass label_at(int bin, int beam) const {
        return static_cast<PixelClass>(labels[index(bin, beam)]);
    }

    void validate() const;
};

}  // namespace fls
