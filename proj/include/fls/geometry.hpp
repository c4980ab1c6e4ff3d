#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "fls/errors.hpp"

namespace fls::geo {

inline constexpr double kPi = std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// 3D point in the sonar polar frame: slant range r [m], azimuth theta [rad]
/// (positive toward +y), elevation phi [rad] (positive up from the acoustic axis).
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// Right-handed world frame, z up, z = 0 on the seafloor plane.
struct WorldPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Sensor pose: acoustic center position (position.z = altitude above the floor),
/// heading yaw [rad] and downward tilt pitch [rad] (positive = nose down).
struct SonarPose {
    WorldPoint position{0.0, 0.0, 1.0};
    double yaw = 0.0;
    double pitch = 0.0;

    double altitude() const { return position.z; }
    void validate() const;
};

/// Beam/range-bin layout of one frame. Beam width is azimuth_fov / n_beams;
/// the raster window starts at r_min (> 0 in practice), not at zero range.
struct FovSpec {
    double azimuth_fov = deg_to_rad(32.0);
    double elevation_fov = deg_to_rad(14.0);
    int n_beams = 128;
    double r_min = 1.0;
    double r_max = 2.0;
    int n_range_bins = 2048;

    double beam_width() const { return azimuth_fov / n_beams; }
    double bin_size() const { return (r_max - r_min) / n_range_bins; }

    /// Azimuth of beam center b (beam 0 sits at -azimuth_fov/2).
    double beam_azimuth(int beam) const {
        return -0.5 * azimuth_fov + (beam + 0.5) * beam_width();
    }
    /// Slant range of bin center k.
    double bin_range(int bin) const { return r_min + (bin + 0.5) * bin_size(); }

    /// Fractional beam index of an azimuth (beam centers land on integers).
    double azimuth_to_beam(double theta) const {
        return (theta + 0.5 * azimuth_fov) / beam_width() - 0.5;
    }
    /// Fractional bin index of a slant range.
    double range_to_bin(double r) const { return (r - r_min) / bin_size() - 0.5; }

    /// Pixel-range offset of the raster start from the zero-range baseline.
    /// Adding it to a raster bin index references the measure to true r = 0.
    double apex_offset_bins() const { return r_min / bin_size(); }

    bool operator==(const FovSpec&) const = default;
    void validate() const;
};

bool fov_equal(const FovSpec& a, const FovSpec& b, double tol = 1e-9);

/// Eq-style spherical-to-Cartesian projection in the sensor frame:
/// (r cos(phi) cos(theta), r cos(phi) sin(theta), r sin(phi)).
WorldPoint project_to_world(const PolarPoint& p);

/// Image-plane projection: drops phi, returning (r, theta). Every elevation
/// collapses to the same pixel — the source of the height ambiguity.
std::pair<double, double> zero_elevation_projection(const PolarPoint& p);

/// Sensor-frame point -> world frame through a pose (Rz(yaw) * Ry(pitch) + t).
WorldPoint sensor_to_world(const SonarPose& pose, const WorldPoint& sensor_pt);

/// Inverse of sensor_to_world.
WorldPoint world_to_sensor(const SonarPose& pose, const WorldPoint& world_pt);

/// Angle between the incident ray and a flat floor at a given horizontal
/// distance from the sensor: atan(H / ground_range). Pitch does not enter;
/// it only gates which ground ranges the elevation fan covers.
double grazing_angle(const SonarPose& pose, double ground_range);

/// Horizontal distance of a floor point seen at slant range r from altitude H.
double slant_to_ground(double r, double H);

/// Slant range of a floor point at horizontal distance g from altitude H.
double ground_to_slant(double g, double H);

/// Ground-range interval of the floor covered by the elevation fan, or
/// nullopt when no ray points below the horizontal. second == +inf when the
/// upper fan edge is at or above the horizontal.
std::optional<std::pair<double, double>> elevation_ground_band(const SonarPose& pose,
                                                               const FovSpec& fov);

/// Geometry of a Cartesian fan rendering of a polar frame. The apex (r = 0)
/// projects to (apex_x, apex_y); with r_min > 0 that pixel lies below the
/// raster (apex_y > height - 1), which is why fan-image pixel ranges need the
/// apex offset added before metric use.
struct FanSpec {
    int width = 0;
    int height = 0;
    double m_per_px = 0.0;
    double apex_x = 0.0;
    double apex_y = 0.0;

    /// Build a fan raster spec for a FOV; m_per_px defaults to the bin size.
    static FanSpec from_fov(const FovSpec& fov, double m_per_px = 0.0);
};

struct FanPixel {
    double x = 0.0;
    double y = 0.0;
};

/// Polar raster pixel (bin, beam) -> fan-image pixel coordinates.
/// Throws GeometryError when the pixel is outside the raster.
FanPixel polar_to_fan(int bin, int beam, const FovSpec& fov, const FanSpec& fan);

/// Fan-image coordinates -> fractional (bin, beam).
std::pair<double, double> fan_to_polar(double x, double y, const FovSpec& fov,
                                       const FanSpec& fan);

}  // namespace fls::geo
