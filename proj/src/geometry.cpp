#include "fls/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fls::geo {

void SonarPose::validate() const {
    if (!(position.z > 0.0))
        throw GeometryError("sonar pose: altitude must be positive");
    if (!(std::abs(pitch) < kPi / 2))
        throw GeometryError("sonar pose: |pitch| must be < pi/2");
}

void FovSpec::validate() const {
    if (!(azimuth_fov > 0.0) || !(elevation_fov > 0.0))
        throw GeometryError("fov: angular extents must be positive");
    if (n_beams < 1)
        throw GeometryError("fov: n_beams must be >= 1");
    if (!(r_min >= 0.0) || !(r_min < r_max))
        throw GeometryError("fov: need 0 <= r_min < r_max");
    if (n_range_bins < 2)
        throw GeometryError("fov: n_range_bins must be >= 2");
}

bool fov_equal(const FovSpec& a, const FovSpec& b, double tol) {
    return std::abs(a.azimuth_fov - b.azimuth_fov) <= tol &&
           std::abs(a.elevation_fov - b.elevation_fov) <= tol &&
           a.n_beams == b.n_beams && a.n_range_bins == b.n_range_bins &&
           std::abs(a.r_min - b.r_min) <= tol && std::abs(a.r_max - b.r_max) <= tol;
}

WorldPoint project_to_world(const PolarPoint& p) {
    const double cphi = std::cos(p.phi);
    return {p.r * cphi * std::cos(p.theta), p.r * cphi * std::sin(p.theta),
            p.r * std::sin(p.phi)};
}

std::pair<double, double> zero_elevation_projection(const PolarPoint& p) {
    return {p.r, p.theta};
}

WorldPoint sensor_to_world(const SonarPose& pose, const WorldPoint& v) {
    // Ry(pitch): +pitch tips the x axis below the horizon.
    const double cp = std::cos(pose.pitch), sp = std::sin(pose.pitch);
    const double xp = cp * v.x + sp * v.z;
    const double yp = v.y;
    const double zp = -sp * v.x + cp * v.z;
    const double cy = std::cos(pose.yaw), sy = std::sin(pose.yaw);
    return {pose.position.x + cy * xp - sy * yp,
            pose.position.y + sy * xp + cy * yp,
            pose.position.z + zp};
}

WorldPoint world_to_sensor(const SonarPose& pose, const WorldPoint& w) {
    const double dx = w.x - pose.position.x;
    const double dy = w.y - pose.position.y;
    const double dz = w.z - pose.position.z;
    const double cy = std::cos(pose.yaw), sy = std::sin(pose.yaw);
    const double xr = cy * dx + sy * dy;
    const double yr = -sy * dx + cy * dy;
    const double cp = std::cos(pose.pitch), sp = std::sin(pose.pitch);
    return {cp * xr - sp * dz, yr, sp * xr + cp * dz};
}

double grazing_angle(const SonarPose& pose, double ground_range) {
    if (!(ground_range > 0.0))
        throw GeometryError("grazing_angle: ground_range must be positive");
    return std::atan2(pose.altitude(), ground_range);
}

double slant_to_ground(double r, double H) {
    if (!(H > 0.0))
        throw GeometryError("slant_to_ground: altitude must be positive");
    if (r < H)
        throw GeometryError("slant_to_ground: above-floor range (r < H)");
    return std::sqrt(r * r - H * H);
}

double ground_to_slant(double g, double H) { return std::hypot(g, H); }

std::optional<std::pair<double, double>> elevation_ground_band(const SonarPose& pose,
                                                               const FovSpec& fov) {
    const double H = pose.altitude();
    const double beta_steep = pose.pitch + 0.5 * fov.elevation_fov;  // lower fan edge
    const double beta_shallow = pose.pitch - 0.5 * fov.elevation_fov;
    if (beta_steep <= 0.0) return std::nullopt;  // whole fan at or above horizontal
    const double g_lo = beta_steep >= kPi / 2 ? 0.0 : H / std::tan(beta_steep);
    const double g_hi = beta_shallow <= 0.0 ? std::numeric_limits<double>::infinity()
                                            : H / std::tan(beta_shallow);
    return std::make_pair(g_lo, g_hi);
}

FanSpec FanSpec::from_fov(const FovSpec& fov, double m_per_px) {
    FanSpec fan;
    fan.m_per_px = m_per_px > 0.0 ? m_per_px : fov.bin_size();
    const double half = 0.5 * fov.azimuth_fov;
    const double y_top = fov.r_max;                  // along-range extent
    const double y_bot = fov.r_min * std::cos(half);
    fan.height = static_cast<int>(std::ceil((y_top - y_bot) / fan.m_per_px)) + 1;
    const double x_half = fov.r_max * std::sin(half);
    const int half_px = static_cast<int>(std::ceil(x_half / fan.m_per_px));
    fan.width = 2 * half_px + 1;
    fan.apex_x = half_px;
    fan.apex_y = y_top / fan.m_per_px;  // row of r = 0; below the last row when r_min > 0
    return fan;
}

FanPixel polar_to_fan(int bin, int beam, const FovSpec& fov, const FanSpec& fan) {
    if (bin < 0 || bin >= fov.n_range_bins || beam < 0 || beam >= fov.n_beams)
        throw GeometryError("polar_to_fan: pixel outside raster");
    const double r = fov.bin_range(bin);
    const double th = fov.beam_azimuth(beam);
    return {fan.apex_x + r * std::sin(th) / fan.m_per_px,
            fan.apex_y - r * std::cos(th) / fan.m_per_px};
}

std::pair<double, double> fan_to_polar(double x, double y, const FovSpec& fov,
                                       const FanSpec& fan) {
    const double X = (x - fan.apex_x) * fan.m_per_px;
    const double Y = (fan.apex_y - y) * fan.m_per_px;
    const double r = std::hypot(X, Y);
    const double th = std::atan2(X, Y);
    return {fov.range_to_bin(r), fov.azimuth_to_beam(th)};
}

}  // namespace fls::geo
