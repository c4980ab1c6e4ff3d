#pragma once

#include <string>
#include <utility>

#include "fls/frame.hpp"
#include "fls/scene.hpp"

namespace fls::sim {

/// Flat-floor ground length of the shadow cast past a target of height h whose
/// far edge sits at horizontal distance x_t from a sensor at altitude H:
/// x_t * h / (H - h). Serves as the renderer's independent oracle.
double analytic_shadow_length(double H, double h, double x_t);

/// Render one polar frame by exact per-bin intersection of the range arc with
/// the scene cross-section in each beam's vertical plane. Highlights come from
/// visible box faces, background from visible floor, shadow bins get no return.
/// The pre-noise class raster is stored in frame.labels. Deterministic for a
/// fixed noise seed.
SonarFrame render_frame(const Scene& scene, const geo::SonarPose& pose,
                        const geo::FovSpec& fov, const NoiseSpec& noise,
                        std::string frame_id = "frame");

/// Render the same scene at altitude H and H + delta_h (identical x-y position
/// and yaw). When retrim_pitch is set the second pose re-aims the fan center at
/// the floor point the first pose was aimed at.
std::pair<SonarFrame, SonarFrame> render_pair(const Scene& scene,
                                              const geo::SonarPose& pose,
                                              const geo::FovSpec& fov,
                                              const NoiseSpec& noise, double delta_h,
                                              bool retrim_pitch = false,
                                              const std::string& id_stem = "frame");

}  // namespace fls::sim
