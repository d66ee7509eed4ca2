#pragma once

#include <vector>

#include "cammo/geometry.hpp"

namespace cammo {

/// Ordered camera path with shared intrinsics.
struct Trajectory {
  std::vector<Pose> poses;
  Intrinsics intr;
};

/// World-to-camera pose at eye looking toward target, world-up up. The
/// rotation's third row is the unit vector from eye toward target. Throws
/// std::invalid_argument when eye coincides with target or the view
/// direction is parallel to up.
Pose look_at(const Point3& eye, const Point3& target, const Eigen::Vector3d& up);

/// n cameras at azimuths 2*pi*k/n on a circle of the given radius and
/// elevation around center, each looking at center with world-up (0,1,0).
/// Requires radius > 0, |elevation| < pi/2, n >= 1.
Trajectory orbit_trajectory(const Point3& center, double radius, double elevation,
                            int n, const Intrinsics& intr);

/// Constant-speed spherical interpolation of the rotations (shortest path)
/// with camera centers interpolated linearly in world space. t must be in
/// [0, 1]; out-of-range t raises std::domain_error. t = 0 and t = 1 return
/// the endpoints exactly.
Pose interpolate_pose(const Pose& a, const Pose& b, double t);

/// Piecewise interpolate_pose between consecutive anchors with per_segment
/// uniform steps; anchors appear verbatim in the output. Requires at least
/// two anchors and per_segment >= 1.
Trajectory densify_trajectory(const std::vector<Pose>& anchors, int per_segment,
                              const Intrinsics& intr);

}  // namespace cammo
