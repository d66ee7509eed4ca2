#include "cammo/trajectory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cammo {

Pose look_at(const Point3& eye, const Point3& target, const Eigen::Vector3d& up) {
  Eigen::Vector3d forward = target - eye;
  const double distance = forward.norm();
  if (!(distance > 0.0)) {
    throw std::invalid_argument("look_at: eye coincides with target");
  }
  forward /= distance;

  Eigen::Vector3d right = up.cross(forward);
  const double right_norm = right.norm();
  if (right_norm < 1e-12) {
    throw std::invalid_argument("look_at: view direction is parallel to up");
  }
  right /= right_norm;
  const Eigen::Vector3d image_y = forward.cross(right);

  Eigen::Matrix3d rotation;
  rotation.row(0) = right;
  rotation.row(1) = image_y;
  rotation.row(2) = forward;
  return Pose(rotation, -(rotation * eye));
}

Trajectory orbit_trajectory(const Point3& center, double radius, double elevation,
                            int n, const Intrinsics& intr) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("orbit_trajectory: radius must be > 0");
  }
  if (!(std::abs(elevation) < std::numbers::pi / 2)) {
    throw std::invalid_argument("orbit_trajectory: |elevation| must be < pi/2");
  }
  if (n < 1) {
    throw std::invalid_argument("orbit_trajectory: n must be >= 1");
  }

  Trajectory trajectory{{}, intr};
  trajectory.poses.reserve(n);
  const double cos_e = std::cos(elevation);
  const double sin_e = std::sin(elevation);
  for (int k = 0; k < n; ++k) {
    const double azimuth = 2.0 * std::numbers::pi * k / n;
    const Point3 eye = center + radius * Point3(cos_e * std::cos(azimuth), sin_e,
                                                cos_e * std::sin(azimuth));
    trajectory.poses.push_back(look_at(eye, center, Eigen::Vector3d(0, 1, 0)));
  }
  return trajectory;
}

Pose interpolate_pose(const Pose& a, const Pose& b, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("interpolate_pose: t must be in [0, 1]");
  }
  if (t == 0.0) return a;
  if (t == 1.0) return b;

  Eigen::Quaterniond qa(a.rotation());
  Eigen::Quaterniond qb(b.rotation());
  if (qa.dot(qb) < 0.0) {
    qb.coeffs() = -qb.coeffs();
  }
  Eigen::Quaterniond q = qa.slerp(t, qb);
  q.normalize();

  const Point3 center = (1.0 - t) * camera_center(a) + t * camera_center(b);
  const Eigen::Matrix3d rotation = q.toRotationMatrix();
  return Pose(rotation, -(rotation * center));
}

Trajectory densify_trajectory(const std::vector<Pose>& anchors, int per_segment,
                              const Intrinsics& intr) {
  if (anchors.size() < 2) {
    throw std::invalid_argument("densify_trajectory: need at least 2 anchors");
  }
  if (per_segment < 1) {
    throw std::invalid_argument("densify_trajectory: per_segment must be >= 1");
  }

  Trajectory trajectory{{}, intr};
  trajectory.poses.reserve((anchors.size() - 1) * per_segment + 1);
  trajectory.poses.push_back(anchors.front());
  for (std::size_t segment = 0; segment + 1 < anchors.size(); ++segment) {
    for (int step = 1; step <= per_segment; ++step) {
      if (step == per_segment) {
        trajectory.poses.push_back(anchors[segment + 1]);
      } else {
        const double t = static_cast<double>(step) / per_segment;
        trajectory.poses.push_back(interpolate_pose(anchors[segment], anchors[segment + 1], t));
      }
    }
  }
  return trajectory;
}

}  // namespace cammo
