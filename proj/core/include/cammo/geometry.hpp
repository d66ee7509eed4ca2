#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace cammo {

/// Points with camera-space depth below this are treated as behind the
/// camera and excluded from depth and motion computations.
inline constexpr double kMinCameraDepth = 1e-6;

using Point3 = Eigen::Vector3d;

/// Pinhole intrinsics. Integer pixel (i, j) samples exactly at (i, j);
/// there is no half-pixel offset anywhere in this library.
struct Intrinsics {
  double fx;
  double fy;
  double cx;
  double cy;
  int width;
  int height;

  Intrinsics(double fx, double fy, double cx, double cy, int width, int height);

  Eigen::Matrix3d matrix() const;

  friend bool operator==(const Intrinsics&, const Intrinsics&) = default;
};

/// World-to-camera rigid transform: P_camera = rotation * P_world + translation.
/// The rotation is validated to be orthonormal with determinant +1.
class Pose {
 public:
  Pose();  // identity
  Pose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

  /// Builds a pose from a (qw, qx, qy, qz) rotation quaternion, the interchange
  /// convention used by SfM text models. The quaternion is normalized.
  static Pose from_quaternion(double qw, double qx, double qy, double qz,
                              const Eigen::Vector3d& translation);

  const Eigen::Matrix3d& rotation() const noexcept { return rotation_; }
  const Eigen::Vector3d& translation() const noexcept { return translation_; }

 private:
  Eigen::Matrix3d rotation_;
  Eigen::Vector3d translation_;
};

/// Continuous pixel position with its camera-space depth.
struct PixelPoint {
  double u;
  double v;
  double depth;
};

struct Ray {
  Point3 origin;               // camera center, world space
  Eigen::Vector3d direction;   // unit vector, world space
};

/// Plücker coordinates of a viewing ray: unit direction d and moment o × d.
/// With unit d, |moment| equals the ray's distance from the world origin.
struct PluckerRay {
  Eigen::Vector3d direction;
  Eigen::Vector3d moment;

  static PluckerRay from_origin_direction(const Point3& origin,
                                          const Eigen::Vector3d& direction);
};

/// Dense height x width x 6 raster of Plücker rays, row-major, channels
/// ordered (d_x, d_y, d_z, m_x, m_y, m_z).
class PluckerMap {
 public:
  PluckerMap(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  double* at(int row, int col);
  const double* at(int row, int col) const;

  const std::vector<double>& data() const noexcept { return data_; }

 private:
  int width_;
  int height_;
  std::vector<double> data_;
};

/// Projects a world point into the image. Returns nullopt when the point
/// lies at or behind the camera plane (depth <= kMinCameraDepth), which
/// callers must treat as "exclude this point".
std::optional<PixelPoint> project_point(const Pose& pose, const Intrinsics& intr,
                                        const Point3& point);

/// Lifts pixel (u, v) at the given camera-space depth back to a world point.
/// Throws std::invalid_argument when depth <= 0.
Point3 backproject_pixel(const Pose& pose, const Intrinsics& intr, double u,
                         double v, double depth);

/// Camera center in world space: -Rᵗ t.
Point3 camera_center(const Pose& pose);

/// World-space viewing ray through pixel (u, v).
Ray pixel_ray(const Pose& pose, const Intrinsics& intr, double u, double v);

PluckerRay plucker_ray(const Pose& pose, const Intrinsics& intr, double u,
                       double v);

/// Per-pixel plucker_ray evaluated at integer pixel centers.
PluckerMap plucker_map(const Pose& pose, const Intrinsics& intr);

}  // namespace cammo
