#include "cammo/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace cammo {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Intrinsics::Intrinsics(double fx_, double fy_, double cx_, double cy_, int width_,
                       int height_)
    : fx(fx_), fy(fy_), cx(cx_), cy(cy_), width(width_), height(height_) {
  require(width >= 1 && height >= 1, "Intrinsics: image size must be >= 1");
  require(std::isfinite(fx) && std::isfinite(fy) && fx > 0.0 && fy > 0.0,
          "Intrinsics: focal lengths must be positive");
  require(std::isfinite(cx) && std::isfinite(cy), "Intrinsics: principal point must be finite");
  require(cx >= 0.0 && cx < width, "Intrinsics: cx out of [0, width)");
  require(cy >= 0.0 && cy < height, "Intrinsics: cy out of [0, height)");
}

Eigen::Matrix3d Intrinsics::matrix() const {
  Eigen::Matrix3d k = Eigen::Matrix3d::Identity();
  k(0, 0) = fx;
  k(1, 1) = fy;
  k(0, 2) = cx;
  k(1, 2) = cy;
  return k;
}

Pose::Pose() : rotation_(Eigen::Matrix3d::Identity()), translation_(Eigen::Vector3d::Zero()) {}

Pose::Pose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation)
    : rotation_(rotation), translation_(translation) {
  constexpr double kTol = 1e-9;
  const Eigen::Matrix3d residual = rotation_.transpose() * rotation_ - Eigen::Matrix3d::Identity();
  require(residual.cwiseAbs().maxCoeff() <= kTol, "Pose: rotation is not orthonormal");
  require(std::abs(rotation_.determinant() - 1.0) <= kTol, "Pose: rotation determinant is not +1");
  require(translation_.allFinite(), "Pose: translation must be finite");
}

Pose Pose::from_quaternion(double qw, double qx, double qy, double qz,
                           const Eigen::Vector3d& translation) {
  Eigen::Quaterniond q(qw, qx, qy, qz);
  const double norm = q.norm();
  require(std::isfinite(norm) && norm > 1e-12, "Pose: quaternion norm is degenerate");
  q.normalize();
  return Pose(q.toRotationMatrix(), translation);
}

PluckerRay PluckerRay::from_origin_direction(const Point3& origin,
                                             const Eigen::Vector3d& direction) {
  const double norm = direction.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("PluckerRay: direction must be a nonzero finite vector");
  }
  const Eigen::Vector3d d = direction / norm;
  return PluckerRay{d, origin.cross(d)};
}

PluckerMap::PluckerMap(int width, int height) : width_(width), height_(height) {
  require(width >= 1 && height >= 1, "PluckerMap: size must be >= 1");
  data_.resize(static_cast<std::size_t>(width) * height * 6, 0.0);
}

double* PluckerMap::at(int row, int col) {
  return data_.data() + (static_cast<std::size_t>(row) * width_ + col) * 6;
}

const double* PluckerMap::at(int row, int col) const {
  return data_.data() + (static_cast<std::size_t>(row) * width_ + col) * 6;
}

std::optional<PixelPoint> project_point(const Pose& pose, const Intrinsics& intr,
                                        const Point3& point) {
  const Eigen::Vector3d cam = pose.rotation() * point + pose.translation();
  if (!(cam.z() > kMinCameraDepth)) {
    return std::nullopt;
  }
  return PixelPoint{intr.fx * cam.x() / cam.z() + intr.cx,
                    intr.fy * cam.y() / cam.z() + intr.cy, cam.z()};
}

Point3 backproject_pixel(const Pose& pose, const Intrinsics& intr, double u, double v,
                         double depth) {
  if (!(depth > 0.0)) {
    throw std::invalid_argument("backproject_pixel: depth must be positive");
  }
  const Eigen::Vector3d cam(depth * (u - intr.cx) / intr.fx,
                            depth * (v - intr.cy) / intr.fy, depth);
  return pose.rotation().transpose() * (cam - pose.translation());
}

Point3 camera_center(const Pose& pose) {
  return -(pose.rotation().transpose() * pose.translation());
}

Ray pixel_ray(const Pose& pose, const Intrinsics& intr, double u, double v) {
  const Eigen::Vector3d dir_cam((u - intr.cx) / intr.fx, (v - intr.cy) / intr.fy, 1.0);
  Eigen::Vector3d dir = pose.rotation().transpose() * dir_cam;
  dir.normalize();
  return Ray{camera_center(pose), dir};
}

PluckerRay plucker_ray(const Pose& pose, const Intrinsics& intr, double u, double v) {
  const Ray ray = pixel_ray(pose, intr, u, v);
  return PluckerRay::from_origin_direction(ray.origin, ray.direction);
}

PluckerMap plucker_map(const Pose& pose, const Intrinsics& intr) {
  PluckerMap map(intr.width, intr.height);
  for (int row = 0; row < intr.height; ++row) {
    for (int col = 0; col < intr.width; ++col) {
      const PluckerRay ray =
          plucker_ray(pose, intr, static_cast<double>(col), static_cast<double>(row));
      double* out = map.at(row, col);
      out[0] = ray.direction.x();
      out[1] = ray.direction.y();
      out[2] = ray.direction.z();
      out[3] = ray.moment.x();
      out[4] = ray.moment.y();
      out[5] = ray.moment.z();
    }
  }
  return map;
}

}  // namespace cammo
