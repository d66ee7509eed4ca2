#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cammo/geometry.hpp"

namespace cammo {

/// One 2D observation of a 3D point: which image saw it and at which
/// index in that image's 2D point list.
struct SparseObservation {
  int image_id = 0;
  int point2d_idx = 0;

  friend bool operator==(const SparseObservation&, const SparseObservation&) = default;
};

struct SparsePoint {
  std::uint64_t id = 0;
  Point3 position = Point3::Zero();
  std::array<std::uint8_t, 3> color = {0, 0, 0};
  double error = 0.0;
  std::vector<SparseObservation> track;
};

/// SfM point cloud (static scene regions). Point ids are unique.
struct SparseCloud {
  std::vector<SparsePoint> points;
};

}  // namespace cammo
