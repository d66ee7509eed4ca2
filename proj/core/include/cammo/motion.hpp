#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cammo/depth.hpp"
#include "cammo/geometry.hpp"
#include "cammo/mask.hpp"

namespace cammo {

struct TrackPoint {
  int frame = 0;
  int keypoint_id = 0;
  double u = 0.0;
  double v = 0.0;
  bool visible = false;
};

/// 2D keypoint tracks of one object instance. At most one record per
/// (frame, keypoint) pair.
class InstanceTracks {
 public:
  explicit InstanceTracks(int instance_id) : instance_id_(instance_id) {}

  int instance_id() const noexcept { return instance_id_; }

  /// Throws std::invalid_argument on a duplicate (frame, keypoint) pair.
  void add(const TrackPoint& point);

  /// Record for (frame, keypoint), or nullptr.
  const TrackPoint* find(int frame, int keypoint_id) const;

  const std::map<int, std::map<int, TrackPoint>>& frames() const noexcept {
    return by_frame_;
  }

  std::size_t size() const noexcept { return size_; }

 private:
  int instance_id_;
  std::map<int, std::map<int, TrackPoint>> by_frame_;
  std::size_t size_ = 0;
};

/// One keypoint's camera-compensated displacement between two frames,
/// normalized by image size.
struct MotionPair {
  int keypoint_id = 0;
  int frame_i = 0;
  int frame_j = 0;
  double du = 0.0;
  double dv = 0.0;
};

struct SkipCounts {
  int invisible = 0;
  int bad_depth = 0;
  int behind_camera = 0;

  SkipCounts& operator+=(const SkipCounts& other);
};

struct MotionField {
  int instance_id = 0;
  int frame_i = 0;
  int frame_j = 0;
  std::vector<MotionPair> pairs;
  SkipCounts skipped;
};

/// Deterministic grid sampling over the mask: every pixel at
/// (col, row) = (c*grid_step, r*grid_step) whose value equals instance_id,
/// in row-major order. Returns (u, v) pairs; empty when the instance is
/// absent.
std::vector<std::pair<int, int>> sample_keypoints(const InstanceMask& mask,
                                                  int instance_id, int grid_step);

/// Object motion field between frame_i and frame_j: each keypoint visible in
/// both frames is lifted to world space with the frame_i aligned depth,
/// reprojected into frame_j, and its residual against the tracked frame_j
/// position is normalized by (W, H). Keypoints failing visibility, depth
/// positivity, or the behind-camera check are skipped and counted.
MotionField motion_field(const InstanceTracks& tracks, const DepthMap& aligned_depth_i,
                         const Pose& pose_i, const Pose& pose_j, const Intrinsics& intr,
                         int frame_i, int frame_j);

/// Mean magnitude sqrt(du^2 + dv^2) over every pair entry of every field;
/// 0 when there are no entries.
double object_strength(const std::vector<MotionField>& fields);

/// Maximum of the per-object strengths; 0 for an empty list.
double video_motion_strength(const std::vector<std::pair<int, double>>& per_object);

/// strength >= threshold (inclusive boundary).
bool classify_dynamic(double strength, double threshold);

}  // namespace cammo
