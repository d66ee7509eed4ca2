#include "cammo/motion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cammo {

void InstanceTracks::add(const TrackPoint& point) {
  auto& frame_points = by_frame_[point.frame];
  const auto [it, inserted] = frame_points.emplace(point.keypoint_id, point);
  (void)it;
  if (!inserted) {
    throw std::invalid_argument("InstanceTracks: duplicate record for instance " +
                                std::to_string(instance_id_) + ", frame " +
                                std::to_string(point.frame) + ", keypoint " +
                                std::to_string(point.keypoint_id));
  }
  ++size_;
}

const TrackPoint* InstanceTracks::find(int frame, int keypoint_id) const {
  const auto frame_it = by_frame_.find(frame);
  if (frame_it == by_frame_.end()) return nullptr;
  const auto point_it = frame_it->second.find(keypoint_id);
  if (point_it == frame_it->second.end()) return nullptr;
  return &point_it->second;
}

SkipCounts& SkipCounts::operator+=(const SkipCounts& other) {
  invisible += other.invisible;
  bad_depth += other.bad_depth;
  behind_camera += other.behind_camera;
  return *this;
}

std::vector<std::pair<int, int>> sample_keypoints(const InstanceMask& mask,
                                                  int instance_id, int grid_step) {
  if (grid_step < 1) {
    throw std::invalid_argument("sample_keypoints: grid_step must be >= 1");
  }
  std::vector<std::pair<int, int>> keypoints;
  for (int row = 0; row < mask.height(); row += grid_step) {
    for (int col = 0; col < mask.width(); col += grid_step) {
      if (mask.at(row, col) == instance_id) {
        keypoints.emplace_back(col, row);
      }
    }
  }
  return keypoints;
}

MotionField motion_field(const InstanceTracks& tracks, const DepthMap& aligned_depth_i,
                         const Pose& pose_i, const Pose& pose_j, const Intrinsics& intr,
                         int frame_i, int frame_j) {
  if (frame_i == frame_j) {
    throw std::invalid_argument("motion_field: frame_i and frame_j must differ");
  }
  if (aligned_depth_i.kind() != DepthKind::kAligned) {
    throw std::invalid_argument("motion_field: frame_i depth map is not aligned depth");
  }

  MotionField field;
  field.instance_id = tracks.instance_id();
  field.frame_i = frame_i;
  field.frame_j = frame_j;

  const auto frame_it = tracks.frames().find(frame_i);
  if (frame_it == tracks.frames().end()) return field;

  for (const auto& [keypoint_id, point_i] : frame_it->second) {
    const TrackPoint* point_j = tracks.find(frame_j, keypoint_id);
    if (point_j == nullptr) continue;  // not a candidate for this pair
    if (!point_i.visible || !point_j->visible) {
      ++field.skipped.invisible;
      continue;
    }
    const long col = std::lround(point_i.u);
    const long row = std::lround(point_i.v);
    if (col < 0 || col >= aligned_depth_i.width() || row < 0 ||
        row >= aligned_depth_i.height()) {
      ++field.skipped.bad_depth;
      continue;
    }
    const double depth = aligned_depth_i.at(static_cast<int>(row), static_cast<int>(col));
    if (!(depth > 0.0)) {
      ++field.skipped.bad_depth;
      continue;
    }
    const Point3 world = backproject_pixel(pose_i, intr, point_i.u, point_i.v, depth);
    const auto reproj = project_point(pose_j, intr, world);
    if (!reproj) {
      ++field.skipped.behind_camera;
      continue;
    }
    field.pairs.push_back(MotionPair{keypoint_id, frame_i, frame_j,
                                     (point_j->u - reproj->u) / intr.width,
                                     (point_j->v - reproj->v) / intr.height});
  }
  return field;
}

double object_strength(const std::vector<MotionField>& fields) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const MotionField& field : fields) {
    for (const MotionPair& pair : field.pairs) {
      sum += std::sqrt(pair.du * pair.du + pair.dv * pair.dv);
    }
    count += field.pairs.size();
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double video_motion_strength(const std::vector<std::pair<int, double>>& per_object) {
  double strongest = 0.0;
  for (const auto& [instance_id, strength] : per_object) {
    (void)instance_id;
    if (strength > strongest) strongest = strength;
  }
  return strongest;
}

bool classify_dynamic(double strength, double threshold) {
  if (threshold < 0.0) {
    throw std::invalid_argument("classify_dynamic: threshold must be >= 0");
  }
  return strength >= threshold;
}

}  // namespace cammo
