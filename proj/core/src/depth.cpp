#include "cammo/depth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cammo/errors.hpp"

namespace cammo {

DepthMap::DepthMap(int width, int height, DepthKind kind, int frame_id,
                   std::vector<double> values)
    : width_(width), height_(height), kind_(kind), frame_id_(frame_id),
      values_(std::move(values)) {
  if (width_ < 1 || height_ < 1) {
    throw std::invalid_argument("DepthMap: size must be >= 1");
  }
  if (values_.size() != static_cast<std::size_t>(width_) * height_) {
    throw std::invalid_argument("DepthMap: value count does not match dimensions");
  }
  validate();
}

DepthMap::DepthMap(int width, int height, DepthKind kind, int frame_id)
    : DepthMap(width, height, kind, frame_id,
               std::vector<double>(static_cast<std::size_t>(width) * height, 0.0)) {}

void DepthMap::validate() const {
  for (const double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("DepthMap: non-finite depth value");
    }
    if (kind_ == DepthKind::kRelative && (v < 0.0 || v > 1.0)) {
      throw std::invalid_argument("DepthMap: relative depth outside [0, 1]");
    }
  }
}

SparseDepthSamples rasterize_sparse_depth(const SparseCloud& cloud, const Pose& pose,
                                          const Intrinsics& intr, int frame_id) {
  if (cloud.points.empty()) {
    throw std::invalid_argument("rasterize_sparse_depth: cloud is empty");
  }
  const int w = intr.width;
  const int h = intr.height;
  std::vector<double> nearest(static_cast<std::size_t>(w) * h,
                              std::numeric_limits<double>::infinity());
  for (const SparsePoint& point : cloud.points) {
    const auto proj = project_point(pose, intr, point.position);
    if (!proj) continue;
    const long col = std::lround(proj->u);
    const long row = std::lround(proj->v);
    if (col < 0 || col >= w || row < 0 || row >= h) continue;
    double& slot = nearest[static_cast<std::size_t>(row) * w + col];
    slot = std::min(slot, proj->depth);
  }

  SparseDepthSamples samples;
  samples.frame_id = frame_id;
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      const double d = nearest[static_cast<std::size_t>(row) * w + col];
      if (std::isfinite(d)) {
        samples.entries.push_back(SparseDepthSample{col, row, d});
      }
    }
  }
  return samples;
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("median: empty list");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) {
    return values[n / 2];
  }
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

AlignedDepth align_depth(const DepthMap& relative, const SparseDepthSamples& sparse,
                         int min_samples) {
  if (relative.kind() != DepthKind::kRelative) {
    throw std::invalid_argument("align_depth: input map is not relative depth");
  }
  const int n = static_cast<int>(sparse.entries.size());
  if (n < min_samples) {
    throw AlignmentError(AlignmentError::Reason::kInsufficientSamples,
                         "align_depth: " + std::to_string(n) + " sparse samples, need " +
                             std::to_string(min_samples));
  }

  std::vector<double> sfm(sparse.entries.size());
  std::vector<double> rel(sparse.entries.size());
  for (std::size_t i = 0; i < sparse.entries.size(); ++i) {
    const SparseDepthSample& s = sparse.entries[i];
    if (s.u < 0 || s.u >= relative.width() || s.v < 0 || s.v >= relative.height()) {
      throw std::invalid_argument("align_depth: sample pixel outside the relative map");
    }
    sfm[i] = s.depth;
    rel[i] = relative.at(s.v, s.u);
  }

  const double median_rel = median(rel);
  if (median_rel <= kDegenerateRelativeDepth) {
    throw AlignmentError(AlignmentError::Reason::kDegenerateRelativeDepth,
                         "align_depth: relative depth median is degenerate");
  }
  const double alpha = median(sfm) / median_rel;

  std::vector<double> residual(sparse.entries.size());
  for (std::size_t i = 0; i < sparse.entries.size(); ++i) {
    residual[i] = sfm[i] - alpha * rel[i];
  }
  const double beta = median(residual);

  if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw AlignmentError(AlignmentError::Reason::kNonPositiveScale,
                         "align_depth: alignment produced a non-positive scale");
  }

  std::vector<double> aligned(relative.values().size());
  for (std::size_t i = 0; i < aligned.size(); ++i) {
    aligned[i] = alpha * relative.values()[i] + beta;
  }
  return AlignedDepth{
      Alignment{alpha, beta, n},
      DepthMap(relative.width(), relative.height(), DepthKind::kAligned,
               relative.frame_id(), std::move(aligned))};
}

}  // namespace cammo
