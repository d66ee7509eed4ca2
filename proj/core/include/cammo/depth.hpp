#pragma once

#include <vector>

#include "cammo/geometry.hpp"
#include "cammo/sparse_cloud.hpp"

namespace cammo {

/// Relative monocular depth median below this counts as degenerate and
/// aborts alignment for the frame.
inline constexpr double kDegenerateRelativeDepth = 1e-8;

enum class DepthKind {
  kRelative,     // monocular network output, values in [0, 1]
  kAligned,      // alpha * relative + beta, SfM scale
  kGroundTruth,  // synthetic z-buffer
};

/// Dense per-pixel depth raster, row-major, top-to-bottom.
class DepthMap {
 public:
  DepthMap(int width, int height, DepthKind kind, int frame_id,
           std::vector<double> values);

  /// Zero-filled raster of the given shape.
  DepthMap(int width, int height, DepthKind kind, int frame_id);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  DepthKind kind() const noexcept { return kind_; }
  int frame_id() const noexcept { return frame_id_; }

  double at(int row, int col) const { return values_[static_cast<std::size_t>(row) * width_ + col]; }
  void set(int row, int col, double value) { values_[static_cast<std::size_t>(row) * width_ + col] = value; }

  const std::vector<double>& values() const noexcept { return values_; }

  /// Re-checks the per-kind invariants (finite everywhere; [0, 1] for
  /// relative maps). Throws std::invalid_argument on violation.
  void validate() const;

 private:
  int width_;
  int height_;
  DepthKind kind_;
  int frame_id_;
  std::vector<double> values_;
};

/// Depth of an SfM point at the integer pixel it projects to.
struct SparseDepthSample {
  int u = 0;
  int v = 0;
  double depth = 0.0;
};

struct SparseDepthSamples {
  int frame_id = 0;
  std::vector<SparseDepthSample> entries;  // row-major pixel order, one per pixel
};

/// Scale/shift mapping relative depth onto SfM scale for one frame.
struct Alignment {
  double alpha = 0.0;
  double beta = 0.0;
  int n_samples = 0;
};

struct AlignedDepth {
  Alignment alignment;
  DepthMap depth;
};

/// Projects the cloud into the frame and keeps, per integer pixel, the
/// smallest positive camera-space depth (nearest surface). Points behind
/// the camera or out of bounds contribute nothing; the result may be empty,
/// which callers treat as "frame unusable for alignment".
SparseDepthSamples rasterize_sparse_depth(const SparseCloud& cloud, const Pose& pose,
                                          const Intrinsics& intr, int frame_id);

/// Middle element for odd length, mean of the two middle elements for even.
/// Throws std::invalid_argument on an empty list.
double median(std::vector<double> values);

/// Per-frame depth alignment:
///   alpha = median(d_sfm) / median(d_rel at the sample pixels)
///   beta  = median(d_sfm - alpha * d_rel at the sample pixels)
/// and the output raster is alpha * d_rel + beta everywhere.
/// Throws AlignmentError when there are fewer than min_samples samples, the
/// relative-depth median is degenerate, or alpha comes out non-positive.
AlignedDepth align_depth(const DepthMap& relative, const SparseDepthSamples& sparse,
                         int min_samples);

}  // namespace cammo
