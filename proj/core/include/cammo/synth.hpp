#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cammo/depth.hpp"
#include "cammo/geometry.hpp"
#include "cammo/mask.hpp"
#include "cammo/motion.hpp"
#include "cammo/sparse_cloud.hpp"

namespace cammo {

struct Box {
  Point3 min = Point3::Zero();
  Point3 max = Point3::Zero();

  Point3 center() const { return 0.5 * (min + max); }
};

struct CameraPathSpec {
  enum class Kind { kOrbit, kLinear, kZoom };

  Kind kind = Kind::kLinear;

  // orbit: look-at path around center, azimuth sweeping arc radians
  // across the video.
  Point3 center = Point3::Zero();
  double radius = 4.0;
  double elevation = 0.0;
  double arc = 0.5;

  // linear / zoom: identity rotation, camera center start + velocity * frame.
  // zoom constrains velocity to the +z axis.
  Point3 start = Point3::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
};

/// One rigid scene object: point_count points sampled in box, moving with
/// constant world velocity and spinning about its (moving) centroid around
/// the world y axis at rotation_rate radians per frame.
struct ObjectSpec {
  int instance_id = 1;
  int point_count = 0;
  Box box;
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  double rotation_rate = 0.0;
};

struct SceneConfig {
  std::string video_id = "scene";
  std::uint64_t seed = 0;
  Intrinsics intr{64.0, 64.0, 32.0, 32.0, 64, 64};
  int frames = 2;
  CameraPathSpec camera;
  int background_count = 0;
  Box background_box;
  std::vector<ObjectSpec> objects;
  // Relative depth is fabricated as a min-max normalization of
  // (d_gt - corruption_b) / corruption_a; corruption_a must be > 0.
  double corruption_a = 1.0;
  double corruption_b = 0.0;
  // Multiplicative noise amplitude on the depth feeding the relative maps
  // (uniform in [1 - depth_noise, 1 + depth_noise] per pixel).
  double depth_noise = 0.0;
};

SceneConfig scene_config_from_json(const std::string& json_text);
std::string scene_config_to_json(const SceneConfig& config);

/// Randomized desk-scale config: moderate image sizes, one of the three
/// camera paths, one to three moving objects, and a random affine depth
/// corruption. Deterministic in seed.
SceneConfig random_scene_config(std::uint64_t seed, const std::string& video_id);

/// Exact affine relation d_gt = scale * d_rel + shift for one frame.
struct FrameTruth {
  double scale = 1.0;
  double shift = 0.0;
};

/// Everything generate_scene wrote, kept in memory at full precision.
struct SceneBundle {
  SceneConfig config;
  std::filesystem::path dir;
  std::vector<Pose> poses;
  std::vector<DepthMap> gt_depth;    // z-buffers, 0 at empty pixels
  std::vector<DepthMap> rel_depth;   // fabricated relative depth in [0, 1]
  std::vector<InstanceMask> masks;
  std::vector<InstanceTracks> tracks;
  SparseCloud cloud;                 // static background points only
  std::vector<FrameTruth> truth;
  std::vector<std::pair<int, double>> analytic_per_object;
};

/// Generates the scene and writes the standard video layout under out_dir:
///   colmap/{cameras,images,points3D}.txt, depth/frame_*.pfm,
///   masks/frame_*.pgm, tracks.jsonl, truth.json
/// Deterministic: identical configs produce byte-identical bundles. Throws
/// std::runtime_error when any frame ends up with zero visible object
/// points or a degenerate depth raster.
SceneBundle generate_scene(const SceneConfig& config, const std::filesystem::path& out_dir);

/// Closed-form per-object motion strength computed straight from the
/// config's ground-truth world positions, poses and exact depths. This is
/// the independent oracle for the file-based pipeline: it shares no
/// projection code with the geometry or motion modules (keep it that way).
std::vector<std::pair<int, double>> analytic_strength(const SceneConfig& config,
                                                      int frame_gap = 1);

}  // namespace cammo
