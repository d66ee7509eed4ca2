#include "cammo/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cammo/ingest.hpp"
#include "cammo/trajectory.hpp"

namespace cammo {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// 53-bit uniform draw; implementation-defined std distributions would break
// the byte-identical determinism contract.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::string frame_name(int frame) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "frame_%06d.png", frame);
  return buffer;
}

std::string frame_stem(int frame) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "frame_%06d", frame);
  return buffer;
}

// ---------------------------------------------------------------------------
// Local projection path. This file is the independent oracle for the
// geometry/motion pipeline, so the projection math is written out by
// component on purpose; do not replace it with geometry.hpp helpers.

struct LocalProjection {
  double u = 0.0;
  double v = 0.0;
  double z = 0.0;
  bool valid = false;     // in front of the camera
  bool in_image = false;  // rounded pixel inside bounds
  int col = 0;
  int row = 0;
};

LocalProjection project_local(const Pose& pose, const Intrinsics& intr, const Point3& p) {
  const Eigen::Matrix3d& r = pose.rotation();
  const Eigen::Vector3d& t = pose.translation();
  LocalProjection out;
  const double xc = r(0, 0) * p.x() + r(0, 1) * p.y() + r(0, 2) * p.z() + t.x();
  const double yc = r(1, 0) * p.x() + r(1, 1) * p.y() + r(1, 2) * p.z() + t.y();
  const double zc = r(2, 0) * p.x() + r(2, 1) * p.y() + r(2, 2) * p.z() + t.z();
  if (!(zc > kMinCameraDepth)) {
    return out;
  }
  out.valid = true;
  out.u = intr.fx * xc / zc + intr.cx;
  out.v = intr.fy * yc / zc + intr.cy;
  out.z = zc;
  const long col = std::lround(out.u);
  const long row = std::lround(out.v);
  if (col >= 0 && col < intr.width && row >= 0 && row < intr.height) {
    out.in_image = true;
    out.col = static_cast<int>(col);
    out.row = static_cast<int>(row);
  }
  return out;
}

struct SceneGeometry {
  std::vector<Pose> poses;
  std::vector<Point3> background;
  // [object][frame][point]
  std::vector<std::vector<std::vector<Point3>>> object_points;
  std::vector<std::vector<std::vector<LocalProjection>>> object_proj;
  std::vector<std::vector<std::vector<bool>>> object_visible;
  // per frame, 0 where no point splats
  std::vector<std::vector<double>> zbuffer;
};

void validate_config(const SceneConfig& config) {
  if (config.frames < 2) {
    throw std::invalid_argument("SceneConfig: frames must be >= 2");
  }
  if (!(config.corruption_a > 0.0)) {
    throw std::invalid_argument("SceneConfig: corruption_a must be > 0");
  }
  if (config.depth_noise < 0.0 || config.depth_noise >= 1.0) {
    throw std::invalid_argument("SceneConfig: depth_noise must be in [0, 1)");
  }
  std::vector<int> ids;
  for (const ObjectSpec& object : config.objects) {
    if (object.instance_id < 1 || object.instance_id > 255) {
      throw std::invalid_argument("SceneConfig: instance ids must be in [1, 255]");
    }
    if (object.point_count < 1) {
      throw std::invalid_argument("SceneConfig: objects need at least one point");
    }
    ids.push_back(object.instance_id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw std::invalid_argument("SceneConfig: instance ids must be distinct");
  }
}

std::vector<Pose> make_camera_path(const SceneConfig& config) {
  std::vector<Pose> poses;
  poses.reserve(config.frames);
  const CameraPathSpec& cam = config.camera;
  switch (cam.kind) {
    case CameraPathSpec::Kind::kOrbit: {
      const double cos_e = std::cos(cam.elevation);
      const double sin_e = std::sin(cam.elevation);
      for (int f = 0; f < config.frames; ++f) {
        const double azimuth = cam.arc * f / (config.frames - 1);
        const Point3 eye =
            cam.center + cam.radius * Point3(cos_e * std::cos(azimuth), sin_e,
                                             cos_e * std::sin(azimuth));
        poses.push_back(look_at(eye, cam.center, Eigen::Vector3d(0, 1, 0)));
      }
      break;
    }
    case CameraPathSpec::Kind::kLinear:
    case CameraPathSpec::Kind::kZoom: {
      for (int f = 0; f < config.frames; ++f) {
        const Point3 center = cam.start + static_cast<double>(f) * cam.velocity;
        poses.emplace_back(Eigen::Matrix3d::Identity(), -center);
      }
      break;
    }
  }
  return poses;
}

Eigen::Matrix3d rotation_about_y(double angle) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  r(0, 0) = c;
  r(0, 2) = s;
  r(2, 0) = -s;
  r(2, 2) = c;
  return r;
}

SceneGeometry build_scene_geometry(const SceneConfig& config) {
  validate_config(config);
  std::mt19937_64 rng(config.seed);
  const Intrinsics& intr = config.intr;
  const std::size_t pixel_count = static_cast<std::size_t>(intr.width) * intr.height;

  SceneGeometry scene;
  scene.poses = make_camera_path(config);

  // Object points and their rigid motion.
  scene.object_points.resize(config.objects.size());
  for (std::size_t o = 0; o < config.objects.size(); ++o) {
    const ObjectSpec& object = config.objects[o];
    std::vector<Point3> base(object.point_count);
    for (Point3& p : base) {
      p = Point3(uniform(rng, object.box.min.x(), object.box.max.x()),
                 uniform(rng, object.box.min.y(), object.box.max.y()),
                 uniform(rng, object.box.min.z(), object.box.max.z()));
    }
    const Point3 centroid = object.box.center();
    auto& per_frame = scene.object_points[o];
    per_frame.resize(config.frames);
    for (int f = 0; f < config.frames; ++f) {
      const Eigen::Matrix3d spin = rotation_about_y(object.rotation_rate * f);
      const Point3 moved_centroid = centroid + static_cast<double>(f) * object.velocity;
      per_frame[f].reserve(base.size());
      for (const Point3& p : base) {
        per_frame[f].push_back(moved_centroid + spin * (p - centroid));
      }
    }
  }

  // Object projections plus an object-only z-buffer per frame, used below to
  // reject background points that an object would occlude. Such a collision
  // would make the SfM sparse depth disagree with the full z-buffer at that
  // pixel and poison the alignment samples.
  scene.object_proj.resize(config.objects.size());
  std::vector<std::vector<double>> object_zbuf(
      config.frames, std::vector<double>(pixel_count, 0.0));
  for (std::size_t o = 0; o < config.objects.size(); ++o) {
    auto& per_frame = scene.object_proj[o];
    per_frame.resize(config.frames);
    for (int f = 0; f < config.frames; ++f) {
      per_frame[f].reserve(scene.object_points[o][f].size());
      for (const Point3& p : scene.object_points[o][f]) {
        const LocalProjection proj = project_local(scene.poses[f], intr, p);
        per_frame[f].push_back(proj);
        if (proj.valid && proj.in_image) {
          double& slot = object_zbuf[f][static_cast<std::size_t>(proj.row) * intr.width + proj.col];
          if (slot == 0.0 || proj.z < slot) slot = proj.z;
        }
      }
    }
  }

  scene.background.reserve(config.background_count);
  const Box& bg = config.background_box;
  for (int i = 0; i < config.background_count; ++i) {
    bool accepted = false;
    for (int attempt = 0; attempt < 1000 && !accepted; ++attempt) {
      const Point3 candidate(uniform(rng, bg.min.x(), bg.max.x()),
                             uniform(rng, bg.min.y(), bg.max.y()),
                             uniform(rng, bg.min.z(), bg.max.z()));
      bool clear = true;
      for (int f = 0; f < config.frames && clear; ++f) {
        const LocalProjection proj = project_local(scene.poses[f], intr, candidate);
        if (!proj.valid || !proj.in_image) continue;
        const double obj_z =
            object_zbuf[f][static_cast<std::size_t>(proj.row) * intr.width + proj.col];
        if (obj_z != 0.0 && obj_z < proj.z) clear = false;
      }
      if (clear) {
        scene.background.push_back(candidate);
        accepted = true;
      }
    }
    if (!accepted) {
      throw std::runtime_error(
          "generate_scene: could not place background points clear of the objects");
    }
  }

  // Full z-buffers over every point in the scene.
  scene.zbuffer.assign(config.frames, std::vector<double>(pixel_count, 0.0));
  for (int f = 0; f < config.frames; ++f) {
    auto& buf = scene.zbuffer[f];
    auto splat = [&](const LocalProjection& proj) {
      if (!proj.valid || !proj.in_image) return;
      double& slot = buf[static_cast<std::size_t>(proj.row) * intr.width + proj.col];
      if (slot == 0.0 || proj.z < slot) slot = proj.z;
    };
    for (const Point3& p : scene.background) {
      splat(project_local(scene.poses[f], intr, p));
    }
    for (std::size_t o = 0; o < config.objects.size(); ++o) {
      for (const LocalProjection& proj : scene.object_proj[o][f]) {
        splat(proj);
      }
    }
  }

  // A keypoint is visible when it lands in bounds and nothing is nearer in
  // the z-buffer at its pixel.
  scene.object_visible.resize(config.objects.size());
  for (std::size_t o = 0; o < config.objects.size(); ++o) {
    auto& per_frame = scene.object_visible[o];
    per_frame.resize(config.frames);
    for (int f = 0; f < config.frames; ++f) {
      per_frame[f].resize(scene.object_proj[o][f].size(), false);
      for (std::size_t k = 0; k < scene.object_proj[o][f].size(); ++k) {
        const LocalProjection& proj = scene.object_proj[o][f][k];
        if (!proj.valid || !proj.in_image) continue;
        const double z =
            scene.zbuffer[f][static_cast<std::size_t>(proj.row) * intr.width + proj.col];
        per_frame[f][k] = (z == proj.z);
      }
    }
  }

  return scene;
}

}  // namespace

std::vector<std::pair<int, double>> analytic_strength(const SceneConfig& config,
                                                      int frame_gap) {
  if (frame_gap < 1) {
    throw std::invalid_argument("analytic_strength: frame_gap must be >= 1");
  }
  const SceneGeometry scene = build_scene_geometry(config);
  const Intrinsics& intr = config.intr;

  std::vector<std::pair<int, double>> strengths;
  strengths.reserve(config.objects.size());
  for (std::size_t o = 0; o < config.objects.size(); ++o) {
    double sum = 0.0;
    std::size_t count = 0;
    for (int i = 0; i + frame_gap < config.frames; ++i) {
      const int j = i + frame_gap;
      for (std::size_t k = 0; k < scene.object_points[o][i].size(); ++k) {
        if (!scene.object_visible[o][i][k] || !scene.object_visible[o][j][k]) continue;
        // Lifting the frame-i keypoint with its exact depth reproduces the
        // frame-i world position, so the compensated reprojection is just
        // that position seen from camera j.
        const LocalProjection reproj =
            project_local(scene.poses[j], intr, scene.object_points[o][i][k]);
        if (!reproj.valid) continue;
        const LocalProjection& tracked = scene.object_proj[o][j][k];
        const double du = (tracked.u - reproj.u) / intr.width;
        const double dv = (tracked.v - reproj.v) / intr.height;
        sum += std::sqrt(du * du + dv * dv);
        ++count;
      }
    }
    strengths.emplace_back(config.objects[o].instance_id,
                           count == 0 ? 0.0 : sum / static_cast<double>(count));
  }
  return strengths;
}

SceneBundle generate_scene(const SceneConfig& config, const fs::path& out_dir) {
  const SceneGeometry scene = build_scene_geometry(config);
  const Intrinsics& intr = config.intr;
  const std::size_t pixel_count = static_cast<std::size_t>(intr.width) * intr.height;

  if (!config.objects.empty()) {
    for (int f = 0; f < config.frames; ++f) {
      std::size_t visible = 0;
      for (std::size_t o = 0; o < config.objects.size(); ++o) {
        for (const bool v : scene.object_visible[o][f]) {
          if (v) ++visible;
        }
      }
      if (visible == 0) {
        throw std::runtime_error("generate_scene: frame " + std::to_string(f) +
                                 " has no visible object points");
      }
    }
  }

  // Secondary stream for cosmetic/noise draws, so the scene geometry stays
  // reproducible from the seed alone (analytic_strength replays it).
  std::mt19937_64 aux(config.seed ^ 0x9E3779B97F4A7C15ull);

  SceneBundle bundle{config, out_dir, scene.poses, {}, {}, {}, {}, {}, {}, {}};

  bundle.cloud.points.reserve(scene.background.size());
  for (std::size_t i = 0; i < scene.background.size(); ++i) {
    SparsePoint point;
    point.id = i + 1;
    point.position = scene.background[i];
    point.color = {static_cast<std::uint8_t>(aux() & 0xFF),
                   static_cast<std::uint8_t>(aux() & 0xFF),
                   static_cast<std::uint8_t>(aux() & 0xFF)};
    point.error = uniform(aux, 0.0, 1.0);
    bundle.cloud.points.push_back(point);
  }

  for (int f = 0; f < config.frames; ++f) {
    bundle.gt_depth.emplace_back(intr.width, intr.height, DepthKind::kGroundTruth, f,
                                 scene.zbuffer[f]);

    // Fabricated relative depth: corrupt the z-buffer with the affine map
    // (and optional multiplicative noise), then min-max normalize. Empty
    // pixels sit at depth 0, so they realize the minimum and the fabricated
    // map stays exactly proportional to depth, which the median alignment
    // can invert at every sample pixel.
    std::vector<double> corrupted(pixel_count);
    for (std::size_t i = 0; i < pixel_count; ++i) {
      double g = scene.zbuffer[f][i];
      const double jitter = uniform(aux, -1.0, 1.0);
      if (config.depth_noise > 0.0) {
        g *= 1.0 + config.depth_noise * jitter;
      }
      corrupted[i] = (g - config.corruption_b) / config.corruption_a;
    }
    const auto [min_it, max_it] = std::minmax_element(corrupted.begin(), corrupted.end());
    const double lo = *min_it;
    const double hi = *max_it;
    if (!(hi - lo > 1e-12)) {
      throw std::runtime_error("generate_scene: frame " + std::to_string(f) +
                               " has a degenerate depth raster");
    }
    std::vector<double> rel(pixel_count);
    for (std::size_t i = 0; i < pixel_count; ++i) {
      rel[i] = (corrupted[i] - lo) / (hi - lo);
    }
    bundle.rel_depth.emplace_back(intr.width, intr.height, DepthKind::kRelative, f,
                                  std::move(rel));
    bundle.truth.push_back(FrameTruth{config.corruption_a * (hi - lo),
                                      config.corruption_a * lo + config.corruption_b});

    InstanceMask mask(intr.width, intr.height);
    for (std::size_t o = 0; o < config.objects.size(); ++o) {
      for (std::size_t k = 0; k < scene.object_proj[o][f].size(); ++k) {
        if (scene.object_visible[o][f][k]) {
          const LocalProjection& proj = scene.object_proj[o][f][k];
          mask.set(proj.row, proj.col,
                   static_cast<std::uint8_t>(config.objects[o].instance_id));
        }
      }
    }
    bundle.masks.push_back(std::move(mask));
  }

  for (std::size_t o = 0; o < config.objects.size(); ++o) {
    InstanceTracks tracks(config.objects[o].instance_id);
    for (int f = 0; f < config.frames; ++f) {
      for (std::size_t k = 0; k < scene.object_proj[o][f].size(); ++k) {
        const LocalProjection& proj = scene.object_proj[o][f][k];
        TrackPoint point;
        point.frame = f;
        point.keypoint_id = static_cast<int>(k);
        point.u = proj.valid ? proj.u : 0.0;
        point.v = proj.valid ? proj.v : 0.0;
        point.visible = scene.object_visible[o][f][k];
        tracks.add(point);
      }
    }
    bundle.tracks.push_back(std::move(tracks));
  }

  bundle.analytic_per_object = analytic_strength(config);

  // On-disk layout: the standard per-video bundle the pipeline consumes.
  fs::create_directories(out_dir / "depth");
  fs::create_directories(out_dir / "masks");

  SfmModel model;
  model.cameras.emplace(1, intr);
  for (int f = 0; f < config.frames; ++f) {
    SfmFrame frame;
    frame.image_id = f + 1;
    frame.name = frame_name(f);
    frame.camera_id = 1;
    Eigen::Quaterniond q(scene.poses[f].rotation());
    q.normalize();
    frame.qw = q.w();
    frame.qx = q.x();
    frame.qy = q.y();
    frame.qz = q.z();
    frame.tvec = scene.poses[f].translation();
    frame.pose = Pose::from_quaternion(frame.qw, frame.qx, frame.qy, frame.qz, frame.tvec);
    model.frames.push_back(std::move(frame));
  }
  model.points = bundle.cloud;
  serialize_colmap_text(model, out_dir / "colmap");

  for (int f = 0; f < config.frames; ++f) {
    write_pfm(bundle.rel_depth[f], out_dir / "depth" / (frame_stem(f) + ".pfm"));
    write_pgm_mask(bundle.masks[f], out_dir / "masks" / (frame_stem(f) + ".pgm"));
  }
  write_tracks_jsonl(bundle.tracks, out_dir / "tracks.jsonl");

  ordered_json truth;
  truth["video_id"] = config.video_id;
  truth["seed"] = config.seed;
  truth["frames"] = config.frames;
  truth["per_frame"] = ordered_json::array();
  for (int f = 0; f < config.frames; ++f) {
    ordered_json record;
    record["frame"] = f;
    record["scale"] = bundle.truth[f].scale;
    record["shift"] = bundle.truth[f].shift;
    truth["per_frame"].push_back(record);
  }
  truth["objects"] = ordered_json::array();
  for (const ObjectSpec& object : config.objects) {
    ordered_json record;
    record["instance"] = object.instance_id;
    record["points"] = object.point_count;
    truth["objects"].push_back(record);
  }
  truth["analytic"] = ordered_json::object();
  truth["analytic"]["per_object"] = ordered_json::array();
  double strongest = 0.0;
  for (const auto& [instance, strength] : bundle.analytic_per_object) {
    ordered_json record;
    record["instance"] = instance;
    record["strength"] = strength;
    truth["analytic"]["per_object"].push_back(record);
    strongest = std::max(strongest, strength);
  }
  truth["analytic"]["motion_strength"] = strongest;
  std::ofstream truth_file(out_dir / "truth.json", std::ios::trunc);
  if (!truth_file.is_open()) {
    throw std::runtime_error("generate_scene: cannot write truth.json");
  }
  truth_file << truth.dump(2) << "\n";

  return bundle;
}

// ---------------------------------------------------------------------------
// Config (de)serialization and the randomized config generator

namespace {

Point3 point_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    throw std::runtime_error(std::string("SceneConfig: ") + what +
                             " must be an array of 3 numbers");
  }
  return Point3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Box box_from_json(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("min") || !j.contains("max")) {
    throw std::runtime_error(std::string("SceneConfig: ") + what +
                             " must be {\"min\": [...], \"max\": [...]}");
  }
  return Box{point_from_json(j["min"], what), point_from_json(j["max"], what)};
}

json point_to_json(const Point3& p) { return json::array({p.x(), p.y(), p.z()}); }

ordered_json box_to_json(const Box& box) {
  ordered_json j;
  j["min"] = point_to_json(box.min);
  j["max"] = point_to_json(box.max);
  return j;
}

}  // namespace

SceneConfig scene_config_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("SceneConfig: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::runtime_error("SceneConfig: top level must be an object");
  }

  SceneConfig config;
  config.video_id = j.value("video_id", std::string("scene"));
  config.seed = j.value("seed", std::uint64_t{0});
  const int width = j.at("width").get<int>();
  const int height = j.at("height").get<int>();
  config.intr = Intrinsics(j.at("fx").get<double>(), j.at("fy").get<double>(),
                           j.at("cx").get<double>(), j.at("cy").get<double>(), width, height);
  config.frames = j.at("frames").get<int>();

  const json& cam = j.at("camera");
  const std::string kind = cam.at("kind").get<std::string>();
  if (kind == "orbit") {
    config.camera.kind = CameraPathSpec::Kind::kOrbit;
    config.camera.center = point_from_json(cam.at("center"), "camera.center");
    config.camera.radius = cam.at("radius").get<double>();
    config.camera.elevation = cam.at("elevation").get<double>();
    config.camera.arc = cam.at("arc").get<double>();
  } else if (kind == "linear") {
    config.camera.kind = CameraPathSpec::Kind::kLinear;
    config.camera.start = point_from_json(cam.at("start"), "camera.start");
    config.camera.velocity = point_from_json(cam.at("velocity"), "camera.velocity");
  } else if (kind == "zoom") {
    config.camera.kind = CameraPathSpec::Kind::kZoom;
    config.camera.start = point_from_json(cam.at("start"), "camera.start");
    config.camera.velocity = Eigen::Vector3d(0, 0, cam.at("speed").get<double>());
  } else {
    throw std::runtime_error("SceneConfig: camera.kind must be orbit, linear or zoom");
  }

  const json& background = j.at("background");
  config.background_count = background.at("count").get<int>();
  config.background_box = box_from_json(background.at("box"), "background.box");

  for (const json& obj : j.value("objects", json::array())) {
    ObjectSpec object;
    object.instance_id = obj.at("instance").get<int>();
    object.point_count = obj.at("points").get<int>();
    object.box = box_from_json(obj.at("box"), "object.box");
    object.velocity = point_from_json(obj.at("velocity"), "object.velocity");
    object.rotation_rate = obj.value("rotation_rate", 0.0);
    config.objects.push_back(object);
  }

  if (j.contains("corruption")) {
    config.corruption_a = j["corruption"].at("a").get<double>();
    config.corruption_b = j["corruption"].at("b").get<double>();
  }
  config.depth_noise = j.value("depth_noise", 0.0);

  validate_config(config);
  return config;
}

std::string scene_config_to_json(const SceneConfig& config) {
  ordered_json j;
  j["video_id"] = config.video_id;
  j["seed"] = config.seed;
  j["width"] = config.intr.width;
  j["height"] = config.intr.height;
  j["fx"] = config.intr.fx;
  j["fy"] = config.intr.fy;
  j["cx"] = config.intr.cx;
  j["cy"] = config.intr.cy;
  j["frames"] = config.frames;

  ordered_json cam;
  switch (config.camera.kind) {
    case CameraPathSpec::Kind::kOrbit:
      cam["kind"] = "orbit";
      cam["center"] = point_to_json(config.camera.center);
      cam["radius"] = config.camera.radius;
      cam["elevation"] = config.camera.elevation;
      cam["arc"] = config.camera.arc;
      break;
    case CameraPathSpec::Kind::kLinear:
      cam["kind"] = "linear";
      cam["start"] = point_to_json(config.camera.start);
      cam["velocity"] = point_to_json(config.camera.velocity);
      break;
    case CameraPathSpec::Kind::kZoom:
      cam["kind"] = "zoom";
      cam["start"] = point_to_json(config.camera.start);
      cam["speed"] = config.camera.velocity.z();
      break;
  }
  j["camera"] = cam;

  ordered_json background;
  background["count"] = config.background_count;
  background["box"] = box_to_json(config.background_box);
  j["background"] = background;

  j["objects"] = ordered_json::array();
  for (const ObjectSpec& object : config.objects) {
    ordered_json obj;
    obj["instance"] = object.instance_id;
    obj["points"] = object.point_count;
    obj["box"] = box_to_json(object.box);
    obj["velocity"] = point_to_json(object.velocity);
    obj["rotation_rate"] = object.rotation_rate;
    j["objects"].push_back(obj);
  }

  ordered_json corruption;
  corruption["a"] = config.corruption_a;
  corruption["b"] = config.corruption_b;
  j["corruption"] = corruption;
  j["depth_noise"] = config.depth_noise;
  return j.dump(2) + "\n";
}

SceneConfig random_scene_config(std::uint64_t seed, const std::string& video_id) {
  std::mt19937_64 rng(seed ^ 0xC2B2AE3D27D4EB4Full);

  SceneConfig config;
  config.video_id = video_id;
  config.seed = seed;

  const int width = 48 + 16 * static_cast<int>(rng() % 4);
  const int height = 48 + 16 * static_cast<int>(rng() % 4);
  config.intr = Intrinsics(uniform(rng, 0.9, 1.3) * width, uniform(rng, 0.9, 1.3) * height,
                           width / 2.0 + uniform(rng, -2.0, 2.0),
                           height / 2.0 + uniform(rng, -2.0, 2.0), width, height);
  config.frames = 3 + static_cast<int>(rng() % 4);

  const Point3 scene_center(0.0, 0.0, 4.0);
  config.background_count = 300 + static_cast<int>(rng() % 100);
  config.background_box = Box{scene_center + Point3(-2.0, -1.5, -1.4),
                              scene_center + Point3(2.0, 1.5, 1.6)};

  const int n_objects = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n_objects; ++i) {
    ObjectSpec object;
    object.instance_id = i + 1;
    object.point_count = 20 + static_cast<int>(rng() % 21);
    const Point3 center(uniform(rng, -0.8, 0.8), uniform(rng, -0.6, 0.6),
                        uniform(rng, 3.2, 4.4));
    const Point3 half(uniform(rng, 0.25, 0.45), uniform(rng, 0.25, 0.45),
                      uniform(rng, 0.25, 0.45));
    object.box = Box{center - half, center + half};
    object.velocity = Eigen::Vector3d(uniform(rng, -0.06, 0.06), uniform(rng, -0.05, 0.05),
                                      uniform(rng, -0.05, 0.05));
    object.rotation_rate = uniform(rng, -0.04, 0.04);
    config.objects.push_back(object);
  }

  switch (rng() % 3) {
    case 0:
      config.camera.kind = CameraPathSpec::Kind::kOrbit;
      config.camera.center = scene_center;
      config.camera.radius = uniform(rng, 3.4, 4.6);
      config.camera.elevation = uniform(rng, -0.35, 0.35);
      config.camera.arc = uniform(rng, 0.25, 0.6);
      break;
    case 1:
      config.camera.kind = CameraPathSpec::Kind::kLinear;
      config.camera.start = Point3(uniform(rng, -0.3, 0.3), uniform(rng, -0.2, 0.2), 0.0);
      config.camera.velocity = Eigen::Vector3d(uniform(rng, -0.1, 0.1),
                                               uniform(rng, -0.06, 0.06),
                                               uniform(rng, -0.04, 0.04));
      break;
    default:
      config.camera.kind = CameraPathSpec::Kind::kZoom;
      config.camera.start = Point3(0.0, 0.0, uniform(rng, -0.2, 0.2));
      config.camera.velocity = Eigen::Vector3d(0, 0, uniform(rng, 0.05, 0.15));
      break;
  }

  config.corruption_a = uniform(rng, 0.5, 2.0);
  config.corruption_b = uniform(rng, -1.0, 1.0);
  config.depth_noise = 0.0;
  return config;
}

}  // namespace cammo
