// Command line front end for the curation toolkit: per-video camera/object
// motion annotation, dataset filtering, Plücker-ray emission, trajectory
// generation, and the synthetic scene generator.
//
// Exit codes: 0 all ok, 1 usage or fatal error, 2 batch finished with
// partial failures.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cammo/ingest.hpp"
#include "cammo/pipeline.hpp"
#include "cammo/synth.hpp"
#include "cammo/trajectory.hpp"
#include "cammo/version.hpp"

namespace fs = std::filesystem;

namespace {

std::string indexed_name(const char* prefix, int index) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%s_%06d.png", prefix, index);
  return buffer;
}

cammo::SfmModel trajectory_to_model(const cammo::Trajectory& trajectory,
                                    const char* name_prefix) {
  cammo::SfmModel model;
  model.cameras.emplace(1, trajectory.intr);
  for (std::size_t k = 0; k < trajectory.poses.size(); ++k) {
    cammo::SfmFrame frame;
    frame.image_id = static_cast<int>(k) + 1;
    frame.name = indexed_name(name_prefix, static_cast<int>(k));
    frame.camera_id = 1;
    Eigen::Quaterniond q(trajectory.poses[k].rotation());
    q.normalize();
    frame.qw = q.w();
    frame.qx = q.x();
    frame.qy = q.y();
    frame.qz = q.z();
    frame.tvec = trajectory.poses[k].translation();
    frame.pose = cammo::Pose::from_quaternion(frame.qw, frame.qx, frame.qy, frame.qz,
                                              frame.tvec);
    model.frames.push_back(std::move(frame));
  }
  return model;
}

std::vector<fs::path> discover_video_dirs(const fs::path& root) {
  if (fs::exists(root / "colmap")) {
    return {root};  // a single video layout was passed directly
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  if (dirs.empty()) {
    throw std::runtime_error("no video directories under " + root.string());
  }
  return dirs;
}

cammo::Intrinsics intrinsics_from_flags(int width, int height, double fx, double fy,
                                        double cx, double cy) {
  if (cx < 0.0) cx = width / 2.0;
  if (cy < 0.0) cy = height / 2.0;
  return cammo::Intrinsics(fx, fy, cx, cy, width, height);
}

int run_annotate(const fs::path& videos_dir, const fs::path& out_dir,
                 const cammo::JobParams& params, int workers) {
  std::vector<cammo::VideoJob> jobs;
  for (const fs::path& dir : discover_video_dirs(videos_dir)) {
    jobs.push_back(cammo::make_video_job(dir, params));
  }
  const cammo::BatchResult result = cammo::annotate_batch(jobs, workers, out_dir);
  for (const cammo::Report& report : result.reports) {
    std::cout << report.video_id << "  status=" << report.status
              << "  motion_strength=" << report.motion_strength
              << "  dynamic=" << (report.is_dynamic ? "yes" : "no");
    if (report.status != "ok") std::cout << "  error: " << report.error;
    std::cout << "\n";
  }
  std::cout << "annotated " << result.reports.size() << " video(s), " << result.n_failed
            << " failed, reports in " << out_dir.string() << "\n";
  return result.n_failed == 0 ? 0 : 2;
}

int run_filter(const fs::path& reports_dir, double threshold, const fs::path& out_path) {
  const cammo::FilterResult result = cammo::filter_reports(reports_dir, threshold);
  cammo::write_id_list(result.accepted, out_path);
  std::cout << "accepted " << result.accepted.size() << ", below threshold "
            << result.below.size() << ", failed " << result.failed.size() << ", malformed "
            << result.malformed.size() << "\n";
  for (const std::string& name : result.malformed) {
    std::cout << "rejected (malformed): " << name << "\n";
  }
  std::cout << "accepted list written to " << out_path.string() << "\n";
  return 0;
}

int run_plucker(const fs::path& colmap_dir, const fs::path& out_path) {
  const cammo::SfmModel model = cammo::parse_colmap_text(colmap_dir);
  if (model.frames.empty()) {
    throw std::runtime_error("model has no frames: " + colmap_dir.string());
  }
  const std::vector<cammo::PluckerMap> maps = cammo::plucker_maps_for_model(model);
  std::vector<std::string> names;
  names.reserve(model.frames.size());
  for (const cammo::SfmFrame& frame : model.frames) names.push_back(frame.name);
  cammo::write_plucker(maps, names, out_path);
  std::cout << "wrote " << maps.size() << " frame(s) of " << maps.front().width() << "x"
            << maps.front().height() << " rays to " << out_path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(cammo::kToolName) +
               " - camera and object motion curation toolkit (v" + cammo::kToolVersion + ")"};
  app.require_subcommand(1);

  // annotate
  std::string videos_dir, annotate_out;
  cammo::JobParams params;
  int workers = 0;
  CLI::App* annotate = app.add_subcommand(
      "annotate", "Annotate video(s) with per-object motion strength and alignment");
  annotate->add_option("videos_dir", videos_dir,
                       "Directory of per-video bundles (or a single bundle)")
      ->required()
      ->check(CLI::ExistingDirectory);
  annotate->add_option("--out", annotate_out, "Directory for report JSON files")->required();
  annotate->add_option("--frame-gap", params.frame_gap, "Frame index gap of motion pairs")
      ->check(CLI::PositiveNumber);
  annotate->add_option("--min-sparse", params.min_sparse,
                       "Minimum sparse depth samples per frame");
  annotate->add_option("--threshold", params.threshold, "Dynamic-scene strength threshold");
  annotate->add_option("--grid-step", params.grid_step, "Keypoint grid step in pixels");
  annotate->add_option("--workers", workers, "Worker threads (0 = logical CPUs)");

  // filter
  std::string reports_dir, filter_out;
  double filter_threshold = 0.002;
  CLI::App* filter = app.add_subcommand("filter", "Select dynamic videos from reports");
  filter->add_option("reports_dir", reports_dir, "Directory of report JSON files")
      ->required()
      ->check(CLI::ExistingDirectory);
  filter->add_option("--threshold", filter_threshold, "Motion strength threshold");
  filter->add_option("--out", filter_out, "Accepted video id list file")->required();

  // plucker
  std::string plucker_colmap, plucker_out;
  CLI::App* plucker = app.add_subcommand("plucker", "Emit per-frame Plücker ray maps (PLK1)");
  plucker->add_option("colmap_dir", plucker_colmap, "SfM text model directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  plucker->add_option("--out", plucker_out, "Output .plk path")->required();

  // orbit
  std::vector<double> orbit_center{0.0, 0.0, 0.0};
  double orbit_radius = 4.0, orbit_elevation_deg = 0.0;
  int orbit_n = 24;
  int traj_width = 256, traj_height = 256;
  double traj_fx = 256.0, traj_fy = 256.0, traj_cx = -1.0, traj_cy = -1.0;
  std::string orbit_out;
  CLI::App* orbit = app.add_subcommand("orbit", "Generate an orbit camera trajectory");
  orbit->add_option("--center", orbit_center, "Orbit center (x y z)")->expected(3);
  orbit->add_option("--radius", orbit_radius, "Orbit radius")->check(CLI::PositiveNumber);
  orbit->add_option("--elevation-deg", orbit_elevation_deg, "Elevation in degrees");
  orbit->add_option("--n", orbit_n, "Number of cameras")->check(CLI::PositiveNumber);
  orbit->add_option("--width", traj_width, "Image width");
  orbit->add_option("--height", traj_height, "Image height");
  orbit->add_option("--fx", traj_fx, "Focal length x");
  orbit->add_option("--fy", traj_fy, "Focal length y");
  orbit->add_option("--cx", traj_cx, "Principal point x (default width/2)");
  orbit->add_option("--cy", traj_cy, "Principal point y (default height/2)");
  orbit->add_option("--out", orbit_out, "Output SfM text directory")->required();

  // densify
  std::string densify_colmap, densify_out;
  int per_segment = 4;
  CLI::App* densify = app.add_subcommand(
      "densify", "Interpolate anchor camera poses into a denser trajectory");
  densify->add_option("colmap_dir", densify_colmap, "Anchor poses as an SfM text model")
      ->required()
      ->check(CLI::ExistingDirectory);
  densify->add_option("--per-segment", per_segment, "Poses per anchor segment")
      ->check(CLI::PositiveNumber);
  densify->add_option("--out", densify_out, "Output SfM text directory")->required();

  // synth
  std::string synth_config, synth_out;
  int synth_random = 0;
  std::uint64_t synth_seed = 1;
  CLI::App* synth = app.add_subcommand("synth", "Generate synthetic ground-truth scenes");
  CLI::Option* config_opt =
      synth->add_option("--config", synth_config, "Scene config JSON file")
          ->check(CLI::ExistingFile);
  synth->add_option("--random", synth_random, "Generate N randomized scenes")
      ->excludes(config_opt);
  synth->add_option("--seed", synth_seed, "Seed for randomized scenes");
  synth->add_option("--out", synth_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(annotate)) {
      return run_annotate(videos_dir, annotate_out, params, workers);
    }
    if (app.got_subcommand(filter)) {
      return run_filter(reports_dir, filter_threshold, filter_out);
    }
    if (app.got_subcommand(plucker)) {
      return run_plucker(plucker_colmap, plucker_out);
    }
    if (app.got_subcommand(orbit)) {
      const cammo::Intrinsics intr =
          intrinsics_from_flags(traj_width, traj_height, traj_fx, traj_fy, traj_cx, traj_cy);
      const cammo::Trajectory trajectory = cammo::orbit_trajectory(
          cammo::Point3(orbit_center[0], orbit_center[1], orbit_center[2]), orbit_radius,
          orbit_elevation_deg * std::numbers::pi / 180.0, orbit_n, intr);
      cammo::serialize_colmap_text(trajectory_to_model(trajectory, "orbit"), orbit_out);
      std::cout << "wrote " << trajectory.poses.size() << " orbit poses to " << orbit_out
                << "\n";
      return 0;
    }
    if (app.got_subcommand(densify)) {
      const cammo::SfmModel model = cammo::parse_colmap_text(densify_colmap);
      if (model.frames.size() < 2) {
        throw std::runtime_error("densify needs at least 2 anchor poses");
      }
      const cammo::Intrinsics intr = model.cameras.at(model.frames.front().camera_id);
      std::vector<cammo::Pose> anchors;
      for (const cammo::SfmFrame& frame : model.frames) {
        if (!(model.cameras.at(frame.camera_id) == intr)) {
          throw std::runtime_error("densify needs one shared camera across anchors");
        }
        anchors.push_back(frame.pose);
      }
      const cammo::Trajectory trajectory =
          cammo::densify_trajectory(anchors, per_segment, intr);
      cammo::serialize_colmap_text(trajectory_to_model(trajectory, "pose"), densify_out);
      std::cout << "wrote " << trajectory.poses.size() << " poses to " << densify_out << "\n";
      return 0;
    }
    if (app.got_subcommand(synth)) {
      std::vector<cammo::SceneConfig> configs;
      if (!synth_config.empty()) {
        std::ifstream file(synth_config);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        configs.push_back(cammo::scene_config_from_json(buffer.str()));
      } else if (synth_random > 0) {
        for (int i = 0; i < synth_random; ++i) {
          char id[32];
          std::snprintf(id, sizeof(id), "synth_%04d", i);
          configs.push_back(cammo::random_scene_config(synth_seed + i, id));
        }
      } else {
        throw std::runtime_error("synth needs --config or --random N");
      }
      for (const cammo::SceneConfig& config : configs) {
        const cammo::SceneBundle bundle =
            cammo::generate_scene(config, fs::path(synth_out) / config.video_id);
        double strongest = 0.0;
        for (const auto& [instance, strength] : bundle.analytic_per_object) {
          strongest = std::max(strongest, strength);
        }
        std::cout << config.video_id << "  frames=" << config.frames
                  << "  objects=" << config.objects.size()
                  << "  analytic_strength=" << strongest << "\n";
      }
      std::cout << "generated " << configs.size() << " scene(s) under " << synth_out << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
