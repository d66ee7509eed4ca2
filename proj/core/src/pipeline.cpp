#include "cammo/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <thread>

#include "cammo/depth.hpp"
#include "cammo/errors.hpp"
#include "cammo/motion.hpp"

namespace cammo {

namespace {

namespace fs = std::filesystem;

void require_file(const fs::path& path, const char* what) {
  if (!fs::exists(path)) {
    throw std::runtime_error(std::string("missing ") + what + ": " + path.string());
  }
}

std::string image_stem(const std::string& name) {
  return fs::path(name).stem().string();
}

}  // namespace

VideoJob make_video_job(const fs::path& video_dir, const JobParams& params) {
  fs::path clean = video_dir.lexically_normal();
  if (!clean.has_filename()) clean = clean.parent_path();
  VideoJob job;
  job.video_id = clean.filename().string();
  job.colmap_dir = video_dir / "colmap";
  job.depth_dir = video_dir / "depth";
  job.mask_dir = video_dir / "masks";
  job.tracks_path = video_dir / "tracks.jsonl";
  job.params = params;
  return job;
}

Report annotate_video(const VideoJob& job) {
  Report report;
  report.video_id = job.video_id;
  report.params = job.params;

  try {
    for (const char* name : {"cameras.txt", "images.txt", "points3D.txt"}) {
      require_file(job.colmap_dir / name, "SfM file");
    }
    require_file(job.tracks_path, "tracks file");

    const SfmModel model = parse_colmap_text(job.colmap_dir);
    const int n_frames = static_cast<int>(model.frames.size());
    report.n_frames = n_frames;
    if (n_frames == 0) {
      throw std::runtime_error("model has no frames: " + job.colmap_dir.string());
    }
    if (model.points.points.empty()) {
      throw std::runtime_error("model has an empty point cloud: " + job.colmap_dir.string());
    }

    // One shared pinhole camera per video; the motion field normalizes by a
    // single (W, H).
    const Intrinsics intr = model.cameras.at(model.frames.front().camera_id);
    for (const SfmFrame& frame : model.frames) {
      if (!(model.cameras.at(frame.camera_id) == intr)) {
        throw std::runtime_error("frames use differing camera intrinsics, unsupported");
      }
    }

    std::vector<std::optional<AlignedDepth>> aligned(n_frames);
    int unalignable = 0;
    for (int f = 0; f < n_frames; ++f) {
      const SfmFrame& frame = model.frames[f];
      const std::string stem = image_stem(frame.name);
      const fs::path depth_path = job.depth_dir / (stem + ".pfm");
      const fs::path mask_path = job.mask_dir / (stem + ".pgm");
      require_file(depth_path, "depth file");
      require_file(mask_path, "mask file");

      const DepthMap relative = read_pfm(depth_path, DepthKind::kRelative, f);
      if (relative.width() != intr.width || relative.height() != intr.height) {
        throw std::runtime_error("depth size does not match the camera: " +
                                 depth_path.string());
      }
      const InstanceMask mask = read_pgm_mask(mask_path);
      if (mask.width() != intr.width || mask.height() != intr.height) {
        throw std::runtime_error("mask size does not match the camera: " +
                                 mask_path.string());
      }

      const SparseDepthSamples samples =
          rasterize_sparse_depth(model.points, frame.pose, intr, f);
      try {
        aligned[f] = align_depth(relative, samples, job.params.min_sparse);
        report.per_frame.push_back(FrameAlignmentRecord{
            f, aligned[f]->alignment.alpha, aligned[f]->alignment.beta,
            aligned[f]->alignment.n_samples});
      } catch (const AlignmentError& e) {
        ++unalignable;
        report.warnings.push_back("frame " + std::to_string(f) + " (" + frame.name +
                                  "): " + e.what());
      }
    }
    if (2 * unalignable > n_frames) {
      throw std::runtime_error(std::to_string(unalignable) + " of " +
                               std::to_string(n_frames) + " frames unalignable");
    }

    const std::vector<InstanceTracks> all_tracks = read_tracks_jsonl(job.tracks_path);
    std::vector<std::pair<int, double>> per_object;
    for (const InstanceTracks& tracks : all_tracks) {
      std::vector<MotionField> fields;
      SkipCounts skipped;
      for (int i = 0; i + job.params.frame_gap < n_frames; ++i) {
        if (!aligned[i].has_value()) continue;
        const int jf = i + job.params.frame_gap;
        MotionField field = motion_field(tracks, aligned[i]->depth, model.frames[i].pose,
                                         model.frames[jf].pose, intr, i, jf);
        skipped += field.skipped;
        fields.push_back(std::move(field));
      }
      ObjectRecord record;
      record.instance = tracks.instance_id();
      record.strength = object_strength(fields);
      record.skipped = skipped;
      for (const MotionField& field : fields) {
        record.n_pairs += static_cast<int>(field.pairs.size());
      }
      report.objects.push_back(record);
      per_object.emplace_back(record.instance, record.strength);
    }

    report.motion_strength = video_motion_strength(per_object);
    report.is_dynamic = classify_dynamic(report.motion_strength, job.params.threshold);
    report.status = "ok";
  } catch (const std::exception& e) {
    report.status = "failed";
    report.error = e.what();
    report.motion_strength = 0.0;
    report.is_dynamic = classify_dynamic(0.0, job.params.threshold);
    report.per_frame.clear();
    report.objects.clear();
  }
  return report;
}

BatchResult annotate_batch(const std::vector<VideoJob>& jobs, int workers,
                           const fs::path& out_dir) {
  fs::create_directories(out_dir);

  std::vector<VideoJob> sorted_jobs = jobs;
  std::sort(sorted_jobs.begin(), sorted_jobs.end(),
            [](const VideoJob& a, const VideoJob& b) { return a.video_id < b.video_id; });

  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  workers = std::min<int>(workers, static_cast<int>(sorted_jobs.size()));
  workers = std::max(workers, 1);

  BatchResult result;
  result.reports.resize(sorted_jobs.size());

  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= sorted_jobs.size()) break;
      Report report = annotate_video(sorted_jobs[index]);
      write_report(report, out_dir / (report.video_id + ".json"));
      result.reports[index] = std::move(report);
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(run);
    for (std::thread& thread : pool) thread.join();
  }

  for (const Report& report : result.reports) {
    if (report.status != "ok") ++result.n_failed;
  }
  return result;
}

FilterResult filter_reports(const fs::path& reports_dir, double threshold) {
  std::vector<fs::path> files;
  if (fs::exists(reports_dir)) {
    for (const auto& entry : fs::directory_iterator(reports_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());

  FilterResult result;
  for (const fs::path& file : files) {
    Report report;
    try {
      report = read_report(file);
    } catch (const std::exception&) {
      result.malformed.push_back(file.filename().string());
      continue;
    }
    if (report.status != "ok") {
      result.failed.push_back(report.video_id);
    } else if (report.motion_strength >= threshold) {
      result.accepted.push_back(report.video_id);
    } else {
      result.below.push_back(report.video_id);
    }
  }
  std::sort(result.accepted.begin(), result.accepted.end());
  std::sort(result.below.begin(), result.below.end());
  std::sort(result.failed.begin(), result.failed.end());
  return result;
}

void write_id_list(const std::vector<std::string>& ids, const fs::path& path) {
  std::ofstream file(path, std::ios::trunc);
  if (!file.is_open()) {
    throw std::runtime_error("cannot write list file: " + path.string());
  }
  for (const std::string& id : ids) {
    file << id << "\n";
  }
  if (!file) {
    throw std::runtime_error("list write failed: " + path.string());
  }
}

std::vector<PluckerMap> plucker_maps_for_model(const SfmModel& model) {
  std::vector<PluckerMap> maps;
  maps.reserve(model.frames.size());
  std::optional<std::pair<int, int>> resolution;
  for (const SfmFrame& frame : model.frames) {
    const Intrinsics& intr = model.cameras.at(frame.camera_id);
    if (!resolution) {
      resolution = {intr.width, intr.height};
    } else if (resolution->first != intr.width || resolution->second != intr.height) {
      throw std::runtime_error("mixed camera resolutions are unsupported");
    }
    maps.push_back(plucker_map(frame.pose, intr));
  }
  return maps;
}

}  // namespace cammo
