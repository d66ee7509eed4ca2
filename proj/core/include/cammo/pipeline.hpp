#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cammo/geometry.hpp"
#include "cammo/ingest.hpp"
#include "cammo/report.hpp"

namespace cammo {

/// Inputs of one per-video annotation job.
struct VideoJob {
  std::string video_id;
  std::filesystem::path colmap_dir;
  std::filesystem::path depth_dir;
  std::filesystem::path mask_dir;
  std::filesystem::path tracks_path;
  JobParams params;
};

/// Job over the standard video layout:
///   video_dir/{colmap/, depth/, masks/, tracks.jsonl}
/// with video_id = directory name.
VideoJob make_video_job(const std::filesystem::path& video_dir, const JobParams& params);

/// Runs the full per-video pipeline: parse the SfM model, align each
/// frame's relative depth to SfM scale, build per-object motion fields
/// across frame_gap pairs, and reduce to strengths and the dynamic flag.
/// Never throws for job-level problems; those come back as a status
/// "failed" report whose error names the offending input. Frames that fail
/// alignment are skipped with a warning; the video fails when more than
/// half of its frames are unalignable.
Report annotate_video(const VideoJob& job);

struct BatchResult {
  std::vector<Report> reports;  // sorted by video_id
  int n_failed = 0;
};

/// Annotates jobs on a worker pool and writes <video_id>.json per report
/// into out_dir. Report bytes are independent of worker count.
BatchResult annotate_batch(const std::vector<VideoJob>& jobs, int workers,
                           const std::filesystem::path& out_dir);

struct FilterResult {
  std::vector<std::string> accepted;   // sorted video ids, strength >= threshold
  std::vector<std::string> below;      // valid but static
  std::vector<std::string> failed;     // status "failed"
  std::vector<std::string> malformed;  // files that did not validate
};

/// Scans a directory of report JSON files and partitions the videos by the
/// motion-strength threshold. Malformed reports are listed, never dropped.
FilterResult filter_reports(const std::filesystem::path& reports_dir, double threshold);

void write_id_list(const std::vector<std::string>& ids, const std::filesystem::path& path);

/// Per-frame Plücker maps for a parsed model, in model frame order.
/// Throws std::runtime_error when referenced cameras disagree on
/// resolution.
std::vector<PluckerMap> plucker_maps_for_model(const SfmModel& model);

}  // namespace cammo
