#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cammo/motion.hpp"

namespace cammo {

/// Knobs of the per-video annotation pipeline, echoed into every report.
struct JobParams {
  int frame_gap = 1;
  int min_sparse = 50;
  double threshold = 0.002;
  int grid_step = 8;

  friend bool operator==(const JobParams&, const JobParams&) = default;
};

struct FrameAlignmentRecord {
  int frame = 0;
  double alpha = 0.0;
  double beta = 0.0;
  int n_sparse = 0;
};

struct ObjectRecord {
  int instance = 0;
  double strength = 0.0;
  int n_pairs = 0;
  SkipCounts skipped;
};

/// The persisted artifact of the annotation pipeline (schema 1).
struct Report {
  std::string video_id;
  std::string status = "ok";  // "ok" or "failed"
  int n_frames = 0;
  std::vector<FrameAlignmentRecord> per_frame;
  std::vector<ObjectRecord> objects;
  double motion_strength = 0.0;
  bool is_dynamic = false;
  JobParams params;
  std::vector<std::string> warnings;
  std::string error;  // non-empty iff status == "failed"
};

/// Canonical JSON bytes for the report. Serialization is deterministic, so
/// identical reports are byte-identical regardless of worker scheduling.
std::string report_to_string(const Report& report);

/// Parses and validates report JSON. Throws std::runtime_error on schema
/// violations (missing/mistyped fields, wrong schema version, or a
/// motion_strength / is_dynamic inconsistency).
Report report_from_string(const std::string& text);

Report read_report(const std::filesystem::path& path);
void write_report(const Report& report, const std::filesystem::path& path);

}  // namespace cammo
