#include "cammo/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cammo/errors.hpp"
#include "cammo/version.hpp"

namespace cammo {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void check(bool condition, const std::string& message) {
  if (!condition) {
    throw std::runtime_error("report: " + message);
  }
}

int get_int(const json& j, const char* key) {
  check(j.contains(key) && j[key].is_number_integer(), std::string(key) + " must be an integer");
  return j[key].get<int>();
}

double get_number(const json& j, const char* key) {
  check(j.contains(key) && j[key].is_number(), std::string(key) + " must be a number");
  const double value = j[key].get<double>();
  check(std::isfinite(value), std::string(key) + " must be finite");
  return value;
}

std::string get_string(const json& j, const char* key) {
  check(j.contains(key) && j[key].is_string(), std::string(key) + " must be a string");
  return j[key].get<std::string>();
}

}  // namespace

std::string report_to_string(const Report& report) {
  ordered_json j;
  j["schema"] = kReportSchemaVersion;
  j["version"] = kToolVersion;
  j["video_id"] = report.video_id;
  j["status"] = report.status;
  j["n_frames"] = report.n_frames;

  j["per_frame"] = ordered_json::array();
  for (const FrameAlignmentRecord& frame : report.per_frame) {
    ordered_json record;
    record["frame"] = frame.frame;
    record["alpha"] = frame.alpha;
    record["beta"] = frame.beta;
    record["n_sparse"] = frame.n_sparse;
    j["per_frame"].push_back(record);
  }

  j["objects"] = ordered_json::array();
  for (const ObjectRecord& object : report.objects) {
    ordered_json record;
    record["instance"] = object.instance;
    record["strength"] = object.strength;
    record["n_pairs"] = object.n_pairs;
    ordered_json skipped;
    skipped["invisible"] = object.skipped.invisible;
    skipped["bad_depth"] = object.skipped.bad_depth;
    skipped["behind_camera"] = object.skipped.behind_camera;
    record["skipped"] = skipped;
    j["objects"].push_back(record);
  }

  j["motion_strength"] = report.motion_strength;
  j["is_dynamic"] = report.is_dynamic;

  ordered_json params;
  params["frame_gap"] = report.params.frame_gap;
  params["min_sparse"] = report.params.min_sparse;
  params["threshold"] = report.params.threshold;
  params["grid_step"] = report.params.grid_step;
  j["params"] = params;

  j["warnings"] = report.warnings;
  if (report.status == "failed") {
    j["error"] = report.error;
  }
  return j.dump(2) + "\n";
}

Report report_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("report: invalid JSON: ") + e.what());
  }
  check(j.is_object(), "top level must be an object");
  check(get_int(j, "schema") == kReportSchemaVersion, "unsupported schema version");

  Report report;
  get_string(j, "version");
  report.video_id = get_string(j, "video_id");
  report.status = get_string(j, "status");
  check(report.status == "ok" || report.status == "failed", "status must be ok or failed");
  report.n_frames = get_int(j, "n_frames");
  check(report.n_frames >= 0, "n_frames must be >= 0");

  check(j.contains("per_frame") && j["per_frame"].is_array(), "per_frame must be an array");
  for (const json& record : j["per_frame"]) {
    check(record.is_object(), "per_frame entries must be objects");
    FrameAlignmentRecord frame;
    frame.frame = get_int(record, "frame");
    frame.alpha = get_number(record, "alpha");
    frame.beta = get_number(record, "beta");
    frame.n_sparse = get_int(record, "n_sparse");
    report.per_frame.push_back(frame);
  }

  check(j.contains("objects") && j["objects"].is_array(), "objects must be an array");
  double strongest = 0.0;
  for (const json& record : j["objects"]) {
    check(record.is_object(), "objects entries must be objects");
    ObjectRecord object;
    object.instance = get_int(record, "instance");
    object.strength = get_number(record, "strength");
    check(object.strength >= 0.0, "object strength must be >= 0");
    object.n_pairs = get_int(record, "n_pairs");
    check(record.contains("skipped") && record["skipped"].is_object(),
          "objects entries need a skipped object");
    object.skipped.invisible = get_int(record["skipped"], "invisible");
    object.skipped.bad_depth = get_int(record["skipped"], "bad_depth");
    object.skipped.behind_camera = get_int(record["skipped"], "behind_camera");
    report.objects.push_back(object);
    strongest = std::max(strongest, object.strength);
  }

  report.motion_strength = get_number(j, "motion_strength");
  check(j.contains("is_dynamic") && j["is_dynamic"].is_boolean(), "is_dynamic must be a bool");
  report.is_dynamic = j["is_dynamic"].get<bool>();

  check(j.contains("params") && j["params"].is_object(), "params must be an object");
  report.params.frame_gap = get_int(j["params"], "frame_gap");
  report.params.min_sparse = get_int(j["params"], "min_sparse");
  report.params.threshold = get_number(j["params"], "threshold");
  report.params.grid_step = get_int(j["params"], "grid_step");

  check(j.contains("warnings") && j["warnings"].is_array(), "warnings must be an array");
  for (const json& warning : j["warnings"]) {
    check(warning.is_string(), "warnings must be strings");
    report.warnings.push_back(warning.get<std::string>());
  }
  if (report.status == "failed") {
    report.error = get_string(j, "error");
  }

  // Cross-field invariants of the schema.
  check(std::abs(report.motion_strength - strongest) <= 1e-12,
        "motion_strength must equal the maximum object strength");
  check(report.is_dynamic == (report.motion_strength >= report.params.threshold),
        "is_dynamic is inconsistent with motion_strength and threshold");
  return report;
}

Report read_report(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file.is_open()) {
    throw ParseError(path.string(), 0, "cannot open report");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  try {
    return report_from_string(buffer.str());
  } catch (const std::runtime_error& e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

void write_report(const Report& report, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::trunc);
  if (!file.is_open()) {
    throw std::runtime_error("cannot write report: " + path.string());
  }
  file << report_to_string(report);
  if (!file) {
    throw std::runtime_error("report write failed: " + path.string());
  }
}

}  // namespace cammo
