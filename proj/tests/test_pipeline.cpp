#include <doctest.h>

#include <cmath>
#include <random>

#include "cammo/errors.hpp"
#include "cammo/pipeline.hpp"
#include "cammo/report.hpp"
#include "cammo/synth.hpp"
#include "test_support.hpp"

using namespace cammo;
using namespace cammo::testing;

namespace {

Report random_report(std::mt19937_64& rng, const std::string& video_id) {
  Report report;
  report.video_id = video_id;
  report.n_frames = 2 + static_cast<int>(rng() % 6);
  for (int f = 0; f < report.n_frames; ++f) {
    report.per_frame.push_back(FrameAlignmentRecord{f, uniform(rng, 0.5, 20.0),
                                                    uniform(rng, -1.0, 1.0),
                                                    50 + static_cast<int>(rng() % 200)});
  }
  const int n_objects = static_cast<int>(rng() % 4);
  for (int o = 0; o < n_objects; ++o) {
    ObjectRecord object;
    object.instance = o + 1;
    object.strength = uniform(rng, 0.0, 0.1);
    object.n_pairs = static_cast<int>(rng() % 500);
    object.skipped.invisible = static_cast<int>(rng() % 10);
    object.skipped.bad_depth = static_cast<int>(rng() % 10);
    object.skipped.behind_camera = static_cast<int>(rng() % 10);
    report.objects.push_back(object);
    report.motion_strength = std::max(report.motion_strength, object.strength);
  }
  if (rng() % 5 == 0) report.warnings.push_back("frame 0 (x.png): synthetic warning");
  report.is_dynamic = report.motion_strength >= report.params.threshold;
  return report;
}

}  // namespace

TEST_CASE("annotate on a static scene reports zero strength and echoes alignment truth") {
  SceneConfig config = random_scene_config(301, "static_video");
  for (ObjectSpec& object : config.objects) {
    object.velocity = Eigen::Vector3d::Zero();
    object.rotation_rate = 0.0;
  }
  TempDir dir("pipe_static");
  const SceneBundle bundle = generate_scene(config, dir.path() / config.video_id);

  const Report report = annotate_video(make_video_job(dir.path() / config.video_id, JobParams{}));
  REQUIRE(report.status == "ok");
  CHECK(report.video_id == "static_video");
  CHECK(report.n_frames == config.frames);
  CHECK(report.motion_strength <= 1e-9);
  CHECK_FALSE(report.is_dynamic);
  REQUIRE(static_cast<int>(report.per_frame.size()) == config.frames);
  // The pipeline reads float32 depth files, so recovery is exact only up to
  // the payload quantization.
  for (int f = 0; f < config.frames; ++f) {
    CHECK(std::abs(report.per_frame[f].alpha - bundle.truth[f].scale) <=
          1e-6 * bundle.truth[f].scale);
    CHECK(std::abs(report.per_frame[f].beta - bundle.truth[f].shift) <=
          1e-6 * bundle.truth[f].scale);
  }
}

TEST_CASE("annotate on a moving scene matches the analytic strength and flags dynamic") {
  const SceneConfig config = random_scene_config(302, "moving_video");
  TempDir dir("pipe_moving");
  const SceneBundle bundle = generate_scene(config, dir.path() / config.video_id);
  const Report report = annotate_video(make_video_job(dir.path() / config.video_id, JobParams{}));
  REQUIRE(report.status == "ok");

  double analytic_max = 0.0;
  for (const auto& [instance, strength] : bundle.analytic_per_object) {
    analytic_max = std::max(analytic_max, strength);
  }
  CHECK(std::abs(report.motion_strength - analytic_max) <= 1e-6);
  CHECK(report.is_dynamic == (report.motion_strength >= 0.002));
}

TEST_CASE("annotate fails cleanly when an input file is missing") {
  const SceneConfig config = random_scene_config(303, "broken_video");
  TempDir dir("pipe_broken");
  generate_scene(config, dir.path() / config.video_id);
  const auto victim = dir.path() / config.video_id / "depth" / "frame_000001.pfm";
  std::filesystem::remove(victim);

  const Report report = annotate_video(make_video_job(dir.path() / config.video_id, JobParams{}));
  CHECK(report.status == "failed");
  CHECK(report.error.find("frame_000001.pfm") != std::string::npos);
}

TEST_CASE("annotate fails when most frames cannot be aligned") {
  const SceneConfig config = random_scene_config(304, "unalignable");
  TempDir dir("pipe_unalignable");
  generate_scene(config, dir.path() / config.video_id);
  JobParams params;
  params.min_sparse = 1 << 20;  // no frame can reach this
  const Report report = annotate_video(make_video_job(dir.path() / config.video_id, params));
  CHECK(report.status == "failed");
  CHECK(report.error.find("unalignable") != std::string::npos);
  CHECK_FALSE(report.warnings.empty());
}

TEST_CASE("report json round trip is byte exact and validated") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 50; ++i) {
    const Report report = random_report(rng, "video_" + std::to_string(i));
    const std::string text = report_to_string(report);
    const Report back = report_from_string(text);
    CHECK(report_to_string(back) == text);
  }
}

TEST_CASE("report validation rejects inconsistent documents") {
  std::mt19937_64 rng(72);
  Report report = random_report(rng, "video_x");
  std::string text = report_to_string(report);

  SUBCASE("wrong schema version") {
    const std::string needle = "\"schema\": 1";
    text.replace(text.find(needle), needle.size(), "\"schema\": 2");
    CHECK_THROWS(report_from_string(text));
  }
  SUBCASE("missing field") {
    CHECK_THROWS(report_from_string("{\"schema\": 1}"));
  }
  SUBCASE("inconsistent motion strength") {
    report.motion_strength += 0.5;
    CHECK_THROWS(report_from_string(report_to_string(report)));
  }
  SUBCASE("inconsistent dynamic flag") {
    report.objects.clear();
    ObjectRecord object;
    object.instance = 1;
    object.strength = 0.05;
    report.objects.push_back(object);
    report.motion_strength = 0.05;
    report.is_dynamic = false;  // 0.05 >= 0.002, so this is wrong
    CHECK_THROWS(report_from_string(report_to_string(report)));
  }
  SUBCASE("garbage") {
    CHECK_THROWS(report_from_string("not json at all"));
  }
}

TEST_CASE("filter_reports partitions by threshold and lists malformed files") {
  TempDir dir("filter");

  Report low;
  low.video_id = "low";
  ObjectRecord weak;
  weak.instance = 1;
  weak.strength = 0.0005;
  weak.n_pairs = 4;
  low.objects.push_back(weak);
  low.motion_strength = 0.0005;
  low.is_dynamic = false;
  write_report(low, dir.path() / "low.json");

  Report high;
  high.video_id = "high";
  ObjectRecord object;
  object.instance = 1;
  object.strength = 0.05;
  object.n_pairs = 10;
  high.objects.push_back(object);
  high.motion_strength = 0.05;
  high.is_dynamic = true;
  write_report(high, dir.path() / "high.json");

  Report failed;
  failed.video_id = "failed";
  failed.status = "failed";
  failed.error = "broken input";
  failed.is_dynamic = false;
  write_report(failed, dir.path() / "failed.json");

  spit(dir.path() / "junk.json", "{\"schema\": 1, \"nope\": true}");
  spit(dir.path() / "notes.txt", "not a report");

  const FilterResult result = filter_reports(dir.path(), 0.002);
  CHECK(result.accepted == std::vector<std::string>{"high"});
  CHECK(result.below == std::vector<std::string>{"low"});
  CHECK(result.failed == std::vector<std::string>{"failed"});
  CHECK(result.malformed == std::vector<std::string>{"junk.json"});

  const FilterResult empty = filter_reports(dir.path() / "missing_dir", 0.002);
  CHECK(empty.accepted.empty());
}

TEST_CASE("filter_reports matches a brute-force rescan over many reports") {
  TempDir dir("filter_many");
  std::mt19937_64 rng(73);
  std::vector<std::string> expected;
  const double threshold = 0.002;
  for (int i = 0; i < 100; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "video_%03d", i);
    const Report report = random_report(rng, name);
    write_report(report, dir.path() / (std::string(name) + ".json"));
    if (report.motion_strength >= threshold) expected.push_back(name);
  }
  std::sort(expected.begin(), expected.end());
  const FilterResult result = filter_reports(dir.path(), threshold);
  CHECK(result.accepted == expected);
  CHECK(result.accepted.size() + result.below.size() == 100);

  const auto list_path = dir.path() / "accepted.txt";
  write_id_list(result.accepted, list_path);
  std::string joined;
  for (const std::string& id : expected) joined += id + "\n";
  CHECK(slurp(list_path) == joined);
}

TEST_CASE("plucker maps for a model") {
  TempDir dir("plucker_model");
  spit(dir.path() / "cameras.txt", "1 PINHOLE 9 9 10 10 4 4\n");
  spit(dir.path() / "images.txt", "1 1 0 0 0 0 0 0 1 only.png\n\n");
  spit(dir.path() / "points3D.txt", "");
  const SfmModel model = parse_colmap_text(dir.path());
  const auto maps = plucker_maps_for_model(model);
  REQUIRE(maps.size() == 1);
  const double* center = maps[0].at(4, 4);
  CHECK(std::abs(center[0]) <= 1e-12);
  CHECK(std::abs(center[1]) <= 1e-12);
  CHECK(center[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(center[3]) <= 1e-12);

  SUBCASE("mixed resolutions are rejected") {
    spit(dir.path() / "cameras.txt", "1 PINHOLE 9 9 10 10 4 4\n2 PINHOLE 16 16 10 10 8 8\n");
    spit(dir.path() / "images.txt",
         "1 1 0 0 0 0 0 0 1 a.png\n\n2 1 0 0 0 0 0 0 2 b.png\n\n");
    const SfmModel mixed = parse_colmap_text(dir.path());
    CHECK_THROWS_AS(plucker_maps_for_model(mixed), std::runtime_error);
  }
}

TEST_CASE("batch annotation isolates failures and counts them") {
  TempDir dir("batch");
  std::vector<VideoJob> jobs;
  for (int i = 0; i < 4; ++i) {
    const SceneConfig config = random_scene_config(400 + i, "vid_" + std::to_string(i));
    generate_scene(config, dir.path() / "videos" / config.video_id);
    jobs.push_back(make_video_job(dir.path() / "videos" / config.video_id, JobParams{}));
  }
  // Corrupt one video's model.
  spit(dir.path() / "videos" / "vid_2" / "colmap" / "images.txt", "garbage here\n");

  const BatchResult result = annotate_batch(jobs, 2, dir.path() / "reports");
  CHECK(result.n_failed == 1);
  REQUIRE(result.reports.size() == 4);
  CHECK(result.reports[2].video_id == "vid_2");
  CHECK(result.reports[2].status == "failed");
  for (int i = 0; i < 4; ++i) {
    CHECK(std::filesystem::exists(dir.path() / "reports" /
                                  (result.reports[i].video_id + ".json")));
  }
  // Written reports parse and validate.
  const Report back = read_report(dir.path() / "reports" / "vid_0.json");
  CHECK(back.video_id == "vid_0");
}
