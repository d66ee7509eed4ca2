#include <doctest.h>

#include <cmath>
#include <cstring>
#include <map>
#include <random>

#include "cammo/errors.hpp"
#include "cammo/ingest.hpp"
#include "test_support.hpp"

using namespace cammo;
using namespace cammo::testing;

namespace {

SfmModel random_model(std::mt19937_64& rng, int n_frames, int n_points) {
  SfmModel model;
  model.cameras.emplace(1, Intrinsics(uniform(rng, 50, 200), uniform(rng, 50, 200),
                                      uniform(rng, 10, 100), uniform(rng, 10, 100), 128, 128));
  model.cameras.emplace(7, Intrinsics(uniform(rng, 50, 200), uniform(rng, 50, 200),
                                      uniform(rng, 10, 100), uniform(rng, 10, 100), 128, 128));
  for (int f = 0; f < n_frames; ++f) {
    SfmFrame frame;
    frame.image_id = 1000 - f;  // ids deliberately unsorted relative to names
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06d.png", f);
    frame.name = name;
    frame.camera_id = (f % 2 == 0) ? 1 : 7;
    Eigen::Quaterniond q(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1),
                         uniform(rng, -1, 1));
    if (q.norm() < 1e-3) q = Eigen::Quaterniond::Identity();
    q.normalize();
    frame.qw = q.w();
    frame.qx = q.x();
    frame.qy = q.y();
    frame.qz = q.z();
    frame.tvec = Eigen::Vector3d(uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3));
    frame.pose = Pose::from_quaternion(frame.qw, frame.qx, frame.qy, frame.qz, frame.tvec);
    const int n_obs = static_cast<int>(rng() % 4);
    for (int o = 0; o < n_obs; ++o) {
      frame.observations.push_back(SfmFrame::Observation{
          uniform(rng, 0, 128), uniform(rng, 0, 128),
          (rng() % 3 == 0) ? -1 : static_cast<long long>(rng() % 100)});
    }
    model.frames.push_back(std::move(frame));
  }
  for (int i = 0; i < n_points; ++i) {
    SparsePoint point;
    point.id = static_cast<std::uint64_t>(i * 3 + 1);
    point.position = Point3(uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5));
    point.color = {static_cast<std::uint8_t>(rng() % 256), static_cast<std::uint8_t>(rng() % 256),
                   static_cast<std::uint8_t>(rng() % 256)};
    point.error = uniform(rng, 0, 2);
    const int n_track = static_cast<int>(rng() % 3);
    for (int t = 0; t < n_track; ++t) {
      point.track.push_back(SparseObservation{static_cast<int>(rng() % 1000),
                                              static_cast<int>(rng() % 50)});
    }
    model.points.points.push_back(std::move(point));
  }
  return model;
}

bool frames_equal(const SfmFrame& a, const SfmFrame& b) {
  return a.image_id == b.image_id && a.name == b.name && a.camera_id == b.camera_id &&
         a.qw == b.qw && a.qx == b.qx && a.qy == b.qy && a.qz == b.qz && a.tvec == b.tvec &&
         a.observations.size() == b.observations.size() &&
         std::equal(a.observations.begin(), a.observations.end(), b.observations.begin(),
                    [](const SfmFrame::Observation& x, const SfmFrame::Observation& y) {
                      return x.x == y.x && x.y == y.y && x.point3d_id == y.point3d_id;
                    });
}

bool models_equal(const SfmModel& a, const SfmModel& b) {
  if (a.cameras.size() != b.cameras.size() || a.frames.size() != b.frames.size() ||
      a.points.points.size() != b.points.points.size()) {
    return false;
  }
  for (const auto& [id, intr] : a.cameras) {
    const auto it = b.cameras.find(id);
    if (it == b.cameras.end() || !(it->second == intr)) return false;
  }
  for (std::size_t i = 0; i < a.frames.size(); ++i) {
    if (!frames_equal(a.frames[i], b.frames[i])) return false;
  }
  for (std::size_t i = 0; i < a.points.points.size(); ++i) {
    const SparsePoint& x = a.points.points[i];
    const SparsePoint& y = b.points.points[i];
    if (x.id != y.id || x.position != y.position || x.color != y.color || x.error != y.error ||
        x.track.size() != y.track.size() ||
        !std::equal(x.track.begin(), x.track.end(), y.track.begin())) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("minimal SIMPLE_PINHOLE model composes with the projection") {
  TempDir dir("colmap_minimal");
  spit(dir.path() / "cameras.txt",
       "# comment line\n"
       "1 SIMPLE_PINHOLE 128 128 100 64 64\n");
  spit(dir.path() / "images.txt",
       "1 1 0 0 0 0 0 0 1 frame_000000.png\n"
       "\n");
  spit(dir.path() / "points3D.txt", "7 0 0 2 10 20 30 0.5\n");

  const SfmModel model = parse_colmap_text(dir.path());
  REQUIRE(model.cameras.size() == 1);
  const Intrinsics& intr = model.cameras.at(1);
  CHECK(intr.fx == 100.0);
  CHECK(intr.fy == 100.0);
  REQUIRE(model.frames.size() == 1);
  REQUIRE(model.points.points.size() == 1);

  const auto proj = project_point(model.frames[0].pose, intr, model.points.points[0].position);
  REQUIRE(proj.has_value());
  CHECK(proj->u == doctest::Approx(64.0).epsilon(1e-12));
  CHECK(proj->v == doctest::Approx(64.0).epsilon(1e-12));
}

TEST_CASE("colmap text round trips are field-exact") {
  std::mt19937_64 rng(123);
  TempDir dir("colmap_roundtrip");
  const SfmModel original = random_model(rng, 50, 80);
  serialize_colmap_text(original, dir.path() / "a");
  const SfmModel parsed = parse_colmap_text(dir.path() / "a");
  serialize_colmap_text(parsed, dir.path() / "b");
  const SfmModel reparsed = parse_colmap_text(dir.path() / "b");
  CHECK(models_equal(parsed, reparsed));
  // The original was built with sorted names, so parsing preserves order.
  CHECK(models_equal(original, parsed));
}

TEST_CASE("frame order follows image names regardless of record order") {
  TempDir dir("colmap_order");
  spit(dir.path() / "cameras.txt", "1 PINHOLE 64 64 50 50 32 32\n");
  spit(dir.path() / "images.txt",
       "12 1 0 0 0 0 0 0 1 frame_000002.png\n\n"
       "3 1 0 0 0 0 0 0 1 frame_000000.png\n\n"
       "9 1 0 0 0 0 0 0 1 frame_000001.png\n\n");
  spit(dir.path() / "points3D.txt", "# empty\n");
  const SfmModel model = parse_colmap_text(dir.path());
  REQUIRE(model.frames.size() == 3);
  CHECK(model.frames[0].name == "frame_000000.png");
  CHECK(model.frames[1].name == "frame_000001.png");
  CHECK(model.frames[2].name == "frame_000002.png");
  CHECK(model.points.points.empty());
}

TEST_CASE("a realistic exporter-style sample parses with expected values") {
  TempDir dir("colmap_sample");
  std::string images =
      "# Image list with two lines of data per image:\n"
      "#   IMAGE_ID, QW, QX, QY, QZ, TX, TY, TZ, CAMERA_ID, NAME\n"
      "#   POINTS2D[] as (X, Y, POINT3D_ID)\n"
      "# Number of images: 3, mean observations per image: 2\n"
      "1 0.70710678118654757 0 0.70710678118654746 0 0.5 -0.25 1.5 1 img_0001.png\n"
      "10.5 20.25 7 11 22 -1\n"
      "2 1 0 0 0 0 0 0 1 img_0002.png\n"
      "\n"
      "3 0.92387953251128674 0.38268343236508978 0 0 -1 2 3 1 img_0003.png\n"
      "1 2 7\n";
  spit(dir.path() / "cameras.txt",
       "# Camera list with one line of data per camera:\n"
       "#   CAMERA_ID, MODEL, WIDTH, HEIGHT, PARAMS[]\n"
       "# Number of cameras: 1\n"
       "1 PINHOLE 640 480 525.5 525.5 320 240\n");
  spit(dir.path() / "images.txt", images);
  std::string points = "# 3D point list\n";
  for (int i = 0; i < 100; ++i) {
    points += std::to_string(i + 1) + " " + std::to_string(i * 0.5) + " 1.25 -2 128 64 32 0.75 1 0\n";
  }
  spit(dir.path() / "points3D.txt", points);

  const SfmModel model = parse_colmap_text(dir.path());
  CHECK(model.frames.size() == 3);
  CHECK(model.points.points.size() == 100);
  CHECK(model.cameras.at(1).fx == 525.5);

  // Hand-checked pose of the first record: 90 degree rotation about y.
  const SfmFrame& frame = model.frames[0];
  CHECK(frame.name == "img_0001.png");
  CHECK(frame.qw == doctest::Approx(0.70710678118654757).epsilon(1e-15));
  CHECK(frame.tvec == Eigen::Vector3d(0.5, -0.25, 1.5));
  REQUIRE(frame.observations.size() == 2);
  CHECK(frame.observations[0].x == 10.5);
  CHECK(frame.observations[0].point3d_id == 7);
  CHECK(frame.observations[1].point3d_id == -1);
  const Eigen::Matrix3d expected_rotation =
      Eigen::Quaterniond(0.70710678118654757, 0, 0.70710678118654746, 0).toRotationMatrix();
  CHECK((frame.pose.rotation() - expected_rotation).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK(model.points.points[10].position.x() == 5.0);
  CHECK(model.points.points[10].track.size() == 1);
}

TEST_CASE("colmap parser rejects malformed input with located errors") {
  TempDir dir("colmap_bad");
  spit(dir.path() / "cameras.txt", "1 PINHOLE 64 64 50 50 32 32\n");
  spit(dir.path() / "images.txt", "1 1 0 0 0 0 0 0 1 a.png\n\n");
  spit(dir.path() / "points3D.txt", "\n");

  SUBCASE("unknown camera model is named") {
    spit(dir.path() / "cameras.txt", "1 OPENCV_FISHEYE 64 64 1 1 1 1 0 0 0 0\n");
    try {
      parse_colmap_text(dir.path());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("OPENCV_FISHEYE") != std::string::npos);
      CHECK(e.line() == 1);
    }
  }

  SUBCASE("malformed float carries file and line") {
    spit(dir.path() / "images.txt", "# header\n1 1 0 0 zero 0 0 0 1 a.png\n\n");
    try {
      parse_colmap_text(dir.path());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.path().find("images.txt") != std::string::npos);
      CHECK(e.line() == 2);
    }
  }

  SUBCASE("dangling camera reference") {
    spit(dir.path() / "images.txt", "1 1 0 0 0 0 0 0 99 a.png\n\n");
    CHECK_THROWS_AS(parse_colmap_text(dir.path()), ParseError);
  }

  SUBCASE("missing 2D point line") {
    spit(dir.path() / "images.txt", "1 1 0 0 0 0 0 0 1 a.png");
    CHECK_THROWS_AS(parse_colmap_text(dir.path()), ParseError);
  }

  SUBCASE("2D point line with a dangling token") {
    spit(dir.path() / "images.txt", "1 1 0 0 0 0 0 0 1 a.png\n1.0 2.0\n");
    CHECK_THROWS_AS(parse_colmap_text(dir.path()), ParseError);
  }

  SUBCASE("non-unit quaternion") {
    spit(dir.path() / "images.txt", "1 2 0 0 0 0 0 0 1 a.png\n\n");
    CHECK_THROWS_AS(parse_colmap_text(dir.path()), ParseError);
  }

  SUBCASE("duplicate image name") {
    spit(dir.path() / "images.txt",
         "1 1 0 0 0 0 0 0 1 a.png\n\n2 1 0 0 0 0 0 0 1 a.png\n\n");
    CHECK_THROWS_AS(parse_colmap_text(dir.path()), ParseError);
  }

  SUBCASE("duplicate point id") {
    spit(dir.path() / "points3D.txt", "1 0 0 0 0 0 0 0\n1 1 1 1 0 0 0 0\n");
    CHECK_THROWS_AS(parse_colmap_text(dir.path()), ParseError);
  }

  SUBCASE("missing file") {
    std::filesystem::remove(dir.path() / "points3D.txt");
    CHECK_THROWS_AS(parse_colmap_text(dir.path()), ParseError);
  }
}

TEST_CASE("pfm single value and byte-exact round trip") {
  TempDir dir("pfm");
  const DepthMap one(1, 1, DepthKind::kRelative, 0, {0.5});
  write_pfm(one, dir.path() / "one.pfm");
  const DepthMap back = read_pfm(dir.path() / "one.pfm", DepthKind::kRelative);
  CHECK(back.width() == 1);
  CHECK(back.height() == 1);
  CHECK(back.at(0, 0) == 0.5);

  const std::string original = slurp(dir.path() / "one.pfm");
  write_pfm(back, dir.path() / "copy.pfm");
  CHECK(slurp(dir.path() / "copy.pfm") == original);
}

TEST_CASE("pfm stores rows bottom-to-top and survives a formula check") {
  TempDir dir("pfm_ramp");
  const int side = 64;
  std::vector<double> ramp(side * side);
  for (int row = 0; row < side; ++row) {
    for (int col = 0; col < side; ++col) {
      ramp[row * side + col] = static_cast<float>((row * side + col) / 8192.0);
    }
  }
  const DepthMap map(side, side, DepthKind::kGroundTruth, 0, ramp);
  write_pfm(map, dir.path() / "ramp.pfm");

  // First payload float in the file is the bottom-left pixel.
  const std::string bytes = slurp(dir.path() / "ramp.pfm");
  const std::size_t header = bytes.find("-1\n") + 3;
  float first;
  std::memcpy(&first, bytes.data() + header, sizeof(float));
  CHECK(first == static_cast<float>(map.at(side - 1, 0)));

  const DepthMap back = read_pfm(dir.path() / "ramp.pfm", DepthKind::kGroundTruth);
  for (int row = 0; row < side; ++row) {
    for (int col = 0; col < side; ++col) {
      CHECK(back.at(row, col) == ramp[row * side + col]);
    }
  }
}

TEST_CASE("pfm reader handles big-endian payloads") {
  TempDir dir("pfm_be");
  std::string file = "Pf\n1 1\n1\n";  // positive scale marks big-endian
  const float value = 0.5f;
  std::uint32_t bits;
  std::memcpy(&bits, &value, 4);
  const char swapped[4] = {static_cast<char>((bits >> 24) & 0xFF),
                           static_cast<char>((bits >> 16) & 0xFF),
                           static_cast<char>((bits >> 8) & 0xFF),
                           static_cast<char>(bits & 0xFF)};
  file.append(swapped, 4);
  spit(dir.path() / "be.pfm", file);
  const DepthMap map = read_pfm(dir.path() / "be.pfm", DepthKind::kRelative);
  CHECK(map.at(0, 0) == 0.5);
}

TEST_CASE("pfm reader rejects bad input") {
  TempDir dir("pfm_bad");

  spit(dir.path() / "color.pfm", "PF\n2 2\n-1\n" + std::string(48, '\0'));
  CHECK_THROWS_AS(read_pfm(dir.path() / "color.pfm", DepthKind::kRelative), ParseError);

  spit(dir.path() / "short.pfm", "Pf\n4 4\n-1\n" + std::string(10, '\0'));
  CHECK_THROWS_AS(read_pfm(dir.path() / "short.pfm", DepthKind::kRelative), ParseError);

  std::string nan_file = "Pf\n1 1\n-1\n";
  const float bad = std::numeric_limits<float>::quiet_NaN();
  nan_file.append(reinterpret_cast<const char*>(&bad), sizeof(float));
  spit(dir.path() / "nan.pfm", nan_file);
  CHECK_THROWS_AS(read_pfm(dir.path() / "nan.pfm", DepthKind::kGroundTruth), ParseError);

  std::string out_of_range = "Pf\n1 1\n-1\n";
  const float too_big = 2.0f;
  out_of_range.append(reinterpret_cast<const char*>(&too_big), sizeof(float));
  spit(dir.path() / "range.pfm", out_of_range);
  CHECK_THROWS_AS(read_pfm(dir.path() / "range.pfm", DepthKind::kRelative), ParseError);
  CHECK_NOTHROW(read_pfm(dir.path() / "range.pfm", DepthKind::kGroundTruth));
}

TEST_CASE("pgm masks round trip and reject unsupported headers") {
  TempDir dir("pgm");

  InstanceMask zeros(6, 4);
  write_pgm_mask(zeros, dir.path() / "zeros.pgm");
  const InstanceMask zeros_back = read_pgm_mask(dir.path() / "zeros.pgm");
  CHECK(std::all_of(zeros_back.values().begin(), zeros_back.values().end(),
                    [](std::uint8_t v) { return v == 0; }));

  InstanceMask checker(8, 8);
  int ones = 0;
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      const std::uint8_t value = static_cast<std::uint8_t>((row + col) % 2);
      checker.set(row, col, value);
      ones += value;
    }
  }
  CHECK(ones == 8 * 8 / 2);
  write_pgm_mask(checker, dir.path() / "checker.pgm");
  const std::string bytes = slurp(dir.path() / "checker.pgm");
  write_pgm_mask(read_pgm_mask(dir.path() / "checker.pgm"), dir.path() / "copy.pgm");
  CHECK(slurp(dir.path() / "copy.pgm") == bytes);

  std::mt19937_64 rng(5);
  InstanceMask random_mask(17, 9);
  for (int row = 0; row < 9; ++row) {
    for (int col = 0; col < 17; ++col) {
      random_mask.set(row, col, static_cast<std::uint8_t>(rng() % 256));
    }
  }
  write_pgm_mask(random_mask, dir.path() / "rand.pgm");
  const InstanceMask random_back = read_pgm_mask(dir.path() / "rand.pgm");
  CHECK(random_back.values() == random_mask.values());

  spit(dir.path() / "wide.pgm", "P5\n2 2\n65535\n" + std::string(8, '\0'));
  CHECK_THROWS_AS(read_pgm_mask(dir.path() / "wide.pgm"), ParseError);
  spit(dir.path() / "ascii.pgm", "P2\n2 2\n255\n0 1 2 3\n");
  CHECK_THROWS_AS(read_pgm_mask(dir.path() / "ascii.pgm"), ParseError);
  spit(dir.path() / "short.pgm", "P5\n4 4\n255\nab");
  CHECK_THROWS_AS(read_pgm_mask(dir.path() / "short.pgm"), ParseError);
  spit(dir.path() / "comment.pgm", "P5\n# a comment\n2 2\n255\nabcd");
  CHECK_NOTHROW(read_pgm_mask(dir.path() / "comment.pgm"));
}

TEST_CASE("tracks jsonl grouping, round trip and error reporting") {
  TempDir dir("tracks");

  spit(dir.path() / "empty.jsonl", "");
  CHECK(read_tracks_jsonl(dir.path() / "empty.jsonl").empty());

  spit(dir.path() / "one.jsonl",
       R"({"instance": 3, "keypoint": 1, "frame": 0, "u": 1.5, "v": 2.25, "visible": true})"
       "\n");
  const auto one = read_tracks_jsonl(dir.path() / "one.jsonl");
  REQUIRE(one.size() == 1);
  CHECK(one[0].instance_id() == 3);
  REQUIRE(one[0].find(0, 1) != nullptr);
  CHECK(one[0].find(0, 1)->u == 1.5);

  // Large generated file: grouping must match an independent map-based count.
  std::mt19937_64 rng(31);
  std::vector<InstanceTracks> generated;
  std::map<int, std::size_t> expected_counts;
  for (int instance = 1; instance <= 5; ++instance) {
    InstanceTracks tracks(instance);
    for (int frame = 0; frame < 40; ++frame) {
      for (int kp = 0; kp < 50; ++kp) {
        tracks.add(TrackPoint{frame, kp, uniform(rng, 0, 100), uniform(rng, 0, 100),
                              (rng() % 4) != 0});
      }
    }
    expected_counts[instance] = tracks.size();
    generated.push_back(std::move(tracks));
  }
  write_tracks_jsonl(generated, dir.path() / "big.jsonl");
  const auto big = read_tracks_jsonl(dir.path() / "big.jsonl");
  REQUIRE(big.size() == 5);
  for (const InstanceTracks& tracks : big) {
    CHECK(tracks.size() == expected_counts[tracks.instance_id()]);
  }
  // Spot check value fidelity through the text round trip.
  const TrackPoint* sample = generated[2].find(7, 11);
  const TrackPoint* sample_back = big[2].find(7, 11);
  REQUIRE(sample_back != nullptr);
  CHECK(sample->u == sample_back->u);
  CHECK(sample->v == sample_back->v);
  CHECK(sample->visible == sample_back->visible);

  spit(dir.path() / "bad.jsonl",
       R"({"instance": 1, "keypoint": 1, "frame": 0, "u": 0, "v": 0, "visible": true})"
       "\nnot json\n");
  try {
    read_tracks_jsonl(dir.path() / "bad.jsonl");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  spit(dir.path() / "dup.jsonl",
       R"({"instance": 1, "keypoint": 1, "frame": 0, "u": 0, "v": 0, "visible": true})"
       "\n"
       R"({"instance": 1, "keypoint": 1, "frame": 0, "u": 5, "v": 5, "visible": true})"
       "\n");
  CHECK_THROWS_AS(read_tracks_jsonl(dir.path() / "dup.jsonl"), ParseError);

  spit(dir.path() / "zero_instance.jsonl",
       R"({"instance": 0, "keypoint": 1, "frame": 0, "u": 0, "v": 0, "visible": true})"
       "\n");
  CHECK_THROWS_AS(read_tracks_jsonl(dir.path() / "zero_instance.jsonl"), ParseError);

  spit(dir.path() / "missing_field.jsonl", R"({"instance": 1, "keypoint": 1, "frame": 0})"
                                           "\n");
  CHECK_THROWS_AS(read_tracks_jsonl(dir.path() / "missing_field.jsonl"), ParseError);
}

TEST_CASE("plucker volume layout and round trip") {
  TempDir dir("plk");

  const Intrinsics one(1.0, 1.0, 0.0, 0.0, 1, 1);
  write_plucker({plucker_map(Pose(), one)}, {"frame_000000.png"}, dir.path() / "one.plk");
  const std::string bytes = slurp(dir.path() / "one.plk");
  CHECK(bytes.size() == 4 + 12 + 24);
  const PluckerFile decoded = read_plucker(dir.path() / "one.plk");
  CHECK(decoded.frame_count == 1);
  CHECK(decoded.height == 1);
  CHECK(decoded.width == 1);
  REQUIRE(decoded.frame_names.size() == 1);
  REQUIRE(decoded.payload.size() == 6);
  CHECK(decoded.payload[0] == 0.0f);
  CHECK(decoded.payload[1] == 0.0f);
  CHECK(decoded.payload[2] == 1.0f);
  CHECK(decoded.payload[3] == 0.0f);
  CHECK(decoded.payload[4] == 0.0f);
  CHECK(decoded.payload[5] == 0.0f);

  std::mt19937_64 rng(17);
  std::vector<PluckerMap> maps;
  std::vector<std::string> names;
  const Intrinsics small(9.0, 8.0, 4.0, 4.0, 8, 8);
  for (int f = 0; f < 3; ++f) {
    maps.push_back(plucker_map(random_pose(rng), small));
    names.push_back("frame_" + std::to_string(f));
  }
  write_plucker(maps, names, dir.path() / "three.plk");
  const PluckerFile three = read_plucker(dir.path() / "three.plk");
  CHECK(three.frame_names == names);
  for (int f = 0; f < 3; ++f) {
    for (std::size_t i = 0; i < maps[f].data().size(); ++i) {
      CHECK(three.payload[f * maps[f].data().size() + i] ==
            static_cast<float>(maps[f].data()[i]));
    }
  }
  write_plucker(three, dir.path() / "three_copy.plk");
  CHECK(slurp(dir.path() / "three_copy.plk") == slurp(dir.path() / "three.plk"));
  CHECK(slurp(dir.path() / "three_copy.json") == slurp(dir.path() / "three.json"));
}

TEST_CASE("plucker volume error handling") {
  TempDir dir("plk_bad");

  spit(dir.path() / "magic.plk", "NOPE\x01\x00\x00\x00");
  CHECK_THROWS_AS(read_plucker(dir.path() / "magic.plk"), ParseError);

  spit(dir.path() / "short.plk", std::string("PLK1") + std::string(6, '\0'));
  CHECK_THROWS_AS(read_plucker(dir.path() / "short.plk"), ParseError);

  std::string truncated = "PLK1";
  const std::uint32_t header[3] = {2, 4, 4};
  truncated.append(reinterpret_cast<const char*>(header), 12);
  truncated.append(16, '\0');
  spit(dir.path() / "trunc.plk", truncated);
  CHECK_THROWS_AS(read_plucker(dir.path() / "trunc.plk"), ParseError);

  const Intrinsics a(1.0, 1.0, 0.0, 0.0, 2, 2);
  const Intrinsics b(1.0, 1.0, 0.0, 0.0, 3, 3);
  CHECK_THROWS_AS(write_plucker({plucker_map(Pose(), a), plucker_map(Pose(), b)},
                                {"x", "y"}, dir.path() / "mismatch.plk"),
                  std::invalid_argument);
}
