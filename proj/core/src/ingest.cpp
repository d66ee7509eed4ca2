#include "cammo/ingest.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cammo/errors.hpp"

namespace cammo {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

double parse_double(const std::string& token, const std::string& path, int line) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty() || errno == ERANGE ||
      !std::isfinite(value)) {
    throw ParseError(path, line, "expected a finite number, got '" + token + "'");
  }
  return value;
}

long long parse_int(const std::string& token, const std::string& path, int line) {
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size() || token.empty() || errno == ERANGE) {
    throw ParseError(path, line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::ifstream open_input(const fs::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream file(path, mode);
  if (!file.is_open()) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  return file;
}

std::ofstream open_output(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream file(path, mode | std::ios::trunc);
  if (!file.is_open()) {
    throw std::runtime_error("cannot write file: " + path.string());
  }
  return file;
}

// ---------------------------------------------------------------------------
// COLMAP-style text model

std::map<int, Intrinsics> parse_cameras_txt(const fs::path& path) {
  std::map<int, Intrinsics> cameras;
  std::ifstream file = open_input(path);
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const std::string data = trim(line);
    if (data.empty() || data[0] == '#') continue;
    const std::vector<std::string> tokens = split_tokens(data);
    if (tokens.size() < 4) {
      throw ParseError(path.string(), line_no, "camera record has too few fields");
    }
    const int camera_id = static_cast<int>(parse_int(tokens[0], path.string(), line_no));
    const std::string& model = tokens[1];
    const int width = static_cast<int>(parse_int(tokens[2], path.string(), line_no));
    const int height = static_cast<int>(parse_int(tokens[3], path.string(), line_no));
    std::vector<double> params;
    for (std::size_t i = 4; i < tokens.size(); ++i) {
      params.push_back(parse_double(tokens[i], path.string(), line_no));
    }

    double fx = 0, fy = 0, cx = 0, cy = 0;
    if (model == "PINHOLE") {
      if (params.size() != 4) {
        throw ParseError(path.string(), line_no, "PINHOLE expects 4 params (fx fy cx cy)");
      }
      fx = params[0];
      fy = params[1];
      cx = params[2];
      cy = params[3];
    } else if (model == "SIMPLE_PINHOLE") {
      if (params.size() != 3) {
        throw ParseError(path.string(), line_no, "SIMPLE_PINHOLE expects 3 params (f cx cy)");
      }
      fx = fy = params[0];
      cx = params[1];
      cy = params[2];
    } else {
      throw ParseError(path.string(), line_no, "unsupported camera model '" + model + "'");
    }

    try {
      const auto [it, inserted] = cameras.emplace(camera_id, Intrinsics(fx, fy, cx, cy, width, height));
      (void)it;
      if (!inserted) {
        throw ParseError(path.string(), line_no,
                         "duplicate camera id " + std::to_string(camera_id));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  }
  return cameras;
}

std::vector<SfmFrame> parse_images_txt(const fs::path& path,
                                       const std::map<int, Intrinsics>& cameras) {
  std::vector<SfmFrame> frames;
  std::set<int> seen_ids;
  std::set<std::string> seen_names;
  std::ifstream file = open_input(path);
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const std::string data = trim(line);
    if (data.empty() || data[0] == '#') continue;

    // First line of the record: IMAGE_ID QW QX QY QZ TX TY TZ CAMERA_ID NAME
    std::istringstream stream(data);
    std::string tokens[9];
    for (auto& token : tokens) {
      if (!(stream >> token)) {
        throw ParseError(path.string(), line_no, "image record has too few fields");
      }
    }
    std::string name;
    std::getline(stream, name);
    name = trim(name);
    if (name.empty()) {
      throw ParseError(path.string(), line_no, "image record is missing a name");
    }

    SfmFrame frame;
    frame.image_id = static_cast<int>(parse_int(tokens[0], path.string(), line_no));
    frame.qw = parse_double(tokens[1], path.string(), line_no);
    frame.qx = parse_double(tokens[2], path.string(), line_no);
    frame.qy = parse_double(tokens[3], path.string(), line_no);
    frame.qz = parse_double(tokens[4], path.string(), line_no);
    frame.tvec = Eigen::Vector3d(parse_double(tokens[5], path.string(), line_no),
                                 parse_double(tokens[6], path.string(), line_no),
                                 parse_double(tokens[7], path.string(), line_no));
    frame.camera_id = static_cast<int>(parse_int(tokens[8], path.string(), line_no));
    frame.name = name;

    if (!seen_ids.insert(frame.image_id).second) {
      throw ParseError(path.string(), line_no,
                       "duplicate image id " + std::to_string(frame.image_id));
    }
    if (!seen_names.insert(frame.name).second) {
      throw ParseError(path.string(), line_no, "duplicate image name '" + frame.name + "'");
    }
    if (cameras.find(frame.camera_id) == cameras.end()) {
      throw ParseError(path.string(), line_no,
                       "image " + std::to_string(frame.image_id) +
                           " references missing camera " + std::to_string(frame.camera_id));
    }

    const double norm = std::sqrt(frame.qw * frame.qw + frame.qx * frame.qx +
                                  frame.qy * frame.qy + frame.qz * frame.qz);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6) {
      throw ParseError(path.string(), line_no, "image quaternion is not unit norm");
    }
    if (std::abs(norm - 1.0) > 1e-12) {
      frame.qw /= norm;
      frame.qx /= norm;
      frame.qy /= norm;
      frame.qz /= norm;
    }
    frame.pose = Pose::from_quaternion(frame.qw, frame.qx, frame.qy, frame.qz, frame.tvec);

    // Second line of the record: POINTS2D[] as (X, Y, POINT3D_ID), possibly empty.
    if (!std::getline(file, line)) {
      throw ParseError(path.string(), line_no, "image record is missing its 2D point line");
    }
    ++line_no;
    const std::vector<std::string> obs_tokens = split_tokens(trim(line));
    if (obs_tokens.size() % 3 != 0) {
      throw ParseError(path.string(), line_no, "2D point line is not (X, Y, POINT3D_ID) triplets");
    }
    for (std::size_t i = 0; i < obs_tokens.size(); i += 3) {
      SfmFrame::Observation obs;
      obs.x = parse_double(obs_tokens[i], path.string(), line_no);
      obs.y = parse_double(obs_tokens[i + 1], path.string(), line_no);
      obs.point3d_id = parse_int(obs_tokens[i + 2], path.string(), line_no);
      frame.observations.push_back(obs);
    }

    frames.push_back(std::move(frame));
  }

  std::sort(frames.begin(), frames.end(),
            [](const SfmFrame& a, const SfmFrame& b) { return a.name < b.name; });
  return frames;
}

SparseCloud parse_points3d_txt(const fs::path& path) {
  SparseCloud cloud;
  std::set<std::uint64_t> seen;
  std::ifstream file = open_input(path);
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const std::string data = trim(line);
    if (data.empty() || data[0] == '#') continue;
    const std::vector<std::string> tokens = split_tokens(data);
    if (tokens.size() < 8 || (tokens.size() - 8) % 2 != 0) {
      throw ParseError(path.string(), line_no, "3D point record has a malformed field count");
    }
    SparsePoint point;
    const long long id = parse_int(tokens[0], path.string(), line_no);
    if (id < 0) {
      throw ParseError(path.string(), line_no, "3D point id must be non-negative");
    }
    point.id = static_cast<std::uint64_t>(id);
    point.position = Point3(parse_double(tokens[1], path.string(), line_no),
                            parse_double(tokens[2], path.string(), line_no),
                            parse_double(tokens[3], path.string(), line_no));
    for (int c = 0; c < 3; ++c) {
      const long long channel = parse_int(tokens[4 + c], path.string(), line_no);
      if (channel < 0 || channel > 255) {
        throw ParseError(path.string(), line_no, "color channel out of [0, 255]");
      }
      point.color[c] = static_cast<std::uint8_t>(channel);
    }
    point.error = parse_double(tokens[7], path.string(), line_no);
    for (std::size_t i = 8; i < tokens.size(); i += 2) {
      SparseObservation obs;
      obs.image_id = static_cast<int>(parse_int(tokens[i], path.string(), line_no));
      obs.point2d_idx = static_cast<int>(parse_int(tokens[i + 1], path.string(), line_no));
      point.track.push_back(obs);
    }
    if (!seen.insert(point.id).second) {
      throw ParseError(path.string(), line_no, "duplicate 3D point id " + std::to_string(id));
    }
    cloud.points.push_back(std::move(point));
  }
  return cloud;
}

}  // namespace

SfmModel parse_colmap_text(const fs::path& dir) {
  SfmModel model;
  model.cameras = parse_cameras_txt(dir / "cameras.txt");
  model.frames = parse_images_txt(dir / "images.txt", model.cameras);
  model.points = parse_points3d_txt(dir / "points3D.txt");
  return model;
}

void serialize_colmap_text(const SfmModel& model, const fs::path& dir) {
  fs::create_directories(dir);

  {
    std::ofstream file = open_output(dir / "cameras.txt");
    file << "# Camera list with one line of data per camera:\n";
    file << "#   CAMERA_ID, MODEL, WIDTH, HEIGHT, PARAMS[]\n";
    file << "# Number of cameras: " << model.cameras.size() << "\n";
    for (const auto& [camera_id, intr] : model.cameras) {
      file << camera_id << " PINHOLE " << intr.width << " " << intr.height << " "
           << format_double(intr.fx) << " " << format_double(intr.fy) << " "
           << format_double(intr.cx) << " " << format_double(intr.cy) << "\n";
    }
  }

  {
    std::ofstream file = open_output(dir / "images.txt");
    file << "# Image list with two lines of data per image:\n";
    file << "#   IMAGE_ID, QW, QX, QY, QZ, TX, TY, TZ, CAMERA_ID, NAME\n";
    file << "#   POINTS2D[] as (X, Y, POINT3D_ID)\n";
    file << "# Number of images: " << model.frames.size() << "\n";
    for (const SfmFrame& frame : model.frames) {
      if (frame.name.empty()) {
        throw std::invalid_argument("serialize_colmap_text: image name is empty");
      }
      file << frame.image_id << " " << format_double(frame.qw) << " "
           << format_double(frame.qx) << " " << format_double(frame.qy) << " "
           << format_double(frame.qz) << " " << format_double(frame.tvec.x()) << " "
           << format_double(frame.tvec.y()) << " " << format_double(frame.tvec.z()) << " "
           << frame.camera_id << " " << frame.name << "\n";
      for (std::size_t i = 0; i < frame.observations.size(); ++i) {
        const auto& obs = frame.observations[i];
        file << (i == 0 ? "" : " ") << format_double(obs.x) << " " << format_double(obs.y)
             << " " << obs.point3d_id;
      }
      file << "\n";
    }
  }

  {
    std::ofstream file = open_output(dir / "points3D.txt");
    file << "# 3D point list with one line of data per point:\n";
    file << "#   POINT3D_ID, X, Y, Z, R, G, B, ERROR, TRACK[] as (IMAGE_ID, POINT2D_IDX)\n";
    file << "# Number of points: " << model.points.points.size() << "\n";
    for (const SparsePoint& point : model.points.points) {
      file << point.id << " " << format_double(point.position.x()) << " "
           << format_double(point.position.y()) << " " << format_double(point.position.z())
           << " " << static_cast<int>(point.color[0]) << " " << static_cast<int>(point.color[1])
           << " " << static_cast<int>(point.color[2]) << " " << format_double(point.error);
      for (const SparseObservation& obs : point.track) {
        file << " " << obs.image_id << " " << obs.point2d_idx;
      }
      file << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// PFM depth rasters

namespace {

// Reads one whitespace-delimited header token; PGM-style '#' comments run to
// end of line.
std::string read_header_token(std::istream& in, const std::string& path, bool allow_comments) {
  std::string token;
  int c = in.get();
  while (c != EOF && (std::isspace(c) || (allow_comments && c == '#'))) {
    if (allow_comments && c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  // The final whitespace consumed above is the single separator byte that
  // precedes binary payloads.
  if (token.empty()) {
    throw ParseError(path, 0, "unexpected end of header");
  }
  return token;
}

float byteswap_float(float value) {
  std::uint32_t bits = std::bit_cast<std::uint32_t>(value);
  bits = ((bits & 0x000000FFu) << 24) | ((bits & 0x0000FF00u) << 8) |
         ((bits & 0x00FF0000u) >> 8) | ((bits & 0xFF000000u) >> 24);
  return std::bit_cast<float>(bits);
}

constexpr bool host_is_little_endian() {
  return std::endian::native == std::endian::little;
}

}  // namespace

DepthMap read_pfm(const fs::path& path, DepthKind kind, int frame_id) {
  std::ifstream file = open_input(path, std::ios::binary);
  const std::string spath = path.string();

  const std::string magic = read_header_token(file, spath, false);
  if (magic == "PF") {
    throw ParseError(spath, 0, "color PFM ('PF') is unsupported, expected grayscale 'Pf'");
  }
  if (magic != "Pf") {
    throw ParseError(spath, 0, "not a PFM file (bad magic '" + magic + "')");
  }
  const long long width = parse_int(read_header_token(file, spath, false), spath, 0);
  const long long height = parse_int(read_header_token(file, spath, false), spath, 0);
  if (width < 1 || height < 1 || width > 1 << 20 || height > 1 << 20) {
    throw ParseError(spath, 0, "implausible PFM dimensions");
  }
  const double scale = parse_double(read_header_token(file, spath, false), spath, 0);
  if (scale == 0.0) {
    throw ParseError(spath, 0, "PFM scale must be nonzero");
  }
  const bool file_little_endian = scale < 0.0;

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<float> payload(count);
  file.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(count * sizeof(float)));
  if (static_cast<std::size_t>(file.gcount()) != count * sizeof(float)) {
    throw ParseError(spath, 0, "truncated PFM payload (expected " +
                                   std::to_string(count * sizeof(float)) + " bytes)");
  }

  if (file_little_endian != host_is_little_endian()) {
    for (float& v : payload) v = byteswap_float(v);
  }

  // PFM rows run bottom-to-top on disk; flip into top-to-bottom memory order.
  std::vector<double> values(count);
  for (long long file_row = 0; file_row < height; ++file_row) {
    const long long mem_row = height - 1 - file_row;
    for (long long col = 0; col < width; ++col) {
      const float v = payload[static_cast<std::size_t>(file_row) * width + col];
      if (!std::isfinite(v)) {
        throw ParseError(spath, 0, "non-finite depth sample at payload offset " +
                                       std::to_string(file_row * width + col));
      }
      values[static_cast<std::size_t>(mem_row) * width + col] = static_cast<double>(v);
    }
  }

  try {
    return DepthMap(static_cast<int>(width), static_cast<int>(height), kind, frame_id,
                    std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(spath, 0, e.what());
  }
}

void write_pfm(const DepthMap& map, const fs::path& path) {
  std::ofstream file = open_output(path, std::ios::binary);
  file << "Pf\n" << map.width() << " " << map.height() << "\n-1\n";

  std::vector<float> payload(map.values().size());
  for (int file_row = 0; file_row < map.height(); ++file_row) {
    const int mem_row = map.height() - 1 - file_row;
    for (int col = 0; col < map.width(); ++col) {
      float v = static_cast<float>(map.at(mem_row, col));
      if (!std::isfinite(v)) {
        throw std::invalid_argument("write_pfm: value does not fit in float32");
      }
      if (!host_is_little_endian()) v = byteswap_float(v);
      payload[static_cast<std::size_t>(file_row) * map.width() + col] = v;
    }
  }
  file.write(reinterpret_cast<const char*>(payload.data()),
             static_cast<std::streamsize>(payload.size() * sizeof(float)));
  if (!file) {
    throw std::runtime_error("write_pfm: write failed: " + path.string());
  }
}

// ---------------------------------------------------------------------------
// PGM instance masks

InstanceMask read_pgm_mask(const fs::path& path) {
  std::ifstream file = open_input(path, std::ios::binary);
  const std::string spath = path.string();

  const std::string magic = read_header_token(file, spath, true);
  if (magic != "P5") {
    throw ParseError(spath, 0, "not a binary PGM ('P5') file, got '" + magic + "'");
  }
  const long long width = parse_int(read_header_token(file, spath, true), spath, 0);
  const long long height = parse_int(read_header_token(file, spath, true), spath, 0);
  const long long maxval = parse_int(read_header_token(file, spath, true), spath, 0);
  if (width < 1 || height < 1 || width > 1 << 20 || height > 1 << 20) {
    throw ParseError(spath, 0, "implausible PGM dimensions");
  }
  if (maxval < 1 || maxval > 255) {
    throw ParseError(spath, 0, "unsupported PGM maxval " + std::to_string(maxval) +
                                   " (instance ids are bytes)");
  }

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> values(count);
  file.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(file.gcount()) != count) {
    throw ParseError(spath, 0, "truncated PGM payload (expected " + std::to_string(count) +
                                   " bytes)");
  }
  return InstanceMask(static_cast<int>(width), static_cast<int>(height), std::move(values));
}

void write_pgm_mask(const InstanceMask& mask, const fs::path& path) {
  std::ofstream file = open_output(path, std::ios::binary);
  file << "P5\n" << mask.width() << " " << mask.height() << "\n255\n";
  file.write(reinterpret_cast<const char*>(mask.values().data()),
             static_cast<std::streamsize>(mask.values().size()));
  if (!file) {
    throw std::runtime_error("write_pgm_mask: write failed: " + path.string());
  }
}

// ---------------------------------------------------------------------------
// JSONL keypoint tracks

std::vector<InstanceTracks> read_tracks_jsonl(const fs::path& path) {
  std::ifstream file = open_input(path);
  const std::string spath = path.string();

  std::map<int, InstanceTracks> by_instance;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(spath, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object() || !record.contains("instance") || !record.contains("keypoint") ||
        !record.contains("frame") || !record.contains("u") || !record.contains("v") ||
        !record.contains("visible") || !record["instance"].is_number_integer() ||
        !record["keypoint"].is_number_integer() || !record["frame"].is_number_integer() ||
        !record["u"].is_number() || !record["v"].is_number() || !record["visible"].is_boolean()) {
      throw ParseError(spath, line_no,
                       "track record must be {instance:int, keypoint:int, frame:int, "
                       "u:number, v:number, visible:bool}");
    }
    const int instance = record["instance"].get<int>();
    if (instance < 1) {
      throw ParseError(spath, line_no, "instance id must be >= 1");
    }
    TrackPoint point;
    point.frame = record["frame"].get<int>();
    point.keypoint_id = record["keypoint"].get<int>();
    point.u = record["u"].get<double>();
    point.v = record["v"].get<double>();
    point.visible = record["visible"].get<bool>();
    if (!std::isfinite(point.u) || !std::isfinite(point.v)) {
      throw ParseError(spath, line_no, "track coordinates must be finite");
    }

    auto it = by_instance.find(instance);
    if (it == by_instance.end()) {
      it = by_instance.emplace(instance, InstanceTracks(instance)).first;
    }
    try {
      it->second.add(point);
    } catch (const std::invalid_argument& e) {
      throw ParseError(spath, line_no, e.what());
    }
  }

  std::vector<InstanceTracks> tracks;
  tracks.reserve(by_instance.size());
  for (auto& [instance, instance_tracks] : by_instance) {
    (void)instance;
    tracks.push_back(std::move(instance_tracks));
  }
  return tracks;
}

void write_tracks_jsonl(const std::vector<InstanceTracks>& tracks, const fs::path& path) {
  std::ofstream file = open_output(path);
  for (const InstanceTracks& instance_tracks : tracks) {
    for (const auto& [frame, points] : instance_tracks.frames()) {
      (void)frame;
      for (const auto& [keypoint_id, point] : points) {
        (void)keypoint_id;
        ordered_json record;
        record["instance"] = instance_tracks.instance_id();
        record["keypoint"] = point.keypoint_id;
        record["frame"] = point.frame;
        record["u"] = point.u;
        record["v"] = point.v;
        record["visible"] = point.visible;
        file << record.dump() << "\n";
      }
    }
  }
  if (!file) {
    throw std::runtime_error("write_tracks_jsonl: write failed: " + path.string());
  }
}

// ---------------------------------------------------------------------------
// PLK1 Plücker volumes

namespace {

constexpr char kPluckerMagic[4] = {'P', 'L', 'K', '1'};

void write_u32_le(std::ostream& out, std::uint32_t value) {
  const char bytes[4] = {static_cast<char>(value & 0xFF), static_cast<char>((value >> 8) & 0xFF),
                         static_cast<char>((value >> 16) & 0xFF),
                         static_cast<char>((value >> 24) & 0xFF)};
  out.write(bytes, 4);
}

std::uint32_t read_u32_le(std::istream& in, const std::string& path) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (in.gcount() != 4) {
    throw ParseError(path, 0, "truncated PLK1 header");
  }
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

fs::path sidecar_path(const fs::path& path) {
  fs::path sidecar = path;
  sidecar.replace_extension(".json");
  return sidecar;
}

}  // namespace

void write_plucker(const PluckerFile& file, const fs::path& path) {
  const std::size_t expected = static_cast<std::size_t>(file.frame_count) * file.height *
                               file.width * 6;
  if (file.payload.size() != expected) {
    throw std::invalid_argument("write_plucker: payload size does not match header");
  }
  if (file.frame_names.size() != file.frame_count) {
    throw std::invalid_argument("write_plucker: one frame name required per frame");
  }

  std::ofstream out = open_output(path, std::ios::binary);
  out.write(kPluckerMagic, 4);
  write_u32_le(out, file.frame_count);
  write_u32_le(out, file.height);
  write_u32_le(out, file.width);
  if (host_is_little_endian()) {
    out.write(reinterpret_cast<const char*>(file.payload.data()),
              static_cast<std::streamsize>(file.payload.size() * sizeof(float)));
  } else {
    for (float v : file.payload) {
      const std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
      write_u32_le(out, bits);
    }
  }
  if (!out) {
    throw std::runtime_error("write_plucker: write failed: " + path.string());
  }

  ordered_json sidecar;
  sidecar["frames"] = file.frame_names;
  std::ofstream side = open_output(sidecar_path(path));
  side << sidecar.dump(2) << "\n";
}

void write_plucker(const std::vector<PluckerMap>& maps,
                   const std::vector<std::string>& frame_names, const fs::path& path) {
  if (maps.empty()) {
    throw std::invalid_argument("write_plucker: no frames");
  }
  if (frame_names.size() != maps.size()) {
    throw std::invalid_argument("write_plucker: one frame name required per frame");
  }
  const int width = maps.front().width();
  const int height = maps.front().height();
  PluckerFile file;
  file.frame_count = static_cast<std::uint32_t>(maps.size());
  file.height = static_cast<std::uint32_t>(height);
  file.width = static_cast<std::uint32_t>(width);
  file.frame_names = frame_names;
  file.payload.reserve(maps.size() * maps.front().data().size());
  for (const PluckerMap& map : maps) {
    if (map.width() != width || map.height() != height) {
      throw std::invalid_argument("write_plucker: frame dimension mismatch");
    }
    for (const double v : map.data()) {
      file.payload.push_back(static_cast<float>(v));
    }
  }
  write_plucker(file, path);
}

PluckerFile read_plucker(const fs::path& path) {
  std::ifstream in = open_input(path, std::ios::binary);
  const std::string spath = path.string();

  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::memcmp(magic, kPluckerMagic, 4) != 0) {
    throw ParseError(spath, 0, "not a PLK1 file (bad magic)");
  }
  PluckerFile file;
  file.frame_count = read_u32_le(in, spath);
  file.height = read_u32_le(in, spath);
  file.width = read_u32_le(in, spath);
  if (file.height < 1 || file.width < 1 || file.height > (1u << 20) || file.width > (1u << 20) ||
      file.frame_count > (1u << 20)) {
    throw ParseError(spath, 0, "implausible PLK1 dimensions");
  }

  const std::size_t count =
      static_cast<std::size_t>(file.frame_count) * file.height * file.width * 6;
  file.payload.resize(count);
  in.read(reinterpret_cast<char*>(file.payload.data()),
          static_cast<std::streamsize>(count * sizeof(float)));
  if (static_cast<std::size_t>(in.gcount()) != count * sizeof(float)) {
    throw ParseError(spath, 0, "truncated PLK1 payload (expected " +
                                   std::to_string(count * sizeof(float)) + " bytes)");
  }
  if (!host_is_little_endian()) {
    for (float& v : file.payload) v = byteswap_float(v);
  }

  const fs::path side = sidecar_path(path);
  if (fs::exists(side)) {
    std::ifstream side_in = open_input(side);
    json sidecar;
    try {
      sidecar = json::parse(side_in);
    } catch (const json::exception& e) {
      throw ParseError(side.string(), 0, std::string("invalid sidecar JSON: ") + e.what());
    }
    if (!sidecar.is_object() || !sidecar.contains("frames") || !sidecar["frames"].is_array()) {
      throw ParseError(side.string(), 0, "sidecar must be {\"frames\": [names...]}");
    }
    for (const auto& name : sidecar["frames"]) {
      if (!name.is_string()) {
        throw ParseError(side.string(), 0, "sidecar frame names must be strings");
      }
      file.frame_names.push_back(name.get<std::string>());
    }
    if (file.frame_names.size() != file.frame_count) {
      throw ParseError(side.string(), 0, "sidecar frame count does not match the volume");
    }
  }
  return file;
}

}  // namespace cammo
