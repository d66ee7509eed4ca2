#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "cammo/depth.hpp"
#include "cammo/geometry.hpp"
#include "cammo/mask.hpp"
#include "cammo/motion.hpp"
#include "cammo/sparse_cloud.hpp"

namespace cammo {

/// One registered image of an SfM model. The pose is derived from the
/// stored quaternion; the quaternion itself is kept so text round trips
/// are field-exact.
struct SfmFrame {
  int image_id = 0;
  std::string name;
  int camera_id = 0;
  double qw = 1.0, qx = 0.0, qy = 0.0, qz = 0.0;
  Eigen::Vector3d tvec = Eigen::Vector3d::Zero();
  Pose pose;

  struct Observation {
    double x = 0.0;
    double y = 0.0;
    long long point3d_id = -1;  // -1 when untriangulated
  };
  std::vector<Observation> observations;
};

/// Parsed sparse reconstruction. Frames are ordered by ascending image
/// name (video frame order), regardless of record order on disk.
struct SfmModel {
  std::map<int, Intrinsics> cameras;
  std::vector<SfmFrame> frames;
  SparseCloud points;
};

/// Reads cameras.txt / images.txt / points3D.txt from dir. Supported camera
/// models: PINHOLE (fx fy cx cy) and SIMPLE_PINHOLE (f cx cy, expanded to
/// fx = fy = f). Throws ParseError with file and line on malformed input,
/// unknown camera models, and dangling camera references.
SfmModel parse_colmap_text(const std::filesystem::path& dir);

/// Writes the three text files into dir (created if needed). Floating point
/// fields are printed with 17 significant digits, so parse/serialize/parse
/// is field-exact. Cameras are always written as PINHOLE.
void serialize_colmap_text(const SfmModel& model, const std::filesystem::path& dir);

/// Grayscale PFM ("Pf") reader. The file stores rows bottom-to-top; the
/// returned raster is top-to-bottom. Color ("PF") headers, truncated
/// payloads, and non-finite samples are rejected with ParseError.
DepthMap read_pfm(const std::filesystem::path& path, DepthKind kind, int frame_id = 0);

/// Writes a canonical little-endian PFM (scale line "-1"). Round trips
/// through read_pfm are byte-exact for files this writer produced.
void write_pfm(const DepthMap& map, const std::filesystem::path& path);

/// Binary PGM ("P5") instance mask, maxval <= 255.
InstanceMask read_pgm_mask(const std::filesystem::path& path);
void write_pgm_mask(const InstanceMask& mask, const std::filesystem::path& path);

/// JSONL keypoint tracks, one record per line:
///   {"instance": int, "keypoint": int, "frame": int,
///    "u": float, "v": float, "visible": bool}
/// Returned grouped by instance, ascending instance id. Malformed lines and
/// duplicate (instance, frame, keypoint) triples raise ParseError with the
/// line number.
std::vector<InstanceTracks> read_tracks_jsonl(const std::filesystem::path& path);
void write_tracks_jsonl(const std::vector<InstanceTracks>& tracks,
                        const std::filesystem::path& path);

/// Decoded Plücker ray volume: magic "PLK1", little-endian u32 frame count,
/// height and width, then frame-major, row-major, channel-last float32
/// payload. Frame names live in a JSON sidecar next to the file.
struct PluckerFile {
  std::uint32_t frame_count = 0;
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::vector<std::string> frame_names;
  std::vector<float> payload;
};

/// Writes maps (all of one shape) as a PLK1 file plus a "<stem>.json"
/// sidecar listing frame names. Throws std::invalid_argument on dimension
/// mismatches between frames.
void write_plucker(const std::vector<PluckerMap>& maps,
                   const std::vector<std::string>& frame_names,
                   const std::filesystem::path& path);

/// Bit-exact rewrite of an already-decoded volume.
void write_plucker(const PluckerFile& file, const std::filesystem::path& path);

PluckerFile read_plucker(const std::filesystem::path& path);

}  // namespace cammo
