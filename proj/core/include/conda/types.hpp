#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conda/errors.hpp"

namespace conda {

// Reserved label sentinel: excluded from losses and metrics. Matches the
// 0xFFFF encoding of the PCRV point-cloud file format.
inline constexpr std::uint16_t kIgnoreLabel = 0xFFFF;

// point_index entry for unoccupied range-view cells.
inline constexpr std::int32_t kEmptyPixel = -1;

struct Point {
  float x = 0.0f;
  float y = 0.0f;
  float z = 0.0f;
  float intensity = 0.0f;
};

// Raw domain sample: a LiDAR sweep with optional per-point class labels.
struct PointCloud {
  std::vector<Point> points;
  std::optional<std::vector<std::uint16_t>> labels;

  std::size_t size() const { return points.size(); }
  bool has_labels() const { return labels.has_value(); }

  // Finite coordinates, intensity in [0,1], label length equals point count.
  void validate() const;
};

// Cylindrical projection geometry shared by projection and back-projection.
struct SensorGeometry {
  int h = 32;
  int w = 256;
  double fov_up = 0.1834;    // radians
  double fov_down = -0.4363; // radians

  void validate() const {
    if (h < 1 || w < 1) throw ConfigError("range image dimensions must be >= 1");
    if (!(fov_up > fov_down)) throw ConfigError("fov_up must exceed fov_down");
  }
};

// 6-channel range-view image. Channel order: x, y, z, intensity, range,
// mask. Unoccupied pixels are zero in every channel and kEmptyPixel in
// point_index. The projection parameters ride along so points can be
// re-mapped to pixels later.
struct RangeImage {
  enum Channel : int { kX = 0, kY, kZ, kIntensity, kRange, kMask };
  static constexpr int kChannels = 6;

  int h = 0;
  int w = 0;
  double fov_up = 0.0;
  double fov_down = 0.0;
  std::vector<float> data;               // kChannels * h * w, channel-major
  std::vector<std::int32_t> point_index; // h * w

  RangeImage() = default;
  RangeImage(int h_, int w_, double fu, double fd)
      : h(h_), w(w_), fov_up(fu), fov_down(fd),
        data(static_cast<std::size_t>(kChannels) * h_ * w_, 0.0f),
        point_index(static_cast<std::size_t>(h_) * w_, kEmptyPixel) {}

  float& at(int c, int v, int u) { return data[(static_cast<std::size_t>(c) * h + v) * w + u]; }
  float at(int c, int v, int u) const { return data[(static_cast<std::size_t>(c) * h + v) * w + u]; }
  std::int32_t& pix(int v, int u) { return point_index[static_cast<std::size_t>(v) * w + u]; }
  std::int32_t pix(int v, int u) const { return point_index[static_cast<std::size_t>(v) * w + u]; }
  bool occupied(int v, int u) const { return at(kMask, v, u) != 0.0f; }
  std::int64_t pixels() const { return static_cast<std::int64_t>(h) * w; }

  SensorGeometry geometry() const { return SensorGeometry{h, w, fov_up, fov_down}; }
};

// h x w grid of class ids in [0, C) plus the kIgnoreLabel sentinel.
struct LabelMap {
  int h = 0;
  int w = 0;
  std::vector<std::uint16_t> grid;

  LabelMap() = default;
  LabelMap(int h_, int w_, std::uint16_t fill = kIgnoreLabel)
      : h(h_), w(w_), grid(static_cast<std::size_t>(h_) * w_, fill) {}

  std::uint16_t& at(int v, int u) { return grid[static_cast<std::size_t>(v) * w + u]; }
  std::uint16_t at(int v, int u) const { return grid[static_cast<std::size_t>(v) * w + u]; }
  std::int64_t pixels() const { return static_cast<std::int64_t>(h) * w; }
};

}  // namespace conda
