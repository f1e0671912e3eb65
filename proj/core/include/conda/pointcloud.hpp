#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "conda/types.hpp"

namespace conda {

struct PixelCoord {
  int v = 0;
  int u = 0;
};

// The fixed cylindrical mapping:
//   u = floor((0.5 * (1 - atan2(y, x)/pi)) * w), clamped to [0, w-1]
//   v = floor((1 - (asin(z/range) - fov_down)/(fov_up - fov_down)) * h),
//       clamped to [0, h-1]
// Out-of-FOV points land on the boundary rows instead of being dropped, so
// every point keeps a pixel for back-projection. A point at the origin has
// no direction and is rejected.
PixelCoord project_point(const Point& p, const SensorGeometry& geo);

struct Projection {
  RangeImage image;
  std::optional<LabelMap> labels;
};

// Projects a cloud onto the range view. On pixel collisions the point
// closest to the sensor wins; ties keep the earliest point. Labels, when
// present, follow the same winner. An empty cloud yields an all-zero mask.
Projection project_to_rv(const PointCloud& cloud, const SensorGeometry& geo);

// Reads back one label per point through the pixel its own projection lands
// in (recomputed with the image's stored geometry), so points that lost a
// collision still receive the winning pixel's label.
std::vector<std::uint16_t> backproject_labels(const LabelMap& lm, const RangeImage& ri,
                                              const PointCloud& cloud);

struct AugmentConfig {
  double yaw_max = 0.0;       // radians; rotation drawn uniformly in [-yaw_max, yaw_max]
  double jitter_sigma = 0.0;  // meters; per-axis gaussian noise
  double flip_prob_x = 0.0;   // probability of mirroring across the yz plane
  double flip_prob_y = 0.0;   // probability of mirroring across the xz plane
  double scale_min = 1.0;     // uniform scale range; must be positive
  double scale_max = 1.0;

  void validate() const;
};

// Applies yaw -> jitter -> flip -> scale, in that order, deterministically
// for a given (seed, config). Labels and intensities are carried unchanged.
PointCloud augment_cloud(const PointCloud& cloud, std::uint64_t seed, const AugmentConfig& cfg);

struct RegionHistogram {
  std::int64_t total_pixels = 0;
  std::int64_t empty_pixels = 0;
  std::int64_t ignored_pixels = 0;  // occupied but labeled kIgnoreLabel
  std::map<std::uint16_t, std::int64_t> class_counts;
};

struct OccupancyStats {
  double empty_fraction = 0.0;
  int m = 1;
  int n = 1;
  std::vector<RegionHistogram> regions;  // m*n, row-major over (near-far, bearing) bands

  const RegionHistogram& region(int i, int j) const { return regions[static_cast<std::size_t>(i) * n + j]; }
};

// Empty-cell fraction plus per-region label histograms over an (m, n)
// region grid. Class counts are filled only when a label map is supplied.
OccupancyStats occupancy_stats(const RangeImage& ri, int m, int n, const LabelMap* lm = nullptr);

}  // namespace conda
