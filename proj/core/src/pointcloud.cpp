#include "conda/pointcloud.hpp"

#include <algorithm>
#include <cmath>

#include "conda/concat.hpp"
#include "conda/rng.hpp"

namespace conda {

void PointCloud::validate() const {
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) ||
        !std::isfinite(p.intensity)) {
      throw DataError("point cloud contains non-finite values");
    }
    if (p.intensity < 0.0f || p.intensity > 1.0f) {
      throw DataError("point intensity outside [0, 1]");
    }
  }
  if (labels && labels->size() != points.size()) {
    throw DataError("label count does not match point count");
  }
}

PixelCoord project_point(const Point& p, const SensorGeometry& geo) {
  const double x = p.x, y = p.y, z = p.z;
  const double range = std::sqrt(x * x + y * y + z * z);
  if (range == 0.0) throw DataError("cannot project a point at the sensor origin");

  const double azimuth = std::atan2(y, x);
  const double elevation = std::asin(z / range);

  int u = static_cast<int>(std::floor(0.5 * (1.0 - azimuth / M_PI) * geo.w));
  int v = static_cast<int>(std::floor(
      (1.0 - (elevation - geo.fov_down) / (geo.fov_up - geo.fov_down)) * geo.h));
  u = std::clamp(u, 0, geo.w - 1);
  v = std::clamp(v, 0, geo.h - 1);
  return PixelCoord{v, u};
}

Projection project_to_rv(const PointCloud& cloud, const SensorGeometry& geo) {
  geo.validate();
  cloud.validate();

  Projection out;
  out.image = RangeImage(geo.h, geo.w, geo.fov_up, geo.fov_down);
  if (cloud.has_labels()) out.labels = LabelMap(geo.h, geo.w, kIgnoreLabel);

  RangeImage& ri = out.image;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const Point& p = cloud.points[i];
    const double range =
        std::sqrt(static_cast<double>(p.x) * p.x + static_cast<double>(p.y) * p.y +
                  static_cast<double>(p.z) * p.z);
    const PixelCoord px = project_point(p, geo);

    // Closest point to the sensor wins the pixel; ties keep the first hit.
    if (ri.occupied(px.v, px.u) &&
        static_cast<double>(ri.at(RangeImage::kRange, px.v, px.u)) <= range) {
      continue;
    }
    ri.at(RangeImage::kX, px.v, px.u) = p.x;
    ri.at(RangeImage::kY, px.v, px.u) = p.y;
    ri.at(RangeImage::kZ, px.v, px.u) = p.z;
    ri.at(RangeImage::kIntensity, px.v, px.u) = p.intensity;
    ri.at(RangeImage::kRange, px.v, px.u) = static_cast<float>(range);
    ri.at(RangeImage::kMask, px.v, px.u) = 1.0f;
    ri.pix(px.v, px.u) = static_cast<std::int32_t>(i);
    if (out.labels) out.labels->at(px.v, px.u) = (*cloud.labels)[i];
  }
  return out;
}

std::vector<std::uint16_t> backproject_labels(const LabelMap& lm, const RangeImage& ri,
                                              const PointCloud& cloud) {
  if (lm.h != ri.h || lm.w != ri.w) {
    throw DataError("label map shape does not match range image");
  }
  const auto count = static_cast<std::int32_t>(cloud.size());
  for (std::int32_t idx : ri.point_index) {
    if (idx != kEmptyPixel && (idx < 0 || idx >= count)) {
      throw DataError("range image references points outside the given cloud");
    }
  }

  const SensorGeometry geo = ri.geometry();
  std::vector<std::uint16_t> labels(cloud.size(), kIgnoreLabel);
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const PixelCoord px = project_point(cloud.points[i], geo);
    labels[i] = lm.at(px.v, px.u);
  }
  return labels;
}

void AugmentConfig::validate() const {
  if (yaw_max < 0.0) throw ConfigError("yaw_max must be non-negative");
  if (jitter_sigma < 0.0) throw ConfigError("jitter_sigma must be non-negative");
  if (flip_prob_x < 0.0 || flip_prob_x > 1.0 || flip_prob_y < 0.0 || flip_prob_y > 1.0) {
    throw ConfigError("flip probabilities must lie in [0, 1]");
  }
  if (scale_min <= 0.0 || scale_max <= 0.0) {
    throw ConfigError("scale range must be strictly positive");
  }
  if (scale_max < scale_min) throw ConfigError("scale_max must be >= scale_min");
}

PointCloud augment_cloud(const PointCloud& cloud, std::uint64_t seed, const AugmentConfig& cfg) {
  cfg.validate();
  cloud.validate();

  PointCloud out = cloud;
  Rng rng(seed);

  if (cfg.yaw_max > 0.0) {
    const double yaw = rng.uniform(-cfg.yaw_max, cfg.yaw_max);
    const double c = std::cos(yaw), s = std::sin(yaw);
    for (Point& p : out.points) {
      const double x = p.x, y = p.y;
      p.x = static_cast<float>(x * c - y * s);
      p.y = static_cast<float>(x * s + y * c);
    }
  }
  if (cfg.jitter_sigma > 0.0) {
    for (Point& p : out.points) {
      p.x = static_cast<float>(p.x + rng.gaussian(0.0, cfg.jitter_sigma));
      p.y = static_cast<float>(p.y + rng.gaussian(0.0, cfg.jitter_sigma));
      p.z = static_cast<float>(p.z + rng.gaussian(0.0, cfg.jitter_sigma));
    }
  }
  if (cfg.flip_prob_x > 0.0 && rng.bernoulli(cfg.flip_prob_x)) {
    for (Point& p : out.points) p.x = -p.x;
  }
  if (cfg.flip_prob_y > 0.0 && rng.bernoulli(cfg.flip_prob_y)) {
    for (Point& p : out.points) p.y = -p.y;
  }
  if (cfg.scale_min != 1.0 || cfg.scale_max != 1.0) {
    const double scale = rng.uniform(cfg.scale_min, cfg.scale_max);
    for (Point& p : out.points) {
      p.x = static_cast<float>(p.x * scale);
      p.y = static_cast<float>(p.y * scale);
      p.z = static_cast<float>(p.z * scale);
    }
  }
  return out;
}

OccupancyStats occupancy_stats(const RangeImage& ri, int m, int n, const LabelMap* lm) {
  if (lm && (lm->h != ri.h || lm->w != ri.w)) {
    throw DataError("label map shape does not match range image");
  }
  const auto spans = concat::region_spans(ri.h, ri.w, m, n);

  OccupancyStats stats;
  stats.m = m;
  stats.n = n;
  stats.regions.resize(static_cast<std::size_t>(m) * n);

  std::int64_t empty = 0;
  for (std::size_t r = 0; r < spans.size(); ++r) {
    const auto& span = spans[r];
    RegionHistogram& hist = stats.regions[r];
    for (int v = span.row0; v < span.row1; ++v) {
      for (int u = span.col0; u < span.col1; ++u) {
        ++hist.total_pixels;
        if (!ri.occupied(v, u)) {
          ++hist.empty_pixels;
          ++empty;
          continue;
        }
        if (lm) {
          const std::uint16_t label = lm->at(v, u);
          if (label == kIgnoreLabel) {
            ++hist.ignored_pixels;
          } else {
            ++hist.class_counts[label];
          }
        }
      }
    }
  }
  stats.empty_fraction = static_cast<double>(empty) / static_cast<double>(ri.pixels());
  return stats;
}

}  // namespace conda
