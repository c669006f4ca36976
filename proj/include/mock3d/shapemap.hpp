// SPDX-License-Identifier: Apache-2.0
//
// Shape maps: a per-texel 2D vector field (x, y) plus an independent
// thickness d. d == 0 marks texels where the object is absent.

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "mock3d/image.hpp"

namespace mock3d {

struct ShapeTexel {
  double x = 0.0;  // [-1, 1]
  double y = 0.0;  // [-1, 1]
  double d = 0.0;  // [0, 1]

  friend bool operator==(const ShapeTexel&, const ShapeTexel&) = default;
};

class ShapeMap {
 public:
  ShapeMap() = default;
  ShapeMap(int width, int height, ShapeTexel fill = {});

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return texels_.size(); }

  const ShapeTexel& at(int x, int y) const { return texels_[index(x, y)]; }
  ShapeTexel& at(int x, int y) { return texels_[index(x, y)]; }
  std::span<const ShapeTexel> texels() const { return texels_; }
  std::span<ShapeTexel> texels() { return texels_; }

  friend bool operator==(const ShapeMap&, const ShapeMap&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<ShapeTexel> texels_;
};

// Uniform flattening factor applied to (x, y) before recovering z.
class WScale {
 public:
  static constexpr double kDefault = 0.5;

  constexpr WScale() = default;
  explicit WScale(double w) : value_(w) {
    if (!(w > 0.0 && w <= 1.0))
      throw std::invalid_argument("w must be in (0, 1]");
  }
  constexpr double value() const { return value_; }

 private:
  double value_ = kDefault;
};

struct ShapeDecodeOptions {
  // Replace d with the unit-normal z recovered from (x, y), masked by the
  // source alpha. For plain normal maps that carry no thickness.
  bool d_from_z = false;
};

// x = 2r - 1, y = 2g - 1, d = b. Inputs are raw channel values (no transfer
// function) and are clamped into range.
ShapeMap decode_shape_map(const RasterImage& raw,
                          const ShapeDecodeOptions& opts = {});
// r = (x + 1)/2, g = (y + 1)/2, b = d, alpha = 1.
RasterImage encode_shape_map(const ShapeMap& sm);

// sqrt(max(0, 1 - w^2 x^2 - w^2 y^2)); always in [0, 1].
double normal_z(double x, double y, WScale w);
// 1 - normal_z: 0 head-on, 1 at grazing.
double incident_t(double x, double y, WScale w);

struct ScalarField {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  double max_abs() const;
};

// Central-difference dy/du - dx/dv in normalized map units (u, v in [0,1]).
// Evaluated only where the texel and its four neighbours are inside the
// object mask; all other texels (and the border) read 0. Requires a map of
// at least 2x2.
ScalarField curl_diagnostic(const ShapeMap& sm);

struct ChannelStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct ShapeStats {
  int width = 0;
  int height = 0;
  ChannelStats x, y, d;
  double coverage = 0.0;  // fraction of texels with d != 0
  double max_abs_curl = 0.0;
};

ShapeStats inspect_shape_map(const ShapeMap& sm);

// Orthographic sphere of radius `radius` * size/2 centred in the map.
// Inside: (x, y) = normal (image axes, y down), d = nz * thickness_scale.
// Outside: all zero.
ShapeMap gen_sphere_map(int size, double radius = 1.0,
                        double thickness_scale = 1.0);
// x = 2(v - 0.5), y = -2(u - 0.5), d = 1.
ShapeMap gen_rotation_map(int size);
ShapeMap gen_flat_map(int width, int height, double d = 0.0);

}  // namespace mock3d
