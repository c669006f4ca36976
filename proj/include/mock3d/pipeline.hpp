// SPDX-License-Identifier: Apache-2.0
//
// File-level compositing: 8-bit inputs in, 8-bit sRGB output. The CLI and the
// service both go through here so identical inputs give identical bytes.

#pragma once

#include "mock3d/compositor.hpp"
#include "mock3d/png_io.hpp"

#include <string>

namespace mock3d {

struct PipelineOptions {
  bool shape_srgb = false;  // decode the shape map through the sRGB curve
  bool d_from_z = false;
  int max_dim = 0;          // 0 keeps full resolution
};

ShapeMap shape_from_8bit(const Image8& img, const PipelineOptions& opts);

Image8 composite_8bit(const Image8& shape, const Image8* fg, const Image8& bg,
                      const Image8* env, const CompositeParams& p,
                      const PipelineOptions& opts);

}  // namespace mock3d

namespace mock3d {

struct FixtureSpec {
  std::string kind;  // sphere | rotation | flat | checker | sky
  int size = 256;
  double radius = 0.8;     // sphere only
  double thickness = 1.0;  // sphere only
};

// Shape fixtures are encoded raw; checker and sky are sRGB color images.
// Throws std::invalid_argument for unknown kinds or bad sizes.
Image8 fixture_8bit(const FixtureSpec& spec);

}  // namespace mock3d
