// SPDX-License-Identifier: Apache-2.0
//
// Per-pixel kernels shared by the OpenMP drivers and the serial reference.

#pragma once

#include "mock3d/compositor.hpp"

namespace mock3d::detail {

struct SceneView {
  const BlurPyramid& bg;
  const BlurPyramid& env;
  EdgeMode env_mode = EdgeMode::kClamp;
  double gloss_level = 0.0;
};

struct Scene {
  BlurPyramid bg;
  BlurPyramid env;
  EdgeMode env_mode = EdgeMode::kClamp;
  double gloss_level = 0.0;

  SceneView view() const { return {bg, env, env_mode, gloss_level}; }
};

void check_composite_inputs(const ShapeMap& sm, const RasterImage* fg,
                            const RasterImage& bg);

// Builds only the pyramid levels the parameters can reach.
Scene prepare_scene(const ShapeMap& sm, const RasterImage& bg,
                    const RasterImage* env, const CompositeParams& p);

// (px, py) are texel coordinates in the background, which shares the shape
// map's grid.
Rgba shade(const ShapeTexel& texel, const Rgba& fi, double px, double py,
           const SceneView& scene, const CompositeParams& p);

Rgba blend_pixel(BlendOp op, const Rgba& fg, const Rgba& bg, double alpha_g);

Rgba over_pixel(const Rgba& top, const Rgba& bottom);

}  // namespace mock3d::detail
