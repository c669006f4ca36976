// SPDX-License-Identifier: Apache-2.0
//
// Single-threaded reference versions of the parallel kernels. Kept for tests
// and the benchmark; not used by the CLI or service.

#pragma once

#include "mock3d/compositor.hpp"
#include "mock3d/image.hpp"

namespace mock3d::serial {

// Same per-pixel kernel as mock3d::composite, plain loop. Results are
// bit-identical to the parallel version.
RasterImage composite(const ShapeMap& sm, const RasterImage* fg,
                      const RasterImage& bg, const RasterImage* env,
                      const CompositeParams& p);

RasterImage classic_blend(BlendOp op, const RasterImage& fg,
                          const RasterImage& bg, double alpha_g);

// Direct (non-separable) 2D convolution with the outer product of the
// binomial taps. O(r^2) per texel; independent of the separable path.
RasterImage blur(const RasterImage& img, int radius, EdgeMode mode);

BlurPyramid build_pyramid(const RasterImage& img, int level_count,
                          EdgeMode mode = EdgeMode::kClamp);

}  // namespace mock3d::serial
