// SPDX-License-Identifier: Apache-2.0
//
// Procedural color images used by tests, goldens and the UI gallery. All
// outputs are linear light with alpha 1.

#pragma once

#include "mock3d/image.hpp"

namespace mock3d {

// Two-tone checkerboard with square cells of `cell` texels.
RasterImage gen_checker_image(int width, int height, int cell = 16,
                              Rgba light = {0.9f, 0.9f, 0.85f, 1.0f},
                              Rgba dark = {0.05f, 0.08f, 0.2f, 1.0f});

// Vertical sky-to-ground gradient with a warm sun disc in the upper right,
// so reflections show orientation.
RasterImage gen_sky_image(int width, int height);

}  // namespace mock3d
