// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mock3d/fixtures.hpp"

namespace mock3d {

RasterImage gen_checker_image(int width, int height, int cell, Rgba light,
                              Rgba dark) {
  if (cell < 1) throw std::invalid_argument("checker cell must be >= 1");
  RasterImage img(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      img.at(x, y) = ((x / cell + y / cell) % 2 == 0) ? light : dark;
  return img;
}

RasterImage gen_sky_image(int width, int height) {
  RasterImage img(width, height);
  const Rgba zenith{0.05f, 0.2f, 0.6f, 1.0f};
  const Rgba horizon{0.7f, 0.8f, 0.9f, 1.0f};
  const Rgba ground{0.12f, 0.09f, 0.05f, 1.0f};
  const double sun_x = 0.75;
  const double sun_y = 0.25;
  const double sun_r = 0.08;
  for (int y = 0; y < height; ++y) {
    const double v = height > 1 ? static_cast<double>(y) / (height - 1) : 0.0;
    for (int x = 0; x < width; ++x) {
      const double u = width > 1 ? static_cast<double>(x) / (width - 1) : 0.0;
      Rgba c;
      if (v < 0.5) {
        const double t = v / 0.5;
        c = {static_cast<float>(zenith.r + t * (horizon.r - zenith.r)),
             static_cast<float>(zenith.g + t * (horizon.g - zenith.g)),
             static_cast<float>(zenith.b + t * (horizon.b - zenith.b)), 1.0f};
      } else {
        const double t = std::min(1.0, (v - 0.5) / 0.1);
        c = {static_cast<float>(horizon.r + t * (ground.r - horizon.r)),
             static_cast<float>(horizon.g + t * (ground.g - horizon.g)),
             static_cast<float>(horizon.b + t * (ground.b - horizon.b)), 1.0f};
      }
      const double dist = std::hypot(u - sun_x, v - sun_y);
      if (dist < sun_r) {
        const double s = 1.0 - dist / sun_r;
        c.r = static_cast<float>(std::min(1.0, c.r + s));
        c.g = static_cast<float>(std::min(1.0, c.g + 0.85 * s));
        c.b = static_cast<float>(std::min(1.0, c.b + 0.5 * s));
      }
      img.at(x, y) = c;
    }
  }
  return img;
}

}  // namespace mock3d
