// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mock3d/image.hpp"

namespace mock3d {

RasterImage::RasterImage(int width, int height, Rgba fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("image dimensions must be at least 1x1");
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

namespace {

int wrap_index(long i, int n) {
  long m = i % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

Rgba lerp4(const Rgba& t00, const Rgba& t10, const Rgba& t01, const Rgba& t11,
           double fx, double fy) {
  const double w00 = (1.0 - fx) * (1.0 - fy);
  const double w10 = fx * (1.0 - fy);
  const double w01 = (1.0 - fx) * fy;
  const double w11 = fx * fy;
  auto mix = [&](float Rgba::*c) {
    return static_cast<float>(w00 * (t00.*c) + w10 * (t10.*c) +
                              w01 * (t01.*c) + w11 * (t11.*c));
  };
  return {mix(&Rgba::r), mix(&Rgba::g), mix(&Rgba::b), mix(&Rgba::a)};
}

}  // namespace

Rgba sample_texel_space(const RasterImage& img, double px, double py,
                        EdgeMode mode) {
  const int w = img.width();
  const int h = img.height();
  if (mode == EdgeMode::kClamp) {
    px = std::clamp(px, 0.0, static_cast<double>(w - 1));
    py = std::clamp(py, 0.0, static_cast<double>(h - 1));
  }
  const double fx0 = std::floor(px);
  const double fy0 = std::floor(py);
  const double fx = px - fx0;
  const double fy = py - fy0;
  const long ix = static_cast<long>(fx0);
  const long iy = static_cast<long>(fy0);

  int x0, x1, y0, y1;
  if (mode == EdgeMode::kClamp) {
    x0 = static_cast<int>(ix);
    y0 = static_cast<int>(iy);
    x1 = std::min(x0 + 1, w - 1);
    y1 = std::min(y0 + 1, h - 1);
  } else {
    x0 = wrap_index(ix, w);
    y0 = wrap_index(iy, h);
    x1 = wrap_index(ix + 1, w);
    y1 = wrap_index(iy + 1, h);
  }
  if (fx == 0.0 && fy == 0.0) return img.at(x0, y0);
  return lerp4(img.at(x0, y0), img.at(x1, y0), img.at(x0, y1), img.at(x1, y1),
               fx, fy);
}

Rgba sample_bilinear(const RasterImage& img, double u, double v,
                     EdgeMode mode) {
  return sample_texel_space(img, u * (img.width() - 1), v * (img.height() - 1),
                            mode);
}

RasterImage downscale_to_fit(const RasterImage& img, int max_dim) {
  const int w = img.width();
  const int h = img.height();
  if (max_dim <= 0 || std::max(w, h) <= max_dim) return img;

  const double scale = static_cast<double>(max_dim) / std::max(w, h);
  const int ow = std::max(1, static_cast<int>(std::lround(w * scale)));
  const int oh = std::max(1, static_cast<int>(std::lround(h * scale)));
  RasterImage out(ow, oh);
  const double sx = static_cast<double>(w) / ow;
  const double sy = static_cast<double>(h) / oh;

#pragma omp parallel for schedule(static)
  for (int oy = 0; oy < oh; ++oy) {
    const double y0 = oy * sy;
    const double y1 = y0 + sy;
    for (int ox = 0; ox < ow; ++ox) {
      const double x0 = ox * sx;
      const double x1 = x0 + sx;
      double acc[4] = {0, 0, 0, 0};
      double area = 0.0;
      for (int y = static_cast<int>(y0); y < std::min(h, static_cast<int>(std::ceil(y1))); ++y) {
        const double cy = std::min<double>(y + 1, y1) - std::max<double>(y, y0);
        for (int x = static_cast<int>(x0); x < std::min(w, static_cast<int>(std::ceil(x1))); ++x) {
          const double cx = std::min<double>(x + 1, x1) - std::max<double>(x, x0);
          const double wgt = cx * cy;
          const Rgba& p = img.at(x, y);
          acc[0] += wgt * p.r;
          acc[1] += wgt * p.g;
          acc[2] += wgt * p.b;
          acc[3] += wgt * p.a;
          area += wgt;
        }
      }
      out.at(ox, oy) = {static_cast<float>(acc[0] / area),
                        static_cast<float>(acc[1] / area),
                        static_cast<float>(acc[2] / area),
                        static_cast<float>(acc[3] / area)};
    }
  }
  return out;
}

}  // namespace mock3d
