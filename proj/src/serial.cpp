// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include "composite_kernel.hpp"
#include "mock3d/serial.hpp"

namespace mock3d::serial {

RasterImage composite(const ShapeMap& sm, const RasterImage* fg,
                      const RasterImage& bg, const RasterImage* env,
                      const CompositeParams& p) {
  validate_params(p);
  detail::check_composite_inputs(sm, fg, bg);
  if (p.blend_op != BlendOp::kShape) {
    const RasterImage clear(bg.width(), bg.height());
    return serial::classic_blend(p.blend_op, fg ? *fg : clear, bg, p.alpha_g);
  }
  const detail::Scene owned = detail::prepare_scene(sm, bg, env, p);
  const detail::SceneView scene = owned.view();
  RasterImage out(sm.width(), sm.height());
  for (int y = 0; y < sm.height(); ++y)
    for (int x = 0; x < sm.width(); ++x)
      out.at(x, y) = detail::shade(sm.at(x, y), fg ? fg->at(x, y) : Rgba{}, x,
                                   y, scene, p);
  return out;
}

RasterImage classic_blend(BlendOp op, const RasterImage& fg,
                          const RasterImage& bg, double alpha_g) {
  if (fg.width() != bg.width() || fg.height() != bg.height())
    throw std::invalid_argument("blend inputs must have equal dimensions");
  RasterImage out(bg.width(), bg.height());
  for (int y = 0; y < bg.height(); ++y)
    for (int x = 0; x < bg.width(); ++x)
      out.at(x, y) = detail::blend_pixel(op, fg.at(x, y), bg.at(x, y), alpha_g);
  return out;
}

namespace {

int mirror_or_wrap(long i, int n, EdgeMode mode) {
  const long period = mode == EdgeMode::kWrap ? n : 2L * n;
  long m = i % period;
  if (m < 0) m += period;
  if (mode == EdgeMode::kWrap || m < n) return static_cast<int>(m);
  return static_cast<int>(period - 1 - m);
}

}  // namespace

RasterImage blur(const RasterImage& img, int radius, EdgeMode mode) {
  if (radius == 0) return img;
  const std::vector<double> taps = blur_kernel(radius);
  RasterImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      double acc[4] = {0, 0, 0, 0};
      for (int j = -radius; j <= radius; ++j) {
        const int sy = mirror_or_wrap(y + j, img.height(), mode);
        for (int i = -radius; i <= radius; ++i) {
          const double t = taps[i + radius] * taps[j + radius];
          const Rgba& p = img.at(mirror_or_wrap(x + i, img.width(), mode), sy);
          acc[0] += t * p.r;
          acc[1] += t * p.g;
          acc[2] += t * p.b;
          acc[3] += t * p.a;
        }
      }
      out.at(x, y) = {static_cast<float>(acc[0]), static_cast<float>(acc[1]),
                      static_cast<float>(acc[2]), static_cast<float>(acc[3])};
    }
  }
  return out;
}

BlurPyramid build_pyramid(const RasterImage& img, int level_count,
                          EdgeMode mode) {
  if (level_count < 1)
    throw std::invalid_argument("pyramid level count must be >= 1");
  std::vector<RasterImage> levels{img};
  for (int k = 1; k < level_count; ++k)
    levels.push_back(serial::blur(levels.back(), 1 << (k - 1), mode));
  return BlurPyramid(std::move(levels));
}

}  // namespace mock3d::serial
