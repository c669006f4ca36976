// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mock3d/image.hpp"

namespace mock3d {

BlurPyramid::BlurPyramid(std::vector<RasterImage> levels)
    : levels_(std::move(levels)) {
  if (levels_.empty())
    throw std::invalid_argument("pyramid needs at least one level");
}

std::vector<double> blur_kernel(int radius) {
  if (radius < 0) throw std::invalid_argument("blur radius must be >= 0");
  // Binomial(2r) taps; variance r/2. Evaluated in log space so large radii
  // do not overflow.
  const int n = 2 * radius;
  std::vector<double> taps(static_cast<std::size_t>(n) + 1);
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    taps[j] = std::exp(std::lgamma(n + 1.0) - std::lgamma(j + 1.0) -
                       std::lgamma(n - j + 1.0) - n * std::log(2.0));
    sum += taps[j];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

namespace {

int edge_index(long i, int n, EdgeMode mode) {
  if (i >= 0 && i < n) return static_cast<int>(i);
  if (mode == EdgeMode::kWrap) {
    long m = i % n;
    return static_cast<int>(m < 0 ? m + n : m);
  }
  // Half-sample symmetric: ... 1 0 | 0 1 ... n-1 | n-1 n-2 ...
  const long period = 2L * n;
  long m = i % period;
  if (m < 0) m += period;
  return static_cast<int>(m < n ? m : period - 1 - m);
}

}  // namespace

RasterImage blur(const RasterImage& img, int radius, EdgeMode mode) {
  if (radius == 0) return img;
  const std::vector<double> taps = blur_kernel(radius);
  const int w = img.width();
  const int h = img.height();
  RasterImage tmp(w, h);
  RasterImage out(w, h);

#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[4] = {0, 0, 0, 0};
      for (int j = -radius; j <= radius; ++j) {
        const Rgba& p = img.at(edge_index(x + j, w, mode), y);
        const double t = taps[j + radius];
        acc[0] += t * p.r;
        acc[1] += t * p.g;
        acc[2] += t * p.b;
        acc[3] += t * p.a;
      }
      tmp.at(x, y) = {static_cast<float>(acc[0]), static_cast<float>(acc[1]),
                      static_cast<float>(acc[2]), static_cast<float>(acc[3])};
    }
  }

#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[4] = {0, 0, 0, 0};
      for (int j = -radius; j <= radius; ++j) {
        const Rgba& p = tmp.at(x, edge_index(y + j, h, mode));
        const double t = taps[j + radius];
        acc[0] += t * p.r;
        acc[1] += t * p.g;
        acc[2] += t * p.b;
        acc[3] += t * p.a;
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
  std::vector<RasterImage> levels;
  levels.reserve(level_count);
  levels.push_back(img);
  for (int k = 1; k < level_count; ++k)
    levels.push_back(blur(levels.back(), 1 << (k - 1), mode));
  return BlurPyramid(std::move(levels));
}

Rgba sample_blurred_texel_space(const BlurPyramid& pyr, double px, double py,
                                double blur_level, EdgeMode mode) {
  const double top = pyr.level_count() - 1;
  const double level = std::clamp(blur_level, 0.0, top);
  const double base = std::floor(level);
  const double frac = level - base;
  const int k = static_cast<int>(base);
  const Rgba lo = sample_texel_space(pyr.level(k), px, py, mode);
  if (frac == 0.0) return lo;
  const Rgba hi = sample_texel_space(pyr.level(k + 1), px, py, mode);
  auto mix = [frac](float a, float b) {
    return static_cast<float>((1.0 - frac) * a + frac * b);
  };
  return {mix(lo.r, hi.r), mix(lo.g, hi.g), mix(lo.b, hi.b), mix(lo.a, hi.a)};
}

Rgba sample_blurred(const BlurPyramid& pyr, double u, double v,
                    double blur_level, EdgeMode mode) {
  return sample_blurred_texel_space(pyr, u * (pyr.width() - 1),
                                    v * (pyr.height() - 1), blur_level, mode);
}

}  // namespace mock3d
