// SPDX-License-Identifier: Apache-2.0
//
// Linear-light RGBA rasters, color transfer functions, bilinear sampling and
// full-resolution blur pyramids.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mock3d {

struct Rgba {
  float r = 0.0f;
  float g = 0.0f;
  float b = 0.0f;
  float a = 0.0f;

  friend bool operator==(const Rgba&, const Rgba&) = default;
};

enum class EdgeMode { kClamp, kWrap };

// Straight (non-premultiplied) alpha, row-major, top row first. Channel values
// are kept in [0,1].
class RasterImage {
 public:
  RasterImage() = default;
  RasterImage(int width, int height, Rgba fill = {});

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return pixels_.empty(); }
  std::size_t size() const { return pixels_.size(); }

  const Rgba& at(int x, int y) const { return pixels_[index(x, y)]; }
  Rgba& at(int x, int y) { return pixels_[index(x, y)]; }

  std::span<const Rgba> pixels() const { return pixels_; }
  std::span<Rgba> pixels() { return pixels_; }
  std::span<const Rgba> row(int y) const {
    return std::span<const Rgba>(pixels_).subspan(index(0, y), width_);
  }
  std::span<Rgba> row(int y) {
    return std::span<Rgba>(pixels_).subspan(index(0, y), width_);
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Rgba> pixels_;
};

// sRGB transfer functions. Out-of-range input is clamped to [0,1].
double srgb_to_linear(double v);
double linear_to_srgb(double v);

// 8-bit helpers. srgb8_to_linear is table driven and
// linear_to_srgb8(srgb8_to_linear(k)) == k for every k.
float srgb8_to_linear(std::uint8_t v);
std::uint8_t linear_to_srgb8(float v);
std::uint8_t unorm_to_8bit(float v);

// Converts every color channel (not alpha) between encodings.
RasterImage to_linear(const RasterImage& srgb);
RasterImage to_srgb(const RasterImage& linear);

// Texel-center convention: (0,0) is the center of the top-left texel and
// (1,1) the center of the bottom-right texel.
Rgba sample_bilinear(const RasterImage& img, double u, double v, EdgeMode mode);

// Same as sample_bilinear with coordinates already expressed in texels.
// Integer coordinates return the stored texel bit-exact.
Rgba sample_texel_space(const RasterImage& img, double px, double py,
                        EdgeMode mode);

// Area-average downscale so that max(width, height) <= max_dim. A max_dim of
// 0, or an image that already fits, is returned unchanged.
RasterImage downscale_to_fit(const RasterImage& img, int max_dim);

inline constexpr int kDefaultPyramidLevels = 6;

class BlurPyramid {
 public:
  BlurPyramid() = default;
  explicit BlurPyramid(std::vector<RasterImage> levels);

  int level_count() const { return static_cast<int>(levels_.size()); }
  const RasterImage& level(int k) const { return levels_[k]; }
  int width() const { return levels_.front().width(); }
  int height() const { return levels_.front().height(); }

 private:
  std::vector<RasterImage> levels_;
};

// Normalized binomial taps for a blur of the given radius (2*radius+1 taps).
std::vector<double> blur_kernel(int radius);

// One separable blur pass with the binomial kernel. kClamp extends the image
// by half-sample mirroring and kWrap by periodic tiling; both keep the image
// mean unchanged. OpenMP parallel over rows and columns.
RasterImage blur(const RasterImage& img, int radius, EdgeMode mode);

// Level 0 is the input; level k+1 = blur(level k, 2^k). Throws
// std::invalid_argument when level_count < 1.
BlurPyramid build_pyramid(const RasterImage& img, int level_count,
                          EdgeMode mode = EdgeMode::kClamp);

// Trilinear lookup. blur_level is clamped to [0, level_count - 1]; integer
// levels reduce to sample_bilinear on that level.
Rgba sample_blurred(const BlurPyramid& pyr, double u, double v,
                    double blur_level, EdgeMode mode);
Rgba sample_blurred_texel_space(const BlurPyramid& pyr, double px, double py,
                                double blur_level, EdgeMode mode);

}  // namespace mock3d
