// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cmath>

#include "mock3d/image.hpp"

namespace mock3d {

double srgb_to_linear(double v) {
  v = std::clamp(v, 0.0, 1.0);
  if (v <= 0.04045) return v / 12.92;
  return std::pow((v + 0.055) / 1.055, 2.4);
}

double linear_to_srgb(double v) {
  v = std::clamp(v, 0.0, 1.0);
  if (v <= 0.0031308) return v * 12.92;
  return 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

namespace {

const std::array<float, 256>& srgb8_table() {
  static const std::array<float, 256> table = [] {
    std::array<float, 256> t{};
    for (int k = 0; k < 256; ++k)
      t[k] = static_cast<float>(srgb_to_linear(k / 255.0));
    return t;
  }();
  return table;
}

}  // namespace

float srgb8_to_linear(std::uint8_t v) { return srgb8_table()[v]; }

std::uint8_t unorm_to_8bit(float v) {
  const double c = std::clamp(static_cast<double>(v), 0.0, 1.0);
  return static_cast<std::uint8_t>(std::lround(c * 255.0));
}

std::uint8_t linear_to_srgb8(float v) {
  return static_cast<std::uint8_t>(
      std::lround(linear_to_srgb(static_cast<double>(v)) * 255.0));
}

RasterImage to_linear(const RasterImage& srgb) {
  RasterImage out = srgb;
  for (Rgba& p : out.pixels()) {
    p.r = static_cast<float>(srgb_to_linear(p.r));
    p.g = static_cast<float>(srgb_to_linear(p.g));
    p.b = static_cast<float>(srgb_to_linear(p.b));
  }
  return out;
}

RasterImage to_srgb(const RasterImage& linear) {
  RasterImage out = linear;
  for (Rgba& p : out.pixels()) {
    p.r = static_cast<float>(linear_to_srgb(p.r));
    p.g = static_cast<float>(linear_to_srgb(p.g));
    p.b = static_cast<float>(linear_to_srgb(p.b));
  }
  return out;
}

}  // namespace mock3d
