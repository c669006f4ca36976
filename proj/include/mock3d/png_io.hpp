// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mock3d/image.hpp"

namespace mock3d {

class PngError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interleaved 8-bit RGBA, exactly as stored in the file.
struct Image8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgba;

  friend bool operator==(const Image8&, const Image8&) = default;
};

Image8 decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const Image8& img);

Image8 read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image8& img);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

// Color images: sRGB on disk, linear light in memory. Alpha is never
// gamma-converted.
RasterImage color_from_8bit(const Image8& img);
Image8 color_to_8bit(const RasterImage& linear);

// Data images (shape maps): channels are k/255 with no transfer function.
RasterImage raw_from_8bit(const Image8& img);
Image8 raw_to_8bit(const RasterImage& raw);

}  // namespace mock3d
