// SPDX-License-Identifier: Apache-2.0

#include <png.h>

#include <cstring>
#include <fstream>
#include <iterator>

#include "mock3d/png_io.hpp"

namespace mock3d {

Image8 decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
    throw PngError(std::string("malformed PNG: ") + image.message);

  image.format = PNG_FORMAT_RGBA;
  Image8 out;
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.rgba.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, out.rgba.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw PngError("malformed PNG: " + msg);
  }
  if (out.width < 1 || out.height < 1) throw PngError("PNG has no pixels");
  return out;
}

std::vector<std::uint8_t> encode_png(const Image8& img) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  image.format = PNG_FORMAT_RGBA;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, img.rgba.data(), 0,
                                 nullptr))
    throw PngError(std::string("PNG encode failed: ") + image.message);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, img.rgba.data(),
                                 0, nullptr))
    throw PngError(std::string("PNG encode failed: ") + image.message);
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PngError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Image8 read_png(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file_bytes(path);
  try {
    return decode_png(bytes);
  } catch (const PngError& e) {
    throw PngError(path.string() + ": " + e.what());
  }
}

void write_png(const std::filesystem::path& path, const Image8& img) {
  const std::vector<std::uint8_t> bytes = encode_png(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PngError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw PngError("short write to " + path.string());
}

RasterImage color_from_8bit(const Image8& img) {
  RasterImage out(img.width, img.height);
  std::span<Rgba> px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const std::uint8_t* s = &img.rgba[4 * i];
    px[i] = {srgb8_to_linear(s[0]), srgb8_to_linear(s[1]),
             srgb8_to_linear(s[2]), s[3] / 255.0f};
  }
  return out;
}

Image8 color_to_8bit(const RasterImage& linear) {
  Image8 out{linear.width(), linear.height(), {}};
  out.rgba.resize(linear.size() * 4);
  std::span<const Rgba> px = linear.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    std::uint8_t* d = &out.rgba[4 * i];
    d[0] = linear_to_srgb8(px[i].r);
    d[1] = linear_to_srgb8(px[i].g);
    d[2] = linear_to_srgb8(px[i].b);
    d[3] = unorm_to_8bit(px[i].a);
  }
  return out;
}

RasterImage raw_from_8bit(const Image8& img) {
  RasterImage out(img.width, img.height);
  std::span<Rgba> px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const std::uint8_t* s = &img.rgba[4 * i];
    px[i] = {s[0] / 255.0f, s[1] / 255.0f, s[2] / 255.0f, s[3] / 255.0f};
  }
  return out;
}

Image8 raw_to_8bit(const RasterImage& raw) {
  Image8 out{raw.width(), raw.height(), {}};
  out.rgba.resize(raw.size() * 4);
  std::span<const Rgba> px = raw.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    std::uint8_t* d = &out.rgba[4 * i];
    d[0] = unorm_to_8bit(px[i].r);
    d[1] = unorm_to_8bit(px[i].g);
    d[2] = unorm_to_8bit(px[i].b);
    d[3] = unorm_to_8bit(px[i].a);
  }
  return out;
}

}  // namespace mock3d
