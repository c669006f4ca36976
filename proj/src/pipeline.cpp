// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <optional>

#include "mock3d/fixtures.hpp"
#include "mock3d/pipeline.hpp"

namespace mock3d {

ShapeMap shape_from_8bit(const Image8& img, const PipelineOptions& opts) {
  RasterImage raw = raw_from_8bit(img);
  if (opts.shape_srgb) raw = to_linear(raw);
  raw = downscale_to_fit(raw, opts.max_dim);
  return decode_shape_map(raw, {.d_from_z = opts.d_from_z});
}

Image8 composite_8bit(const Image8& shape, const Image8* fg, const Image8& bg,
                      const Image8* env, const CompositeParams& p,
                      const PipelineOptions& opts) {
  const ShapeMap sm = shape_from_8bit(shape, opts);
  auto load = [&](const Image8& img) {
    return downscale_to_fit(color_from_8bit(img), opts.max_dim);
  };
  const RasterImage bg_img = load(bg);
  std::optional<RasterImage> fg_img;
  std::optional<RasterImage> env_img;
  if (fg) fg_img = load(*fg);
  if (env) env_img = load(*env);
  const RasterImage out =
      composite(sm, fg_img ? &*fg_img : nullptr, bg_img,
                env_img ? &*env_img : nullptr, p);
  return color_to_8bit(out);
}

}  // namespace mock3d


namespace mock3d {

Image8 fixture_8bit(const FixtureSpec& spec) {
  if (spec.size < 2 || spec.size > 8192)
    throw std::invalid_argument("fixture size must be in [2, 8192]");
  if (spec.kind == "sphere")
    return raw_to_8bit(encode_shape_map(
        gen_sphere_map(spec.size, spec.radius, spec.thickness)));
  if (spec.kind == "rotation")
    return raw_to_8bit(encode_shape_map(gen_rotation_map(spec.size)));
  if (spec.kind == "flat")
    return raw_to_8bit(encode_shape_map(gen_flat_map(spec.size, spec.size)));
  if (spec.kind == "checker")
    return color_to_8bit(
        gen_checker_image(spec.size, spec.size, std::max(1, spec.size / 8)));
  if (spec.kind == "sky")
    return color_to_8bit(gen_sky_image(spec.size, spec.size));
  throw std::invalid_argument("unknown fixture kind '" + spec.kind + "'");
}

}  // namespace mock3d
