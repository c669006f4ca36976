// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "composite_kernel.hpp"
#include "mock3d/compositor.hpp"

namespace mock3d {

const char* to_string(BlendOp op) {
  switch (op) {
    case BlendOp::kShape: return "shape";
    case BlendOp::kOver: return "over";
    case BlendOp::kMultiply: return "multiply";
    case BlendOp::kAdd: return "add";
  }
  return "shape";
}

BlendOp blend_op_from_string(const std::string& name) {
  if (name == "shape") return BlendOp::kShape;
  if (name == "over") return BlendOp::kOver;
  if (name == "multiply") return BlendOp::kMultiply;
  if (name == "add") return BlendOp::kAdd;
  throw std::invalid_argument("unknown blend op '" + name + "'");
}

namespace {

void require_range(const char* field, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi))
    throw ParamError(field, "value " + std::to_string(v) + " outside [" +
                                std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
}

}  // namespace

void validate_params(const CompositeParams& p) {
  require_range("a", p.optics.a, -1.0, 1.0);
  require_range("w", p.optics.w.value(), 1e-12, 1.0);
  require_range("light_offset", p.optics.light_offset.x, -0.5, 0.5);
  require_range("light_offset", p.optics.light_offset.y, -0.5, 0.5);
  require_range("alpha_g", p.alpha_g, 0.0, 1.0);
  require_range("gloss", p.gloss, 0.0, 1.0);
  if (!(p.translucency_gain >= 0.0) || !std::isfinite(p.translucency_gain))
    throw ParamError("translucency_gain", "must be a finite value >= 0");
  if (p.levels < 1 || p.levels > kMaxPyramidLevels)
    throw ParamError("levels", "must be in [1, " +
                                   std::to_string(kMaxPyramidLevels) + "]");
}

double translucency_level(const ShapeTexel& t, const CompositeParams& p) {
  const double blur = p.translucency_gain * std::abs(p.optics.a) * t.d *
                      std::sqrt(t.x * t.x + t.y * t.y);
  return std::clamp(std::log2(1.0 + blur), 0.0,
                    static_cast<double>(p.levels - 1));
}

double gloss_level(const CompositeParams& p) {
  return p.gloss * (p.levels - 1);
}

namespace detail {

void check_composite_inputs(const ShapeMap& sm, const RasterImage* fg,
                            const RasterImage& bg) {
  if (bg.width() != sm.width() || bg.height() != sm.height())
    throw std::invalid_argument("background is " + std::to_string(bg.width()) +
                                "x" + std::to_string(bg.height()) +
                                " but shape map is " +
                                std::to_string(sm.width()) + "x" +
                                std::to_string(sm.height()));
  if (fg && (fg->width() != sm.width() || fg->height() != sm.height()))
    throw std::invalid_argument("foreground is " + std::to_string(fg->width()) +
                                "x" + std::to_string(fg->height()) +
                                " but shape map is " +
                                std::to_string(sm.width()) + "x" +
                                std::to_string(sm.height()));
}

Scene prepare_scene(const ShapeMap& sm, const RasterImage& bg,
                    const RasterImage* env, const CompositeParams& p) {
  Scene scene;
  scene.env_mode = p.env_tileable ? EdgeMode::kWrap : EdgeMode::kClamp;
  scene.gloss_level = gloss_level(p);

  int bg_levels = 1;
  if (p.translucency_gain > 0.0 && p.optics.a != 0.0) {
    double top = 0.0;
    for (const ShapeTexel& t : sm.texels())
      if (t.d != 0.0) top = std::max(top, translucency_level(t, p));
    bg_levels = static_cast<int>(std::ceil(top)) + 1;
  }
  const int env_levels = static_cast<int>(std::ceil(scene.gloss_level)) + 1;

  scene.bg = build_pyramid(bg, bg_levels, EdgeMode::kClamp);
  const RasterImage black(1, 1, {0.0f, 0.0f, 0.0f, 1.0f});
  scene.env = build_pyramid(env ? *env : black, env_levels, scene.env_mode);
  return scene;
}

Rgba shade(const ShapeTexel& texel, const Rgba& fi, double px, double py,
           const SceneView& scene, const CompositeParams& p) {
  const double alpha = p.alpha_g * fi.a;

  double s[3];
  if (texel.d == 0.0) {
    const Rgba b = sample_texel_space(scene.bg.level(0), px, py, EdgeMode::kClamp);
    s[0] = b.r;
    s[1] = b.g;
    s[2] = b.b;
  } else {
    const OpticsParams& o = p.optics;
    const double f = fresnel(incident_t(texel.x, texel.y, o.w), o.a,
                             o.curve_neg, o.curve_pos, o.mirror);

    const double scale_x = scene.bg.width() - 1;
    const double scale_y = scene.bg.height() - 1;
    const double rx = px - o.a * texel.d * texel.x * scale_x;
    const double ry = py - o.a * texel.d * texel.y * scale_y;
    const Rgba refr = sample_blurred_texel_space(
        scene.bg, rx, ry, translucency_level(texel, p), EdgeMode::kClamp);

    Rgba refl;
    if (f > 0.0) {
      const Vec2 e = reflect_uv(texel.x, texel.y, o.light_offset);
      refl = sample_blurred_texel_space(
          scene.env, e.x * (scene.env.width() - 1),
          e.y * (scene.env.height() - 1), scene.gloss_level, scene.env_mode);
    }
    s[0] = f * refl.r + (1.0 - f) * refr.r;
    s[1] = f * refl.g + (1.0 - f) * refr.g;
    s[2] = f * refl.b + (1.0 - f) * refr.b;
  }

  auto out = [alpha](double front, double back) {
    return static_cast<float>(
        std::clamp(alpha * front + (1.0 - alpha) * back, 0.0, 1.0));
  };
  return {out(fi.r, s[0]), out(fi.g, s[1]), out(fi.b, s[2]), 1.0f};
}

Rgba blend_pixel(BlendOp op, const Rgba& fg, const Rgba& bg, double alpha_g) {
  const double alpha = alpha_g * fg.a;
  auto h = [op](double f, double b) {
    switch (op) {
      case BlendOp::kMultiply: return f * b;
      case BlendOp::kAdd: return std::min(f + b, 1.0);
      case BlendOp::kShape:
      case BlendOp::kOver: break;
    }
    return f;
  };
  auto mix = [&](float f, float b) {
    return static_cast<float>(
        std::clamp(alpha * h(f, b) + (1.0 - alpha) * b, 0.0, 1.0));
  };
  return {mix(fg.r, bg.r), mix(fg.g, bg.g), mix(fg.b, bg.b),
          static_cast<float>(alpha + (1.0 - alpha) * bg.a)};
}

Rgba over_pixel(const Rgba& top, const Rgba& bottom) {
  const double ta = top.a;
  const double ba = bottom.a * (1.0 - ta);
  const double oa = ta + ba;
  if (oa <= 0.0) return {0.0f, 0.0f, 0.0f, 0.0f};
  auto mix = [&](float t, float b) {
    return static_cast<float>(std::clamp((t * ta + b * ba) / oa, 0.0, 1.0));
  };
  return {mix(top.r, bottom.r), mix(top.g, bottom.g), mix(top.b, bottom.b),
          static_cast<float>(oa)};
}

}  // namespace detail

Rgba composite_pixel(const ShapeTexel& texel, const Rgba& fi,
                     const BlurPyramid& bg_pyr, const BlurPyramid& env_pyr,
                     double u, double v, const CompositeParams& p) {
  const detail::SceneView scene{bg_pyr, env_pyr,
                      p.env_tileable ? EdgeMode::kWrap : EdgeMode::kClamp,
                      gloss_level(p)};
  return detail::shade(texel, fi, u * (bg_pyr.width() - 1),
                       v * (bg_pyr.height() - 1), scene, p);
}

RasterImage classic_blend(BlendOp op, const RasterImage& fg,
                          const RasterImage& bg, double alpha_g) {
  if (fg.width() != bg.width() || fg.height() != bg.height())
    throw std::invalid_argument("blend inputs must have equal dimensions");
  if (!(alpha_g >= 0.0 && alpha_g <= 1.0))
    throw ParamError("alpha_g", "value outside [0, 1]");
  RasterImage out(bg.width(), bg.height());
  const int h = bg.height();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    std::span<const Rgba> f = fg.row(y);
    std::span<const Rgba> b = bg.row(y);
    std::span<Rgba> o = out.row(y);
    for (std::size_t x = 0; x < o.size(); ++x)
      o[x] = detail::blend_pixel(op, f[x], b[x], alpha_g);
  }
  return out;
}

RasterImage over(const RasterImage& top, const RasterImage& bottom) {
  if (top.width() != bottom.width() || top.height() != bottom.height())
    throw std::invalid_argument("over: layers must have equal dimensions");
  RasterImage out(bottom.width(), bottom.height());
  const int h = bottom.height();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    std::span<const Rgba> t = top.row(y);
    std::span<const Rgba> b = bottom.row(y);
    std::span<Rgba> o = out.row(y);
    for (std::size_t x = 0; x < o.size(); ++x)
      o[x] = detail::over_pixel(t[x], b[x]);
  }
  return out;
}

RasterImage composite(const ShapeMap& sm, const RasterImage* fg,
                      const RasterImage& bg, const RasterImage* env,
                      const CompositeParams& p) {
  validate_params(p);
  detail::check_composite_inputs(sm, fg, bg);

  if (p.blend_op != BlendOp::kShape) {
    const RasterImage clear(bg.width(), bg.height());
    return classic_blend(p.blend_op, fg ? *fg : clear, bg, p.alpha_g);
  }

  const detail::Scene owned = detail::prepare_scene(sm, bg, env, p);
  const detail::SceneView scene = owned.view();
  RasterImage out(sm.width(), sm.height());
  const int w = sm.width();
  const int h = sm.height();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Rgba fi = fg ? fg->at(x, y) : Rgba{};
      out.at(x, y) = detail::shade(sm.at(x, y), fi, x, y, scene, p);
    }
  }
  return out;
}

}  // namespace mock3d
