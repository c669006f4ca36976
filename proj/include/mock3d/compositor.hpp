// SPDX-License-Identifier: Apache-2.0
//
// Whole-image compositing. The mock-3D equation is
//
//   CI = alpha * FI + (1 - alpha) * (f * R(EI) + (1 - f) * T(BI))
//
// with alpha = alpha_g * alpha_FI, R/T the optics mappings and f the Fresnel
// weight. Where the shape map has d == 0 the object is absent: f = 0 and T
// is the identity.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mock3d/image.hpp"
#include "mock3d/optics.hpp"
#include "mock3d/shapemap.hpp"

namespace mock3d {

enum class BlendOp { kShape, kOver, kMultiply, kAdd };

const char* to_string(BlendOp op);
// Throws std::invalid_argument on unknown names.
BlendOp blend_op_from_string(const std::string& name);

struct CompositeParams {
  OpticsParams optics;
  double alpha_g = 1.0;
  double gloss = 0.0;              // [0, 1], fraction of the pyramid depth
  double translucency_gain = 0.0;  // texels of blur per unit displacement
  bool env_tileable = false;
  BlendOp blend_op = BlendOp::kShape;
  int levels = kDefaultPyramidLevels;
};

// Invalid parameter; field() names the offending parameter using the JSON
// key spelling ("a", "alpha_g", ...).
class ParamError : public std::invalid_argument {
 public:
  ParamError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

inline constexpr int kMaxPyramidLevels = 12;

// Throws ParamError for anything outside the documented ranges.
void validate_params(const CompositeParams& p);

// Pyramid level used for translucent refraction at one texel.
double translucency_level(const ShapeTexel& t, const CompositeParams& p);
double gloss_level(const CompositeParams& p);

// Single-pixel evaluation at shape-map coordinate (u, v). bg_pyr must have the
// shape map's dimensions. Returns linear RGB with alpha 1.
Rgba composite_pixel(const ShapeTexel& texel, const Rgba& fi,
                     const BlurPyramid& bg_pyr, const BlurPyramid& env_pyr,
                     double u, double v, const CompositeParams& p);

// fg and env are optional (nullptr). A missing fg is fully transparent and a
// missing env is black. fg and bg must match the shape map's dimensions.
// blend_op other than kShape falls back to classic_blend(fg, bg) and ignores
// the shape map and environment. OpenMP parallel over rows.
RasterImage composite(const ShapeMap& sm, const RasterImage* fg,
                      const RasterImage& bg, const RasterImage* env,
                      const CompositeParams& p);

// Classic CI = alpha H(FI, BI) + (1 - alpha) BI with alpha = alpha_g * FI.a.
// H is FI (over), FI * BI (multiply) or min(FI + BI, 1) (add). Output alpha is
// alpha + (1 - alpha) * BI.a.
RasterImage classic_blend(BlendOp op, const RasterImage& fg,
                          const RasterImage& bg, double alpha_g);

// Straight-alpha source-over of `top` onto `bottom` (same dimensions).
RasterImage over(const RasterImage& top, const RasterImage& bottom);

enum class LayerRole { kPaint, kShapeMap, kForeground };

struct StackLayer {
  RasterImage image;  // shape-map layers hold raw (non-sRGB) channels
  LayerRole role = LayerRole::kPaint;
};

// Layers ordered back to front. Paint layers with index < eye sit behind the
// eye layer and are refracted; paint layers with index >= eye are on the
// viewer's side and are reflected.
struct LayerStack {
  std::vector<StackLayer> layers;
  std::size_t eye = 0;
};

void validate_stack(const LayerStack& stack);

// Back-side paint layers are collapsed with over into BI, eye-side paint
// layers are collapsed with over onto env into EI, then composite() runs once.
RasterImage composite_stack(const LayerStack& stack, const RasterImage* env,
                            const CompositeParams& p,
                            const ShapeDecodeOptions& decode = {});

}  // namespace mock3d
