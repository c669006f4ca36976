// SPDX-License-Identifier: Apache-2.0
//
// Linearized reflection, refraction and Fresnel mappings driven by a shape
// map texel.

#pragma once

#include <utility>
#include <vector>

#include "mock3d/shapemap.hpp"

namespace mock3d {

struct CurveKnot {
  double t = 0.0;
  double f = 0.0;

  friend bool operator==(const CurveKnot&, const CurveKnot&) = default;
};

// Piecewise-linear f(t) on [0, 1]. Construction validates: at least two
// knots, first t == 0, last t == 1, strictly ascending t, f in [0, 1].
class FresnelCurve {
 public:
  explicit FresnelCurve(std::vector<CurveKnot> knots);

  const std::vector<CurveKnot>& knots() const { return knots_; }
  // t is clamped to [0, 1]; exact at knot positions.
  double operator()(double t) const;

  friend bool operator==(const FresnelCurve&, const FresnelCurve&) = default;

 private:
  std::vector<CurveKnot> knots_;
};

FresnelCurve default_curve_pos();
FresnelCurve default_curve_neg();

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct OpticsParams {
  double a = 0.0;  // pseudo index of refraction, [-1, 1]
  WScale w;
  Vec2 light_offset;  // each component in [-0.5, 0.5]
  FresnelCurve curve_neg = default_curve_neg();
  FresnelCurve curve_pos = default_curve_pos();
  bool mirror = false;
};

// Environment lookup coordinate: (0.5x + 0.5 + lx, 0.5y + 0.5 + ly), each
// clamped to [0, 1].
Vec2 reflect_uv(double x, double y, Vec2 light_offset);

// (u - a d x, v - a d y). Not clamped; the sampler applies the edge mode.
Vec2 refract_uv(double u, double v, double x, double y, double d, double a);

// clamp(log2(eta), -1, 1). Throws std::invalid_argument for eta <= 0.
double a_from_eta(double eta);

// Convex blend of the two endpoint curves: ((1-a)/2) neg(t) + ((1+a)/2) pos(t).
// mirror forces 1.
double fresnel(double t, double a, const FresnelCurve& curve_neg,
               const FresnelCurve& curve_pos, bool mirror);

}  // namespace mock3d
