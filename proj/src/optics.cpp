// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mock3d/optics.hpp"

namespace mock3d {

FresnelCurve::FresnelCurve(std::vector<CurveKnot> knots)
    : knots_(std::move(knots)) {
  if (knots_.size() < 2)
    throw std::invalid_argument("Fresnel curve needs at least 2 knots");
  if (knots_.front().t != 0.0 || knots_.back().t != 1.0)
    throw std::invalid_argument("Fresnel curve must span t = 0 to t = 1");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const CurveKnot& k = knots_[i];
    if (!std::isfinite(k.t) || !std::isfinite(k.f) || k.f < 0.0 || k.f > 1.0)
      throw std::invalid_argument("Fresnel knot " + std::to_string(i) +
                                  " has f outside [0, 1]");
    if (i > 0 && !(k.t > knots_[i - 1].t))
      throw std::invalid_argument("Fresnel knots must have ascending t");
  }
}

double FresnelCurve::operator()(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  auto hi = std::lower_bound(
      knots_.begin(), knots_.end(), t,
      [](const CurveKnot& k, double value) { return k.t < value; });
  if (hi->t == t) return hi->f;
  auto lo = hi - 1;
  const double s = (t - lo->t) / (hi->t - lo->t);
  return lo->f + s * (hi->f - lo->f);
}

FresnelCurve default_curve_pos() {
  return FresnelCurve({{0.0, 0.04}, {0.7, 0.12}, {1.0, 1.0}});
}

FresnelCurve default_curve_neg() {
  return FresnelCurve({{0.0, 0.04}, {0.5, 0.5}, {1.0, 1.0}});
}

Vec2 reflect_uv(double x, double y, Vec2 light_offset) {
  return {std::clamp(0.5 * x + 0.5 + light_offset.x, 0.0, 1.0),
          std::clamp(0.5 * y + 0.5 + light_offset.y, 0.0, 1.0)};
}

Vec2 refract_uv(double u, double v, double x, double y, double d, double a) {
  return {u - a * d * x, v - a * d * y};
}

double a_from_eta(double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
  return std::clamp(std::log2(eta), -1.0, 1.0);
}

double fresnel(double t, double a, const FresnelCurve& curve_neg,
               const FresnelCurve& curve_pos, bool mirror) {
  if (mirror) return 1.0;
  a = std::clamp(a, -1.0, 1.0);
  if (a == 1.0) return curve_pos(t);
  if (a == -1.0) return curve_neg(t);
  const double f = 0.5 * (1.0 - a) * curve_neg(t) + 0.5 * (1.0 + a) * curve_pos(t);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace mock3d
