// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>

#include "mock3d/shapemap.hpp"

namespace mock3d {

ShapeMap::ShapeMap(int width, int height, ShapeTexel fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("shape map dimensions must be at least 1x1");
  texels_.assign(static_cast<std::size_t>(width) * height, fill);
}

ShapeMap decode_shape_map(const RasterImage& raw,
                          const ShapeDecodeOptions& opts) {
  ShapeMap sm(raw.width(), raw.height());
  std::span<const Rgba> src = raw.pixels();
  std::span<ShapeTexel> dst = sm.texels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Rgba& p = src[i];
    ShapeTexel t;
    t.x = std::clamp(2.0 * p.r - 1.0, -1.0, 1.0);
    t.y = std::clamp(2.0 * p.g - 1.0, -1.0, 1.0);
    if (opts.d_from_z)
      t.d = p.a > 0.0f ? normal_z(t.x, t.y, WScale(1.0)) : 0.0;
    else
      t.d = std::clamp(static_cast<double>(p.b), 0.0, 1.0);
    dst[i] = t;
  }
  return sm;
}

RasterImage encode_shape_map(const ShapeMap& sm) {
  RasterImage out(sm.width(), sm.height());
  std::span<const ShapeTexel> src = sm.texels();
  std::span<Rgba> dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const ShapeTexel& t = src[i];
    dst[i] = {static_cast<float>(0.5 * (t.x + 1.0)),
              static_cast<float>(0.5 * (t.y + 1.0)), static_cast<float>(t.d),
              1.0f};
  }
  return out;
}

double normal_z(double x, double y, WScale w) {
  const double ww = w.value() * w.value();
  return std::sqrt(std::max(0.0, 1.0 - ww * x * x - ww * y * y));
}

double incident_t(double x, double y, WScale w) {
  return 1.0 - normal_z(x, y, w);
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

ScalarField curl_diagnostic(const ShapeMap& sm) {
  const int w = sm.width();
  const int h = sm.height();
  if (w < 2 || h < 2)
    throw std::invalid_argument("curl diagnostic needs at least 2x2 texels");
  ScalarField out{w, h, std::vector<double>(static_cast<std::size_t>(w) * h)};
  const double inv_du = 0.5 * (w - 1);
  const double inv_dv = 0.5 * (h - 1);
  for (int j = 1; j + 1 < h; ++j) {
    for (int i = 1; i + 1 < w; ++i) {
      const ShapeTexel& l = sm.at(i - 1, j);
      const ShapeTexel& r = sm.at(i + 1, j);
      const ShapeTexel& u = sm.at(i, j - 1);
      const ShapeTexel& dn = sm.at(i, j + 1);
      if (sm.at(i, j).d == 0.0 || l.d == 0.0 || r.d == 0.0 || u.d == 0.0 ||
          dn.d == 0.0)
        continue;
      out.values[static_cast<std::size_t>(j) * w + i] =
          (r.y - l.y) * inv_du - (dn.x - u.x) * inv_dv;
    }
  }
  return out;
}

ShapeStats inspect_shape_map(const ShapeMap& sm) {
  ShapeStats s;
  s.width = sm.width();
  s.height = sm.height();
  constexpr double inf = std::numeric_limits<double>::infinity();
  s.x = s.y = s.d = {inf, -inf, 0.0};
  std::size_t covered = 0;
  auto accum = [](ChannelStats& c, double v) {
    c.min = std::min(c.min, v);
    c.max = std::max(c.max, v);
    c.mean += v;
  };
  for (const ShapeTexel& t : sm.texels()) {
    accum(s.x, t.x);
    accum(s.y, t.y);
    accum(s.d, t.d);
    if (t.d != 0.0) ++covered;
  }
  const double n = static_cast<double>(sm.size());
  s.x.mean /= n;
  s.y.mean /= n;
  s.d.mean /= n;
  s.coverage = covered / n;
  if (sm.width() >= 2 && sm.height() >= 2)
    s.max_abs_curl = curl_diagnostic(sm).max_abs();
  return s;
}

ShapeMap gen_sphere_map(int size, double radius, double thickness_scale) {
  if (size < 2) throw std::invalid_argument("sphere fixture size must be >= 2");
  if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be > 0");
  if (!(thickness_scale > 0.0 && thickness_scale <= 1.0))
    throw std::invalid_argument("thickness scale must be in (0, 1]");
  ShapeMap sm(size, size);
  const double c = 0.5 * (size - 1);
  const double r_px = radius * 0.5 * size;
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      const double nx = (i - c) / r_px;
      const double ny = (j - c) / r_px;
      const double rr = nx * nx + ny * ny;
      if (rr >= 1.0) continue;
      // Orthographic chord through the sphere is 2 * R * nz; normalized to
      // the polar chord it is nz.
      const double nz = std::sqrt(1.0 - rr);
      sm.at(i, j) = {nx, ny, nz * thickness_scale};
    }
  }
  return sm;
}

ShapeMap gen_rotation_map(int size) {
  if (size < 2)
    throw std::invalid_argument("rotation fixture size must be >= 2");
  ShapeMap sm(size, size);
  for (int j = 0; j < size; ++j) {
    const double v = static_cast<double>(j) / (size - 1);
    for (int i = 0; i < size; ++i) {
      const double u = static_cast<double>(i) / (size - 1);
      sm.at(i, j) = {2.0 * (v - 0.5), -2.0 * (u - 0.5), 1.0};
    }
  }
  return sm;
}

ShapeMap gen_flat_map(int width, int height, double d) {
  if (!(d >= 0.0 && d <= 1.0))
    throw std::invalid_argument("flat fixture d must be in [0, 1]");
  return ShapeMap(width, height, {0.0, 0.0, d});
}

}  // namespace mock3d
