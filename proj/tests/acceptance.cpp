// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// fails. `acceptance --write-goldens` regenerates tests/golden/*.png.

#include <omp.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>

#include "mock3d/cli.hpp"
#include "mock3d/compositor.hpp"
#include "mock3d/fixtures.hpp"
#include "mock3d/pipeline.hpp"
#include "mock3d/service.hpp"
#include "test_helpers.hpp"

using namespace mock3d;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const FresnelCurve kZeroCurve({{0, 0}, {1, 0}});

// 1. Empty shape map leaves the background untouched.
Outcome identity_chain() {
  const int n = 1024;
  const Image8 bg = fixture_8bit({"checker", n});
  const Image8 env = fixture_8bit({"sky", 256});
  const Image8 flat = fixture_8bit({"flat", n});
  CompositeParams p;
  bool exact = true;
  double worst_ms = 0;
  for (double a : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    p.optics.a = a;
    const auto t0 = std::chrono::steady_clock::now();
    const Image8 out = composite_8bit(flat, nullptr, bg, &env, p, {});
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    worst_ms = std::max(worst_ms, ms);
    exact = exact && out == bg;
  }
  // Blur options must not leak into the absent region either.
  p.gloss = 0.5;
  p.translucency_gain = 8.0;
  const Image8 small_bg = fixture_8bit({"checker", 128});
  exact = exact && composite_8bit(fixture_8bit({"flat", 128}), nullptr, small_bg,
                                  &env, p, {}) == small_bg;
  return {exact && worst_ms < 1000.0,
          std::string(exact ? "bit-exact" : "MISMATCH") +
              fmt(", slowest 1024^2 run %.0f ms", worst_ms)};
}

// 2. Refraction displacement is linear in a.
Outcome displacement_linearity() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0, 1), sym(-1, 1), ad(-1, 1);
  double worst = 0;
  bool zeros = true;
  for (int i = 0; i < 1000; ++i) {
    const double u = unit(rng), v = unit(rng), x = sym(rng), y = sym(rng),
                 d = unit(rng), a = ad(rng);
    const Vec2 one = refract_uv(u, v, x, y, d, 1.0);
    const Vec2 at_a = refract_uv(u, v, x, y, d, a);
    worst = std::max({worst, std::abs((at_a.x - u) - a * (one.x - u)),
                      std::abs((at_a.y - v) - a * (one.y - v))});
    const Vec2 z = refract_uv(u, v, x, y, d, 0.0);
    const Vec2 zd = refract_uv(u, v, x, y, 0.0, a);
    zeros = zeros && z.x == u && z.y == v && zd.x == u && zd.y == v;
  }
  return {worst <= 1e-12 && zeros,
          fmt("max deviation %.2e", worst) + (zeros ? ", zero cases exact" : ", zero cases FAIL")};
}

// 3. Rotation field against an independent affine resampler. At a = 1 the
// map is an integer lattice transform, so a fractional strength is checked too.
Outcome rotation_oracle() {
  const int n = 241;
  const RasterImage bg = testing::random_image(n, n, 3, true);
  CompositeParams p;
  p.optics.curve_neg = kZeroCurve;
  p.optics.curve_pos = kZeroCurve;
  std::string detail;
  double worst_all = 0;
  for (double a : {1.0, 0.37}) {
    p.optics.a = a;
    const RasterImage out = composite(gen_rotation_map(n), nullptr, bg, nullptr, p);
    const RasterImage ref = testing::reference_affine(bg, a);
    double worst = 0;
    for (int y = 5; y < n - 5; ++y)
      for (int x = 5; x < n - 5; ++x) {
        const Rgba& q = out.at(x, y);
        const Rgba& r = ref.at(x, y);
        worst = std::max({worst, std::abs(double(q.r) - r.r),
                          std::abs(double(q.g) - r.g), std::abs(double(q.b) - r.b)});
      }
    worst_all = std::max(worst_all, worst);
    detail += fmt("a=%.2f max error %.2e, ", a, worst);
  }
  return {worst_all <= 2.0 / 255, detail + fmt("limit %.2e", 2.0 / 255)};
}

// 4. Mirror reflection endpoints.
Outcome mirror_endpoints() {
  const RasterImage env = testing::random_image(33, 21, 4, true);
  const RasterImage bg = testing::random_image(40, 30, 5, true);
  CompositeParams p;
  p.optics.mirror = true;
  auto rgb_eq = [](const Rgba& a, const Rgba& b) {
    return a.r == b.r && a.g == b.g && a.b == b.b;
  };
  const RasterImage centre =
      composite(gen_flat_map(40, 30, 1.0), nullptr, bg, &env, p);
  bool ok = true;
  for (const Rgba& px : centre.pixels()) ok = ok && rgb_eq(px, env.at(16, 10));
  bool corners = true;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      const ShapeMap sm(8, 8, {double(sx), double(sy), 1.0});
      const RasterImage out =
          composite(sm, nullptr, RasterImage(8, 8, {0, 0, 0, 1}), &env, p);
      const Rgba& want = env.at(sx < 0 ? 0 : 32, sy < 0 ? 0 : 20);
      for (const Rgba& px : out.pixels()) corners = corners && rgb_eq(px, want);
    }
  return {ok && corners, std::string("centre ") + (ok ? "exact" : "MISMATCH") +
                             ", corners " + (corners ? "exact" : "MISMATCH")};
}

// 5. Fresnel blend endpoints and range.
Outcome fresnel_endpoints() {
  const FresnelCurve neg = default_curve_neg(), pos = default_curve_pos();
  double worst = 0;
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    worst = std::max({worst, std::abs(fresnel(t, -1, neg, pos, false) - neg(t)),
                      std::abs(fresnel(t, 1, neg, pos, false) - pos(t))});
  }
  bool in_range = true;
  for (int i = 0; i <= 100; ++i)
    for (int k = 0; k <= 40; ++k) {
      const double f = fresnel(i / 100.0, -1.0 + k / 20.0, neg, pos, false);
      in_range = in_range && f >= 0.0 && f <= 1.0;
    }
  return {worst <= 1e-9 && in_range,
          fmt("endpoint error %.2e", worst) + (in_range ? ", range ok" : ", OUT OF RANGE")};
}

// 6. Shape maps survive the PNG codec.
Outcome codec_roundtrip() {
  double worst = 0;
  for (std::uint32_t seed = 0; seed < 8; ++seed) {
    const ShapeMap sm = testing::random_shape_map(37 + seed, 29, 60 + seed);
    const RasterImage raw = encode_shape_map(sm);
    const RasterImage back = raw_from_8bit(decode_png(encode_png(raw_to_8bit(raw))));
    worst = std::max(worst, testing::max_channel_diff(raw, back));
  }
  return {worst <= 1.0 / 255, fmt("max channel error %.5f (limit %.5f)", worst, 1.0 / 255)};
}

// 7. Global alpha interpolates linearly.
Outcome alpha_interpolation() {
  const int n = 96;
  const ShapeMap sm = gen_sphere_map(n, 0.8, 1.0);
  const RasterImage fg = testing::random_image(n, n, 7);
  const RasterImage bg = color_from_8bit(fixture_8bit({"checker", n}));
  const RasterImage env = color_from_8bit(fixture_8bit({"sky", n}));
  CompositeParams p;
  p.optics.a = 0.5;
  p.gloss = 0.3;
  p.translucency_gain = 4.0;
  auto run = [&](double ag) {
    p.alpha_g = ag;
    return composite(sm, &fg, bg, &env, p);
  };
  const RasterImage lo = run(0.0), hi = run(1.0);
  int worst = 0;
  for (double ag : {0.0, 0.25, 0.5, 1.0}) {
    const RasterImage mid = run(ag);
    for (std::size_t i = 0; i < mid.size(); ++i) {
      const Rgba& m = mid.pixels()[i];
      const Rgba& a = lo.pixels()[i];
      const Rgba& b = hi.pixels()[i];
      for (auto c : {&Rgba::r, &Rgba::g, &Rgba::b}) {
        const float want = static_cast<float>((1 - ag) * a.*c + ag * b.*c);
        worst = std::max(worst, std::abs(int(linear_to_srgb8(m.*c)) -
                                         int(linear_to_srgb8(want))));
      }
    }
  }
  return {worst <= 1, fmt("max deviation %.0f/255", worst)};
}

// 8. Curl diagnostic.
Outcome curl_diagnostic_check() {
  const double c64 = curl_diagnostic(testing::hemisphere_gradient(64)).max_abs();
  const double c128 = curl_diagnostic(testing::hemisphere_gradient(128)).max_abs();
  const double c256 = curl_diagnostic(testing::hemisphere_gradient(256)).max_abs();
  const ScalarField rot = curl_diagnostic(gen_rotation_map(128));
  double worst = 0;
  for (int j = 1; j < 127; ++j)
    for (int i = 1; i < 127; ++i)
      worst = std::max(worst, std::abs(rot.at(i, j) + 4.0) / 4.0);
  const bool decreasing = c64 > c128 && c128 > c256;
  return {decreasing && worst <= 0.05,
          fmt("sphere %.2e > %.2e > %.2e", c64, c128, c256) +
              fmt(", rotation rel. error %.2e", worst)};
}

// 9. CLI/service parity and thread-count independence.
Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() /
                       ("mock3d_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const Image8 shape = fixture_8bit({"sphere", 200});
  const Image8 bg = fixture_8bit({"checker", 200});
  const Image8 env = fixture_8bit({"sky", 100});
  write_png(dir / "s.png", shape);
  write_png(dir / "b.png", bg);
  write_png(dir / "e.png", env);
  std::ostringstream out, err;
  const int code = run_cli({"composite", "--shape", (dir / "s.png").string(), "--bg",
                            (dir / "b.png").string(), "--env", (dir / "e.png").string(),
                            "--eta", "1.5", "--gloss", "0.3", "--translucency", "6",
                            "--out", (dir / "o.png").string()},
                           out, err);
  bool parity = false;
  if (code == 0) {
    CompositeService svc;
    auto up = [&](const Image8& img) {
      const auto b = encode_png(img);
      return nlohmann::json::parse(
                 svc.upload_asset(std::string(b.begin(), b.end())).body)
          .at("id");
    };
    const nlohmann::json req = {
        {"shape", up(shape)}, {"bg", up(bg)}, {"env", up(env)},
        {"params", {{"eta", 1.5}, {"gloss", 0.3}, {"translucency_gain", 6}}}};
    const HttpResult r = svc.composite(req.dump());
    const auto file = read_file_bytes(dir / "o.png");
    parity = r.status == 200 && r.body == std::string(file.begin(), file.end());
  }
  fs::remove_all(dir);

  CompositeParams p;
  p.optics.a = -0.7;
  p.gloss = 0.4;
  p.translucency_gain = 10.0;
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const Image8 ref = composite_8bit(shape, nullptr, bg, &env, p, {});
  bool stable = true;
  for (int threads : {1, 2, 4})
    for (int run = 0; run < 3; ++run) {
      omp_set_num_threads(threads);
      stable = stable && composite_8bit(shape, nullptr, bg, &env, p, {}) == ref;
    }
  omp_set_num_threads(saved);
  return {parity && stable, std::string("cli/service ") + (parity ? "identical" : "DIFFER") +
                                ", threads 1/2/4 x3 " + (stable ? "identical" : "DIFFER")};
}

// Golden scenes: sphere over a checkerboard with a sky environment.
struct Golden {
  const char* file;
  double a;
};
constexpr Golden kGoldens[] = {{"sphere_a_neg1.png", -1.0},
                               {"sphere_a_0.png", 0.0},
                               {"sphere_a_0p5.png", 0.5},
                               {"sphere_a_1.png", 1.0}};

Image8 render_golden(double a) {
  CompositeParams p;
  p.optics.a = a;
  p.gloss = 0.25;
  p.translucency_gain = 3.0;
  const Image8 env = fixture_8bit({"sky", 128});
  return composite_8bit(fixture_8bit({"sphere", 128}), nullptr,
                        fixture_8bit({"checker", 128}), &env, p, {});
}

// 10. Golden regression.
Outcome goldens() {
  int worst = 0;
  std::string missing;
  for (const Golden& g : kGoldens) {
    const fs::path path = fs::path(MOCK3D_GOLDEN_DIR) / g.file;
    if (!fs::exists(path)) {
      missing += std::string(" ") + g.file;
      continue;
    }
    const Image8 want = read_png(path);
    const Image8 got = render_golden(g.a);
    if (want.width != got.width || want.height != got.height) {
      worst = 255;
      continue;
    }
    for (std::size_t i = 0; i < got.rgba.size(); ++i)
      worst = std::max(worst, std::abs(int(got.rgba[i]) - int(want.rgba[i])));
  }
  if (!missing.empty()) return {false, "missing" + missing};
  return {worst <= 1, fmt("4 scenes, max deviation %.0f/255", worst)};
}

int write_goldens() {
  fs::create_directories(MOCK3D_GOLDEN_DIR);
  for (const Golden& g : kGoldens) {
    const fs::path path = fs::path(MOCK3D_GOLDEN_DIR) / g.file;
    write_png(path, render_golden(g.a));
    std::printf("wrote %s\n", path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--write-goldens") return write_goldens();

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"identity chain", identity_chain},
      {"displacement linearity", displacement_linearity},
      {"rotation oracle", rotation_oracle},
      {"mirror endpoints", mirror_endpoints},
      {"fresnel endpoints", fresnel_endpoints},
      {"codec roundtrip", codec_roundtrip},
      {"global alpha interpolation", alpha_interpolation},
      {"curl diagnostic", curl_diagnostic_check},
      {"determinism and parity", determinism},
      {"golden images", goldens},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
