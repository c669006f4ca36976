// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "mock3d/image.hpp"
#include "test_helpers.hpp"

using namespace mock3d;

TEST_CASE("srgb_to_linear endpoints and midpoint") {
  CHECK(srgb_to_linear(0.0) == 0.0);
  CHECK(srgb_to_linear(1.0) == 1.0);
  // ((0.5 + 0.055) / 1.055)^2.4
  CHECK(srgb_to_linear(0.5) == doctest::Approx(0.21404114048223255).epsilon(1e-12));
  CHECK(srgb_to_linear(-0.3) == 0.0);
  CHECK(srgb_to_linear(1.7) == 1.0);
}

TEST_CASE("srgb transfer functions invert each other and are monotone") {
  double prev = -1.0;
  for (int i = 0; i < 1024; ++i) {
    const double v = i / 1023.0;
    const double lin = srgb_to_linear(v);
    CHECK(std::abs(linear_to_srgb(lin) - v) <= 1e-6);
    CHECK(lin > prev);
    prev = lin;
  }
}

TEST_CASE("8-bit sRGB decode then encode is the identity") {
  for (int k = 0; k < 256; ++k) {
    const auto b = static_cast<std::uint8_t>(k);
    CHECK(linear_to_srgb8(srgb8_to_linear(b)) == b);
  }
}

TEST_CASE("raster dimensions are validated") {
  CHECK_THROWS_AS(RasterImage(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(RasterImage(3, -1), std::invalid_argument);
}

TEST_CASE("bilinear sampling of a constant image returns the constant") {
  const Rgba c{0.2f, 0.4f, 0.6f, 0.8f};
  const RasterImage img(7, 5, c);
  for (double u : {-0.7, 0.0, 0.13, 0.5, 0.99, 1.0, 2.3})
    for (double v : {-1.0, 0.0, 0.37, 1.0, 1.5})
      for (EdgeMode m : {EdgeMode::kClamp, EdgeMode::kWrap})
        CHECK(sample_bilinear(img, u, v, m) == c);
}

TEST_CASE("bilinear midpoint of black and white is mid grey") {
  RasterImage img(2, 1);
  img.at(0, 0) = {0, 0, 0, 1};
  img.at(1, 0) = {1, 1, 1, 1};
  const Rgba s = sample_bilinear(img, 0.5, 0.0, EdgeMode::kClamp);
  CHECK(s.r == doctest::Approx(0.5));
  CHECK(s.g == doctest::Approx(0.5));
  CHECK(s.b == doctest::Approx(0.5));
}

TEST_CASE("clamp mode replicates edges") {
  const RasterImage img = testing::random_image(9, 6, 7);
  for (double v : {0.0, 0.3, 1.0}) {
    CHECK(sample_bilinear(img, -0.25, v, EdgeMode::kClamp) ==
          sample_bilinear(img, 0.0, v, EdgeMode::kClamp));
    CHECK(sample_bilinear(img, 1.4, v, EdgeMode::kClamp) ==
          sample_bilinear(img, 1.0, v, EdgeMode::kClamp));
  }
}

TEST_CASE("texel centres are returned bit-exact in every mode") {
  const RasterImage img = testing::random_image(11, 8, 3);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      for (EdgeMode m : {EdgeMode::kClamp, EdgeMode::kWrap})
        CHECK(sample_texel_space(img, x, y, m) == img.at(x, y));
  CHECK(sample_bilinear(img, 0.0, 0.0, EdgeMode::kClamp) == img.at(0, 0));
  CHECK(sample_bilinear(img, 1.0, 1.0, EdgeMode::kWrap) == img.at(10, 7));
}

TEST_CASE("wrap mode tiles texel indices") {
  const RasterImage img = testing::random_image(5, 4, 11);
  CHECK(sample_texel_space(img, 5.0, 0.0, EdgeMode::kWrap) == img.at(0, 0));
  CHECK(sample_texel_space(img, -1.0, 2.0, EdgeMode::kWrap) == img.at(4, 2));
  CHECK(sample_texel_space(img, 2.0, -4.0, EdgeMode::kWrap) == img.at(2, 0));
  // Halfway between the last and first texel blends across the seam.
  const Rgba s = sample_texel_space(img, 4.5, 1.0, EdgeMode::kWrap);
  CHECK(s.r == doctest::Approx(0.5 * (img.at(4, 1).r + img.at(0, 1).r)));
}

TEST_CASE("downscale_to_fit averages areas and keeps small images") {
  const RasterImage img = testing::random_image(8, 4, 5);
  CHECK(downscale_to_fit(img, 0) == img);
  CHECK(downscale_to_fit(img, 8) == img);

  const RasterImage half = downscale_to_fit(img, 4);
  REQUIRE(half.width() == 4);
  REQUIRE(half.height() == 2);
  const Rgba& p = half.at(1, 1);
  const double expect = (img.at(2, 2).g + img.at(3, 2).g + img.at(2, 3).g +
                         img.at(3, 3).g) / 4.0;
  CHECK(p.g == doctest::Approx(expect).epsilon(1e-6));

  const RasterImage flat(300, 100, {0.25f, 0.5f, 0.75f, 1.0f});
  const RasterImage small = downscale_to_fit(flat, 64);
  CHECK(small.width() == 64);
  CHECK(small.height() == 21);
  CHECK(testing::max_channel_diff(small, RasterImage(64, 21, flat.at(0, 0))) < 1e-6);
}
